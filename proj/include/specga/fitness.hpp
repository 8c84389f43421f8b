#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "specga/genome.hpp"

// Weighted-sum fitness of a chromosome against a QoS request.
//
// Per gene, the deviation score is
//
//   f = w * |x - x_d| / x_d   when |x - x_d| < x_d,
//   f = w                     otherwise (capped at the gene's weight),
//
// so 0 <= f <= w. The cumulative fitness F sums the four gene scores and,
// with weights summing to 1, lies in [0, 1]; lower is better. The percent
// score 100 * (1 - F) reads the other way: higher is better.

namespace specga {

inline constexpr std::array<double, kGeneCount> kEqualWeights{0.25, 0.25, 0.25, 0.25};

inline constexpr double kWeightSumTolerance = 1e-12;

// Desired gene values and the per-gene weights supplied by the user or
// application.
struct QosRequest {
  Chromosome target;
  std::array<double, kGeneCount> weights = kEqualWeights;
};

inline void validate(const QosRequest& q) {
  validate(q.target);
  double sum = 0.0;
  for (double w : q.weights) {
    if (!(w >= 0.0)) throw std::invalid_argument("QoS weights must be non-negative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    throw std::invalid_argument("QoS weights must sum to 1, got " + std::to_string(sum));
  }
}

// Deviation score of one gene index x against the desired index x_d.
inline double gene_fitness(int x, int x_d, double w) {
  if (x_d < 1) throw std::invalid_argument("desired gene index must be at least 1");
  if (!(w >= 0.0 && w <= 1.0)) throw std::invalid_argument("gene weight must lie in [0, 1]");
  const int deviation = x >= x_d ? x - x_d : x_d - x;
  if (deviation < x_d) {
    return w * static_cast<double>(deviation) / static_cast<double>(x_d);
  }
  return w;
}

struct FitnessReport {
  std::array<double, kGeneCount> per_gene{};
  double cumulative = 0.0;
  double percent = 100.0;

  friend constexpr bool operator==(const FitnessReport&, const FitnessReport&) = default;
};

constexpr double percent_from_cumulative(double cumulative) {
  return 100.0 * (1.0 - cumulative);
}

namespace detail {

// Cumulative weighted deviation of `c` from `target`, without the report
// plumbing. Callers guarantee both chromosomes are valid.
inline double cumulative_deviation(const Chromosome& c, const Chromosome& target,
                                   const std::array<double, kGeneCount>& weights) {
  double sum = 0.0;
  for (int i = 0; i < kGeneCount; ++i) {
    const Gene gene = kGeneSpecs[i].gene;
    sum += gene_fitness(gene_value(c, gene), gene_value(target, gene), weights[i]);
  }
  return sum;
}

}  // namespace detail

inline FitnessReport evaluate(const Chromosome& c, const QosRequest& q) {
  validate(c);
  validate(q);
  FitnessReport report;
  for (int i = 0; i < kGeneCount; ++i) {
    const Gene gene = kGeneSpecs[i].gene;
    report.per_gene[i] = gene_fitness(gene_value(c, gene), gene_value(q.target, gene), q.weights[i]);
    report.cumulative += report.per_gene[i];
  }
  report.percent = percent_from_cumulative(report.cumulative);
  return report;
}

// Selection quality in [0, 1]: 1 - F, so better chromosomes spin a larger
// slice of the roulette wheel.
constexpr double quality(const FitnessReport& report) {
  return 1.0 - report.cumulative;
}

namespace detail {

inline std::string format_fixed6(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.6f", value);
  return buffer;
}

}  // namespace detail

// One CSV row fragment: f1,f2,f3,f4,F,percent with fixed 6-decimal fields.
inline std::string csv_fragment(const FitnessReport& report) {
  std::string row;
  for (double f : report.per_gene) {
    row += detail::format_fixed6(f);
    row += ',';
  }
  row += detail::format_fixed6(report.cumulative);
  row += ',';
  row += detail::format_fixed6(report.percent);
  return row;
}

}  // namespace specga
