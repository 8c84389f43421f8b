#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "specga/fitness.hpp"
#include "specga/genome.hpp"
#include "specga/rng.hpp"

// The generational loop: evaluate, copy elites, breed by roulette-selected
// pairing with gene-boundary crossover and single-bit mutation, repeat until
// the target score is reached or the generation budget runs out.

namespace specga {

// Unconstrained explores the whole chromosome space; PoolConstrained snaps
// every bred offspring back to the nearest member of the initial pool, so
// only sensed solutions ever enter the population.
enum class SearchMode { Unconstrained, PoolConstrained };

enum class Termination { MaxGenerations, TargetReached };

struct GaConfig {
  int population_size = 20;
  double crossover_fraction = 0.8;
  int elite_count = 2;
  // Per offspring; a triggered mutation flips one uniformly chosen bit, so
  // the default works out to roughly the classic 1/L per-bit rate for the
  // 19-bit genotype. Elitism protects the best chromosome, making the hot
  // rate safe; colder rates routinely stall short of the exact optimum.
  double mutation_rate = 0.9;
  int max_generations = 100;
  std::optional<double> target_percent;  // early stop once the best percent reaches this
  SearchMode mode = SearchMode::Unconstrained;
  std::uint64_t rng_seed = 0;
};

inline void validate(const GaConfig& config) {
  if (config.population_size < 2) {
    throw std::invalid_argument("population_size must be at least 2");
  }
  if (config.elite_count < 0 || config.elite_count >= config.population_size) {
    throw std::invalid_argument("elite_count must lie in [0, population_size)");
  }
  if (!(config.crossover_fraction >= 0.0 && config.crossover_fraction <= 1.0)) {
    throw std::invalid_argument("crossover_fraction must lie in [0, 1]");
  }
  if (!(config.mutation_rate >= 0.0 && config.mutation_rate <= 1.0)) {
    throw std::invalid_argument("mutation_rate must lie in [0, 1]");
  }
  if (config.max_generations < 1) {
    throw std::invalid_argument("max_generations must be at least 1");
  }
  if (config.target_percent && !(*config.target_percent >= 0.0 && *config.target_percent <= 100.0)) {
    throw std::invalid_argument("target_percent must lie in [0, 100]");
  }
}

struct GenerationStats {
  int generation = 0;  // 1-based
  Chromosome best;
  double best_F = 0.0;
  double mean_F = 0.0;
  double best_percent = 100.0;

  friend bool operator==(const GenerationStats&, const GenerationStats&) = default;
};

struct GaResult {
  Chromosome best;
  FitnessReport report;  // report of the best-ever chromosome
  std::vector<GenerationStats> history;
  int generations_run = 0;
  Termination terminated_by = Termination::MaxGenerations;
  // Generations whose whole population scored quality zero, forcing the
  // roulette wheel down to uniform parent selection. Surfaced in run logs.
  int roulette_fallback_generations = 0;
};

// --- selection -------------------------------------------------------------

// Spins the wheel once: index i wins with probability q_i / sum(q). A wheel
// with no positive slice falls back to a uniform pick instead of aborting.
template <class URBG>
std::size_t roulette_index(std::span<const double> qualities, URBG& rng) {
  if (qualities.empty()) throw std::invalid_argument("roulette: empty quality list");
  double total = 0.0;
  for (double q : qualities) {
    if (!(q >= 0.0)) throw std::invalid_argument("roulette: qualities must be non-negative");
    total += q;
  }
  if (!(total > 0.0)) {
    std::uniform_int_distribution<std::size_t> any(0, qualities.size() - 1);
    return any(rng);
  }
  std::uniform_real_distribution<double> spin(0.0, total);
  double remaining = spin(rng);
  for (std::size_t i = 0; i < qualities.size(); ++i) {
    remaining -= qualities[i];
    if (remaining < 0.0) return i;
  }
  return qualities.size() - 1;  // rounding spillover lands on the last slice
}

template <class URBG>
Chromosome select_roulette(std::span<const Chromosome> population,
                           std::span<const double> qualities, URBG& rng) {
  if (population.empty()) throw std::invalid_argument("select_roulette: empty population");
  if (population.size() != qualities.size()) {
    throw std::invalid_argument("select_roulette: population and quality sizes differ");
  }
  return population[roulette_index(qualities, rng)];
}

// The elite_count chromosomes of smallest F, ties broken by earlier
// population index, copied unchanged.
inline std::vector<Chromosome> select_elites(std::span<const Chromosome> population,
                                             std::span<const FitnessReport> reports,
                                             int elite_count) {
  if (population.size() != reports.size()) {
    throw std::invalid_argument("select_elites: population and report sizes differ");
  }
  if (elite_count < 0 || static_cast<std::size_t>(elite_count) > population.size()) {
    throw std::invalid_argument("select_elites: elite_count outside [0, population size]");
  }
  std::vector<std::size_t> order(population.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::partial_sort(order.begin(), order.begin() + elite_count, order.end(),
                    [&](std::size_t a, std::size_t b) {
                      if (reports[a].cumulative != reports[b].cumulative) {
                        return reports[a].cumulative < reports[b].cumulative;
                      }
                      return a < b;
                    });
  std::vector<Chromosome> elites;
  elites.reserve(static_cast<std::size_t>(elite_count));
  for (int i = 0; i < elite_count; ++i) elites.push_back(population[order[i]]);
  return elites;
}

// --- variation -------------------------------------------------------------

// Single-point crossover at a gene boundary; cut = number of leading genes
// kept from each first parent. Cuts never split a gene, so both children are
// valid without repair.
inline std::pair<Chromosome, Chromosome> crossover(const Chromosome& a, const Chromosome& b,
                                                   int cut) {
  validate(a);
  validate(b);
  switch (cut) {
    case 1:
      return {{a.freq, b.power, b.ber, b.modulation}, {b.freq, a.power, a.ber, a.modulation}};
    case 2:
      return {{a.freq, a.power, b.ber, b.modulation}, {b.freq, b.power, a.ber, a.modulation}};
    case 3:
      return {{a.freq, a.power, a.ber, b.modulation}, {b.freq, b.power, b.ber, a.modulation}};
    default:
      throw std::invalid_argument("crossover cut must be a gene boundary in [1, 3]");
  }
}

// Flips one uniformly chosen bit of the 19-bit genotype and decodes with
// repair, so the result is always a valid chromosome.
template <class URBG>
Chromosome mutate(const Chromosome& c, URBG& rng) {
  Genotype g = encode(c);
  std::uniform_int_distribution<int> pick(0, Genotype::kBits - 1);
  g.flip(pick(rng));
  return decode(g);
}

// --- brute-force oracle ----------------------------------------------------

// Exhaustive best of an explicit candidate set; ties keep the earliest
// candidate.
inline std::pair<Chromosome, FitnessReport> brute_force_best(std::span<const Chromosome> candidates,
                                                             const QosRequest& request) {
  if (candidates.empty()) throw std::invalid_argument("brute_force_best: no candidates");
  validate(request);
  std::size_t best = 0;
  FitnessReport best_report = evaluate(candidates[0], request);
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    FitnessReport report = evaluate(candidates[i], request);
    if (report.cumulative < best_report.cumulative) {
      best = i;
      best_report = report;
    }
  }
  return {candidates[best], best_report};
}

// Exhaustive best over the full 100*50*8*4 = 160,000 chromosome space,
// enumerated frequency-major.
inline std::pair<Chromosome, FitnessReport> brute_force_best(const QosRequest& request) {
  validate(request);
  Chromosome best;
  double best_f = std::numeric_limits<double>::infinity();
  for (int freq = 1; freq <= spec_of(Gene::Frequency).max_index; ++freq) {
    for (int power = 1; power <= spec_of(Gene::Power).max_index; ++power) {
      for (int ber = 1; ber <= spec_of(Gene::Ber).max_index; ++ber) {
        for (int mod = 1; mod <= spec_of(Gene::Modulation).max_index; ++mod) {
          const Chromosome c{freq, power, ber, mod};
          const double f = detail::cumulative_deviation(c, request.target, request.weights);
          if (f < best_f) {
            best_f = f;
            best = c;
          }
        }
      }
    }
  }
  return {best, evaluate(best, request)};
}

// --- the generational loop -------------------------------------------------

// Invoked after each generation's evaluation with the 1-based generation
// number, the population, and its reports.
using GenerationObserver =
    std::function<void(int, std::span<const Chromosome>, std::span<const FitnessReport>)>;

namespace detail {

inline constexpr std::uint64_t kGaStream = 0x6761ULL;  // "ga"

// Pool member most similar to `c`: smallest weighted relative deviation
// measured with `c` as the reference point, ties by pool order.
inline std::size_t nearest_pool_member(const Chromosome& c, std::span<const Chromosome> pool,
                                       const std::array<double, kGeneCount>& weights) {
  std::size_t best = 0;
  double best_distance = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const double distance = cumulative_deviation(pool[i], c, weights);
    if (distance < best_distance) {
      best_distance = distance;
      best = i;
    }
  }
  return best;
}

}  // namespace detail

// Runs the GA against `request`, seeding the population from `initial_pool`
// (the first population_size members, cycled if the pool is smaller). In
// PoolConstrained mode the full pool is the constraint set. Returns the
// best-ever chromosome and the per-generation history.
inline GaResult evolve(const GaConfig& config, const QosRequest& request,
                       const std::vector<Chromosome>& initial_pool,
                       const GenerationObserver& observer = {}) {
  validate(config);
  validate(request);
  if (initial_pool.empty()) throw std::invalid_argument("evolve: initial pool is empty");
  for (std::size_t i = 0; i < initial_pool.size(); ++i) {
    if (!is_valid(initial_pool[i])) {
      throw std::invalid_argument("evolve: invalid chromosome at pool index " + std::to_string(i));
    }
  }

  const std::size_t n = static_cast<std::size_t>(config.population_size);
  std::vector<Chromosome> population;
  population.reserve(n);
  for (std::size_t i = 0; i < n; ++i) population.push_back(initial_pool[i % initial_pool.size()]);

  std::mt19937_64 rng(derive_seed(config.rng_seed, detail::kGaStream));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> pick_cut(1, kGeneCount - 1);

  GaResult result;
  std::vector<FitnessReport> reports(n);
  std::vector<double> qualities(n);
  bool have_best = false;

  for (int generation = 1;; ++generation) {
    std::size_t gen_best = 0;
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      reports[i] = evaluate(population[i], request);
      mean += reports[i].cumulative;
      if (reports[i].cumulative < reports[gen_best].cumulative) gen_best = i;
    }
    mean /= static_cast<double>(n);

    result.history.push_back({generation, population[gen_best], reports[gen_best].cumulative,
                              mean, reports[gen_best].percent});
    if (!have_best || reports[gen_best].cumulative < result.report.cumulative) {
      have_best = true;
      result.best = population[gen_best];
      result.report = reports[gen_best];
    }
    if (observer) observer(generation, population, reports);

    if (config.target_percent && result.report.percent >= *config.target_percent) {
      result.terminated_by = Termination::TargetReached;
      break;
    }
    if (generation == config.max_generations) {
      result.terminated_by = Termination::MaxGenerations;
      break;
    }

    // Breed the next generation: elites verbatim, the rest from roulette
    // pairings.
    std::vector<Chromosome> next = select_elites(population, reports, config.elite_count);
    next.reserve(n);

    double total_quality = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      qualities[i] = quality(reports[i]);
      total_quality += qualities[i];
    }
    const bool degenerate_wheel = !(total_quality > 0.0);
    if (degenerate_wheel) ++result.roulette_fallback_generations;

    auto draw_parent = [&]() -> const Chromosome& {
      return population[roulette_index(std::span<const double>(qualities), rng)];
    };
    auto add_offspring = [&](Chromosome child) {
      if (unit(rng) < config.mutation_rate) child = mutate(child, rng);
      if (config.mode == SearchMode::PoolConstrained) {
        child = initial_pool[detail::nearest_pool_member(child, initial_pool, request.weights)];
      }
      next.push_back(child);
    };

    while (next.size() < n) {
      const Chromosome parent_a = draw_parent();
      const Chromosome parent_b = draw_parent();
      Chromosome child_a = parent_a;
      Chromosome child_b = parent_b;
      if (unit(rng) < config.crossover_fraction) {
        std::tie(child_a, child_b) = crossover(parent_a, parent_b, pick_cut(rng));
      }
      add_offspring(child_a);
      // An odd slot count drops the final pairing's second child.
      if (next.size() < n) add_offspring(child_b);
    }
    population = std::move(next);
  }

  result.generations_run = static_cast<int>(result.history.size());
  return result;
}

// --- serialization ---------------------------------------------------------

// Convergence history CSV; fractional columns carry fixed 6-decimal fields.
inline void write_history_csv(std::ostream& out, std::span<const GenerationStats> history) {
  out << "generation,best_F,mean_F,best_percent,best_freq,best_pow,best_ber,best_mod\n";
  for (const GenerationStats& s : history) {
    out << s.generation << ',' << detail::format_fixed6(s.best_F) << ','
        << detail::format_fixed6(s.mean_F) << ',' << detail::format_fixed6(s.best_percent) << ','
        << s.best.freq << ',' << s.best.power << ',' << s.best.ber << ',' << s.best.modulation
        << '\n';
  }
}

inline std::string_view to_string(Termination t) {
  return t == Termination::TargetReached ? "target-reached" : "max-generations";
}

}  // namespace specga
