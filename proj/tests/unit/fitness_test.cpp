#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "specga/fitness.hpp"

using namespace specga;

namespace {

Chromosome random_chromosome(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> freq(1, 100), power(1, 50), ber(1, 8), mod(1, 4);
  return {freq(rng), power(rng), ber(rng), mod(rng)};
}

}  // namespace

TEST_CASE("gene fitness follows the piecewise deviation rule") {
  CHECK(gene_fitness(50, 50, 0.25) == 0.0);
  CHECK(gene_fitness(60, 50, 0.25) == Catch::Approx(0.05).margin(1e-15));
  // |100 - 50| is not below the desired value, so the score caps at the weight.
  CHECK(gene_fitness(100, 50, 0.25) == 0.25);
  CHECK(gene_fitness(1, 50, 0.25) == Catch::Approx(0.25 * 49.0 / 50.0).margin(1e-15));
  CHECK(gene_fitness(3, 1, 0.25) == 0.25);

  REQUIRE_THROWS_AS(gene_fitness(10, 0, 0.25), std::invalid_argument);
  REQUIRE_THROWS_AS(gene_fitness(10, 10, -0.1), std::invalid_argument);
  REQUIRE_THROWS_AS(gene_fitness(10, 10, 1.5), std::invalid_argument);
}

TEST_CASE("gene fitness bounds, zero point, and monotonicity") {
  // Exhaustive over the widest gene: every (x, x_d) pair of frequency indices.
  for (int x_d = 1; x_d <= 100; ++x_d) {
    double previous = -1.0;
    for (int dev = 0; dev + x_d <= 100 || x_d - dev >= 1; ++dev) {
      const int x = (x_d + dev <= 100) ? x_d + dev : x_d - dev;
      const double f = gene_fitness(x, x_d, 0.25);
      CHECK(f >= 0.0);
      CHECK(f <= 0.25);
      if (dev == 0) {
        CHECK(f == 0.0);
      } else {
        CHECK(f > 0.0);
      }
      CHECK(f >= previous);  // non-decreasing in |x - x_d|
      previous = f;
    }
  }
}

TEST_CASE("request validation") {
  QosRequest q{{50, 41, 3, 3}, kEqualWeights};
  REQUIRE_NOTHROW(validate(q));

  q.weights = {0.4, 0.3, 0.2, 0.1};
  REQUIRE_NOTHROW(validate(q));

  q.weights = {0.5, 0.5, 0.1, 0.1};
  REQUIRE_THROWS_AS(validate(q), std::invalid_argument);

  q.weights = {1.2, -0.2, 0.0, 0.0};
  REQUIRE_THROWS_AS(validate(q), std::invalid_argument);

  q.weights = kEqualWeights;
  q.target = {0, 41, 3, 3};
  REQUIRE_THROWS_AS(validate(q), std::out_of_range);
}

TEST_CASE("evaluate sums per-gene scores") {
  const QosRequest q{{50, 41, 3, 3}, kEqualWeights};

  SECTION("perfect match") {
    const FitnessReport report = evaluate(q.target, q);
    CHECK(report.cumulative == 0.0);
    CHECK(report.percent == 100.0);
    for (double f : report.per_gene) CHECK(f == 0.0);
  }

  SECTION("single deviating gene") {
    const FitnessReport report = evaluate(Chromosome{60, 41, 3, 3}, q);
    CHECK(report.per_gene[0] == Catch::Approx(0.05).margin(1e-15));
    CHECK(report.per_gene[1] == 0.0);
    CHECK(report.cumulative == Catch::Approx(0.05).margin(1e-15));
    CHECK(report.percent == Catch::Approx(95.0).margin(1e-12));
  }

  SECTION("every gene capped") {
    const QosRequest ones{{1, 1, 1, 1}, kEqualWeights};
    const FitnessReport report = evaluate(Chromosome{2, 2, 2, 2}, ones);
    CHECK(report.cumulative == Catch::Approx(1.0).margin(1e-15));
    CHECK(report.percent == Catch::Approx(0.0).margin(1e-12));
  }
}

TEST_CASE("percent and quality restate the cumulative score") {
  CHECK(percent_from_cumulative(0.2125) == Catch::Approx(78.75).margin(1e-12));
  CHECK(quality(FitnessReport{{}, 0.0, 100.0}) == 1.0);
  CHECK(quality(FitnessReport{{}, 1.0, 0.0}) == 0.0);
  CHECK(quality(FitnessReport{{}, 0.2125, 78.75}) == Catch::Approx(0.7875).margin(1e-12));
}

TEST_CASE("fitness identity holds over random pairs") {
  std::mt19937_64 rng(20240811);
  for (int i = 0; i < 1000; ++i) {
    const QosRequest q{random_chromosome(rng), kEqualWeights};
    const Chromosome c = random_chromosome(rng);
    const FitnessReport report = evaluate(c, q);

    double sum = 0.0;
    for (int g = 0; g < kGeneCount; ++g) {
      CHECK(report.per_gene[g] >= 0.0);
      CHECK(report.per_gene[g] <= q.weights[g]);
      sum += report.per_gene[g];
    }
    CHECK(std::abs(report.cumulative - sum) <= 1e-12);
    CHECK(std::abs(report.percent + 100.0 * report.cumulative - 100.0) <= 1e-12);
  }
}

TEST_CASE("weights scale gene scores linearly") {
  const QosRequest skewed{{50, 41, 3, 3}, {0.4, 0.3, 0.2, 0.1}};
  const FitnessReport report = evaluate(Chromosome{60, 41, 6, 3}, skewed);
  CHECK(report.per_gene[0] == Catch::Approx(0.4 * 10.0 / 50.0).margin(1e-15));
  CHECK(report.per_gene[2] == Catch::Approx(0.2).margin(1e-15));  // |6-3| >= 3 caps
  CHECK(report.per_gene[3] == 0.0);
}

TEST_CASE("evaluate is a pure function") {
  const QosRequest q{{50, 41, 3, 3}, kEqualWeights};
  const Chromosome c{37, 12, 7, 1};
  CHECK(evaluate(c, q) == evaluate(c, q));
}

TEST_CASE("report serializes to a fixed six-decimal CSV fragment") {
  const QosRequest q{{50, 41, 3, 3}, kEqualWeights};
  CHECK(csv_fragment(evaluate(Chromosome{60, 41, 3, 3}, q)) ==
        "0.050000,0.000000,0.000000,0.000000,0.050000,95.000000");
  CHECK(csv_fragment(evaluate(q.target, q)) ==
        "0.000000,0.000000,0.000000,0.000000,0.000000,100.000000");
}
