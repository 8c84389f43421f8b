// Experiment runner: parse a run configuration, execute one or more seeded
// GA searches, write per-run convergence CSVs, and print a decoded summary
// of the best chromosome each run found.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "specga/specga.hpp"

namespace {

std::string fixed6(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6f", value);
  return buffer;
}

std::string rate(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%g", value);
  return buffer;
}

// history.csv -> history_r3.csv for run 3 of a multi-run invocation.
std::string run_output_path(const std::string& base, int run, int repeats) {
  if (repeats == 1) return base;
  const std::filesystem::path path(base);
  std::filesystem::path named = path.parent_path();
  named /= path.stem().string() + "_r" + std::to_string(run) + path.extension().string();
  return named.string();
}

// SPECGA_SEED only fills in when neither flag nor config file set a seed.
bool parse_env_seed(const char* text, std::uint64_t& seed) {
  const std::string value(text);
  if (value.empty() || value[0] == '-') return false;
  try {
    std::size_t consumed = 0;
    seed = std::stoull(value, &consumed);
    return consumed == value.size();
  } catch (const std::exception&) {
    return false;
  }
}

void print_summary(const specga::GaResult& result) {
  const specga::Chromosome& best = result.best;
  std::cout << "generations: " << result.generations_run << " ("
            << specga::to_string(result.terminated_by) << ")\n";
  std::cout << "best: freq=" << best.freq << " ("
            << specga::gene_to_physical(specga::Gene::Frequency, best.freq) << "), power="
            << best.power << " (" << specga::gene_to_physical(specga::Gene::Power, best.power)
            << "), ber=" << best.ber << " ("
            << specga::gene_to_physical(specga::Gene::Ber, best.ber) << "), mod="
            << best.modulation << " ("
            << specga::gene_to_physical(specga::Gene::Modulation, best.modulation) << ")\n";
  std::cout << "F=" << fixed6(result.report.cumulative)
            << " percent=" << fixed6(result.report.percent) << "\n";
  if (result.roulette_fallback_generations > 0) {
    std::cout << "note: " << result.roulette_fallback_generations
              << " generation(s) scored all-zero quality; selection fell back to uniform\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GA-based spectrum decision engine: searches the chromosome space "
               "(frequency band, power, BER, modulation) for the best match to a QoS request"};
  app.set_config("--config", "", "key=value file mirroring the long flag names");

  specga::QosRequest request;
  request.target = {50, 41, 3, 3};
  std::vector<double> weights{0.25, 0.25, 0.25, 0.25};
  specga::GaConfig config;
  std::string mode_name = "free";
  std::uint64_t seed = 42;
  std::string pool_file;
  std::optional<int> pool_size;
  int repeats = 1;
  std::string out_path;

  app.add_option("--target-freq", request.target.freq, "requested frequency band index (1-100)");
  app.add_option("--target-pow", request.target.power, "requested power index (1-50)");
  app.add_option("--target-ber", request.target.ber, "requested BER exponent index (1-8)");
  app.add_option("--target-mod", request.target.modulation, "requested modulation index (1-4)");
  app.add_option("--weights", weights, "four comma-separated gene weights summing to 1")
      ->delimiter(',')
      ->expected(4);
  app.add_option("--pop-size", config.population_size, "population size");
  app.add_option("--crossover-fraction", config.crossover_fraction,
                 "probability a pairing recombines instead of cloning");
  app.add_option("--elite-count", config.elite_count, "chromosomes copied unchanged each generation");
  app.add_option("--mutation-rate", config.mutation_rate,
                 "per-offspring probability of a single-bit flip");
  app.add_option("--max-generations", config.max_generations, "generation budget per run");
  app.add_option("--target-percent", config.target_percent,
                 "stop a run early once best percent reaches this; also the success "
                 "threshold for the multi-run aggregate");
  app.add_option("--mode", mode_name, "free = search the whole space, pool = only sensed chromosomes")
      ->check(CLI::IsMember({"free", "pool"}));
  auto* seed_opt = app.add_option("--seed", seed, "base RNG seed (SPECGA_SEED is the fallback)");
  auto* pool_file_opt =
      app.add_option("--pool-file", pool_file, "load the sensed pool from a file instead of the RNG");
  auto* pool_size_opt = app.add_option("--pool-size", pool_size, "sensed pool size (default: pop size)")
                            ->check(CLI::PositiveNumber);
  pool_file_opt->excludes(pool_size_opt);
  app.add_option("--repeats", repeats, "independent seeded runs")->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "convergence CSV path (suffix _r<k> when repeats > 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return 2;
  }

  if (seed_opt->count() == 0) {
    if (const char* env = std::getenv("SPECGA_SEED")) {
      if (!parse_env_seed(env, seed)) {
        std::cerr << "specga: SPECGA_SEED is not an unsigned integer: '" << env << "'\n";
        return 2;
      }
    }
  }

  request.weights = {weights[0], weights[1], weights[2], weights[3]};
  config.mode = mode_name == "pool" ? specga::SearchMode::PoolConstrained
                                    : specga::SearchMode::Unconstrained;
  try {
    specga::validate(request);  // gene ranges throw out_of_range, weights invalid_argument
    specga::validate(config);
  } catch (const std::exception& error) {
    std::cerr << "specga: " << error.what() << "\n";
    return 2;
  }

  specga::EnvironmentPool file_pool;
  if (!pool_file.empty()) {
    try {
      file_pool = specga::load_pool(pool_file);
    } catch (const std::exception& error) {
      std::cerr << "specga: " << error.what() << "\n";
      return 3;
    }
  }

  try {
    std::cout << "target: freq=" << request.target.freq << " power=" << request.target.power
              << " ber=" << request.target.ber << " mod=" << request.target.modulation
              << "; weights: " << rate(weights[0]) << "," << rate(weights[1]) << ","
              << rate(weights[2]) << "," << rate(weights[3]) << "\n";
    std::cout << "mode: " << mode_name << "; population=" << config.population_size
              << " crossover=" << rate(config.crossover_fraction)
              << " elites=" << config.elite_count << " mutation=" << rate(config.mutation_rate)
              << " max-generations=" << config.max_generations << "\n";
    if (!pool_file.empty()) {
      std::cout << "pool: " << file_pool.size() << " chromosomes from " << pool_file << "\n";
    }

    int successes = 0;
    for (int run = 1; run <= repeats; ++run) {
      const std::uint64_t run_seed = repeats == 1 ? seed : specga::derive_seed(seed, run);
      config.rng_seed = run_seed;

      specga::EnvironmentPool pool = file_pool;
      if (pool_file.empty()) {
        pool = specga::sense(run_seed, pool_size.value_or(config.population_size));
      }

      if (repeats > 1) std::cout << "--- run " << run << "/" << repeats << " seed=" << run_seed << "\n";
      const specga::GaResult result = specga::evolve(config, request, pool.chromosomes);
      print_summary(result);

      if (config.target_percent && result.report.percent >= *config.target_percent) ++successes;

      if (!out_path.empty()) {
        const std::string path = run_output_path(out_path, run, repeats);
        std::ofstream csv(path);
        if (!csv) throw std::runtime_error("cannot write CSV file " + path);
        specga::write_history_csv(csv, result.history);
        std::cout << "wrote " << path << "\n";
      }
    }

    if (config.target_percent) {
      std::cout << "aggregate: reached " << fixed6(*config.target_percent) << "% in " << successes
                << "/" << repeats << " runs (fraction "
                << fixed6(static_cast<double>(successes) / repeats) << ")\n";
    }
  } catch (const std::exception& error) {
    std::cerr << "specga: " << error.what() << "\n";
    return 1;
  }
  return 0;
}
