// Minimal library walkthrough: sense a pool of candidate radio parameter
// sets, evolve toward a QoS request, and print how the score converges.

#include <iostream>

#include "specga/specga.hpp"

int main() {
  using namespace specga;

  // What the secondary user wants: band 50, -50 dBm, BER 1e-3, 8-QAM, with
  // every parameter weighted equally.
  const QosRequest request{{50, 41, 3, 3}, kEqualWeights};

  GaConfig config;
  config.population_size = 20;
  config.crossover_fraction = 0.8;
  config.elite_count = 2;
  config.max_generations = 100;
  config.target_percent = 100.0;
  config.rng_seed = 7;

  const EnvironmentPool pool = sense(config.rng_seed, config.population_size);
  const GaResult result = evolve(config, request, pool.chromosomes);

  std::cout << "generation  best_F    percent   best chromosome\n";
  for (const GenerationStats& stats : result.history) {
    if (stats.generation % 10 == 1 || stats.generation == result.generations_run) {
      std::cout << stats.generation << "\t" << stats.best_F << "\t" << stats.best_percent << "\t"
                << to_string(stats.best) << "\n";
    }
  }

  std::cout << "\nfinished after " << result.generations_run << " generations ("
            << to_string(result.terminated_by) << ")\n";
  std::cout << "best " << to_string(result.best) << " = freq "
            << gene_to_physical(Gene::Frequency, result.best.freq) << ", power "
            << gene_to_physical(Gene::Power, result.best.power) << ", BER "
            << gene_to_physical(Gene::Ber, result.best.ber) << ", "
            << gene_to_physical(Gene::Modulation, result.best.modulation) << "\n";
  return 0;
}
