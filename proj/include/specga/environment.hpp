#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "specga/genome.hpp"
#include "specga/rng.hpp"

// Stand-in for the sensed RF environment: a seeded random pool of valid
// chromosomes that the decision engine treats as the available solutions.

namespace specga {

struct EnvironmentPool {
  std::vector<Chromosome> chromosomes;
  std::optional<std::uint64_t> seed;  // absent for pools built from explicit lists

  std::size_t size() const { return chromosomes.size(); }
};

namespace detail {

// Sensing draws from its own sub-stream so that pool generation never
// perturbs the GA loop's draws for the same base seed.
inline constexpr std::uint64_t kSenseStream = 0x73656e7365ULL;  // "sense"

}  // namespace detail

// Draws `size` chromosomes, each gene independently uniform over its range.
// The same seed always reproduces the identical pool.
inline EnvironmentPool sense(std::uint64_t seed, int size) {
  if (size < 1) throw std::invalid_argument("sense: pool size must be at least 1");
  std::mt19937_64 rng(derive_seed(seed, detail::kSenseStream));
  std::array<std::uniform_int_distribution<int>, kGeneCount> draw;
  for (int i = 0; i < kGeneCount; ++i) {
    draw[i] = std::uniform_int_distribution<int>(kGeneSpecs[i].min_index, kGeneSpecs[i].max_index);
  }
  EnvironmentPool pool;
  pool.seed = seed;
  pool.chromosomes.reserve(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) {
    Chromosome c;
    c.freq = draw[0](rng);
    c.power = draw[1](rng);
    c.ber = draw[2](rng);
    c.modulation = draw[3](rng);
    pool.chromosomes.push_back(c);
  }
  return pool;
}

// Wraps an explicit chromosome list verbatim; rejects empty lists and names
// the index of the first invalid entry.
inline EnvironmentPool pool_from_list(std::vector<Chromosome> chromosomes) {
  if (chromosomes.empty()) throw std::invalid_argument("pool_from_list: empty chromosome list");
  for (std::size_t i = 0; i < chromosomes.size(); ++i) {
    try {
      validate(chromosomes[i]);
    } catch (const std::out_of_range& e) {
      throw std::invalid_argument("pool_from_list: invalid chromosome at index " +
                                  std::to_string(i) + ": " + e.what());
    }
  }
  EnvironmentPool pool;
  pool.chromosomes = std::move(chromosomes);
  return pool;
}

// Pool file format: one chromosome per line as "freq,power,ber,mod"
// integers; '#' starts a comment; blank lines are ignored.
inline EnvironmentPool load_pool(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open pool file: " + path.string());

  auto fail = [&](int line_no, const std::string& why) -> void {
    throw std::runtime_error("pool file " + path.string() + " line " + std::to_string(line_no) +
                             ": " + why);
  };

  std::vector<Chromosome> list;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);

    std::array<int, kGeneCount> values{};
    int field = 0;
    std::size_t pos = 0;
    bool blank = true;
    while (pos < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[pos]))) {
        ++pos;
        continue;
      }
      blank = false;
      if (field >= kGeneCount) fail(line_no, "expected exactly 4 fields: freq,power,ber,mod");
      std::size_t consumed = 0;
      try {
        values[field] = std::stoi(line.substr(pos), &consumed);
      } catch (const std::exception&) {
        fail(line_no, "expected an integer gene index");
      }
      pos += consumed;
      ++field;
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos < line.size()) {
        if (line[pos] != ',') fail(line_no, "expected ',' between gene indices");
        ++pos;
      }
    }
    if (blank) continue;
    if (field != kGeneCount) fail(line_no, "expected exactly 4 fields: freq,power,ber,mod");

    Chromosome c{values[0], values[1], values[2], values[3]};
    try {
      validate(c);
    } catch (const std::out_of_range& e) {
      fail(line_no, e.what());
    }
    list.push_back(c);
  }
  if (list.empty()) throw std::runtime_error("pool file " + path.string() + ": no chromosomes");
  return pool_from_list(std::move(list));
}

inline void save_pool(const EnvironmentPool& pool, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write pool file: " + path.string());
  out << "# pool size=" << pool.size();
  if (pool.seed) out << " seed=" << *pool.seed;
  out << '\n';
  for (const Chromosome& c : pool.chromosomes) {
    out << c.freq << ',' << c.power << ',' << c.ber << ',' << c.modulation << '\n';
  }
  if (!out) throw std::runtime_error("error writing pool file: " + path.string());
}

}  // namespace specga
