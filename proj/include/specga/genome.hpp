#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

// Chromosome model for the spectrum-allocation decision engine.
//
// A candidate solution carries four radio parameters ("genes"), each an
// integer index with a fixed physical mapping:
//
//   gene        range    physical meaning
//   frequency   1..100   8 MHz band starting at 40 + 8*(k-1) MHz
//   power       1..50    transmit power -90 + (k-1) dBm
//   ber         1..8     target bit error rate 10^-k
//   modulation  1..4     BPSK, QPSK, 8-QAM, 16-QAM

namespace specga {

enum class Gene { Frequency, Power, Ber, Modulation };

inline constexpr int kGeneCount = 4;

struct GeneSpec {
  Gene gene;
  int min_index;
  int max_index;
  int bit_width;
  int shift;  // bit offset of the field's LSB within the genotype word
  const char* name;
};

inline constexpr std::array<GeneSpec, kGeneCount> kGeneSpecs{{
    {Gene::Frequency, 1, 100, 7, 12, "frequency"},
    {Gene::Power, 1, 50, 6, 6, "power"},
    {Gene::Ber, 1, 8, 4, 2, "ber"},
    {Gene::Modulation, 1, 4, 2, 0, "modulation"},
}};

constexpr const GeneSpec& spec_of(Gene gene) {
  return kGeneSpecs[static_cast<int>(gene)];
}

struct Chromosome {
  int freq = 1;
  int power = 1;
  int ber = 1;
  int modulation = 1;

  friend constexpr bool operator==(const Chromosome&, const Chromosome&) = default;
};

constexpr int gene_value(const Chromosome& c, Gene gene) {
  switch (gene) {
    case Gene::Frequency: return c.freq;
    case Gene::Power: return c.power;
    case Gene::Ber: return c.ber;
    case Gene::Modulation: return c.modulation;
  }
  return c.freq;  // unreachable
}

constexpr bool in_range(const GeneSpec& spec, int index) {
  return index >= spec.min_index && index <= spec.max_index;
}

namespace detail {

[[noreturn]] inline void throw_gene_range(const GeneSpec& spec, int index) {
  throw std::out_of_range(std::string(spec.name) + " index " + std::to_string(index) +
                          " outside [" + std::to_string(spec.min_index) + ", " +
                          std::to_string(spec.max_index) + "]");
}

}  // namespace detail

inline void validate(const GeneSpec& spec, int index) {
  if (!in_range(spec, index)) detail::throw_gene_range(spec, index);
}

constexpr bool is_valid(const Chromosome& c) {
  for (const GeneSpec& spec : kGeneSpecs) {
    if (!in_range(spec, gene_value(c, spec.gene))) return false;
  }
  return true;
}

inline void validate(const Chromosome& c) {
  for (const GeneSpec& spec : kGeneSpecs) {
    validate(spec, gene_value(c, spec.gene));
  }
}

inline std::string to_string(const Chromosome& c) {
  return "(" + std::to_string(c.freq) + "," + std::to_string(c.power) + "," +
         std::to_string(c.ber) + "," + std::to_string(c.modulation) + ")";
}

// --- physical mappings -----------------------------------------------------

struct FrequencyBand {
  int low_mhz;
  int high_mhz;

  friend constexpr bool operator==(const FrequencyBand&, const FrequencyBand&) = default;
};

inline FrequencyBand frequency_band(int index) {
  validate(spec_of(Gene::Frequency), index);
  return {40 + 8 * (index - 1), 40 + 8 * index};
}

inline int power_dbm(int index) {
  validate(spec_of(Gene::Power), index);
  return -90 + (index - 1);
}

// BER index k stands for a rate of 10^-k; the exponent is the useful handle.
inline int ber_exponent(int index) {
  validate(spec_of(Gene::Ber), index);
  return index;
}

inline double ber_value(int index) {
  validate(spec_of(Gene::Ber), index);
  double v = 1.0;
  for (int i = 0; i < index; ++i) v /= 10.0;
  return v;
}

inline std::string_view modulation_name(int index) {
  validate(spec_of(Gene::Modulation), index);
  constexpr std::array<std::string_view, 4> names{"BPSK", "QPSK", "8-QAM", "16-QAM"};
  return names[index - 1];
}

// Human-readable physical value of one gene index, e.g. "400-408 MHz",
// "-50 dBm", "1e-3", "8-QAM". Throws std::out_of_range on a bad index.
inline std::string gene_to_physical(Gene gene, int index) {
  switch (gene) {
    case Gene::Frequency: {
      const FrequencyBand band = frequency_band(index);
      return std::to_string(band.low_mhz) + "-" + std::to_string(band.high_mhz) + " MHz";
    }
    case Gene::Power:
      return std::to_string(power_dbm(index)) + " dBm";
    case Gene::Ber:
      return "1e-" + std::to_string(ber_exponent(index));
    case Gene::Modulation:
      return std::string(modulation_name(index));
  }
  throw std::invalid_argument("unknown gene");
}

// --- genotype --------------------------------------------------------------

// Genotype layout (19 bits, written most significant digit first):
//
//   bits    18..12      11..6    5..2   1..0
//   field   frequency   power    ber    modulation
//   width   7           6        4      2
//
// Each field stores (index - 1), so modulation 1..4 fits its two bits
// exactly. The wider fields admit raw values past the gene maximum; decode
// clamps those back to the nearest range bound.
class Genotype {
 public:
  static constexpr int kBits = 19;
  static constexpr std::uint32_t kWordMask = (1u << kBits) - 1;

  constexpr Genotype() = default;

  static constexpr Genotype from_word(std::uint32_t word) {
    if (word > kWordMask) {
      throw std::invalid_argument("genotype word needs more than 19 bits");
    }
    Genotype g;
    g.word_ = word;
    return g;
  }

  // Accepts the canonical 19-digit form or the grouped debug form
  // "fffffff.pppppp.bbbb.mm".
  static Genotype from_string(std::string_view text) {
    std::string digits;
    digits.reserve(kBits);
    if (text.size() == kBits + 3) {
      if (text[7] != '.' || text[14] != '.' || text[19] != '.') throw_bad_text();
      for (std::size_t i = 0; i < text.size(); ++i) {
        if (i == 7 || i == 14 || i == 19) continue;
        digits.push_back(text[i]);
      }
    } else {
      digits.assign(text.begin(), text.end());
    }
    if (digits.size() != kBits) throw_bad_text();
    std::uint32_t word = 0;
    for (char ch : digits) {
      if (ch != '0' && ch != '1') throw_bad_text();
      word = (word << 1) | static_cast<std::uint32_t>(ch - '0');
    }
    return from_word(word);
  }

  constexpr std::uint32_t word() const { return word_; }

  // Position 0 is the leading digit (frequency MSB); 18 is the trailing
  // digit (modulation LSB).
  constexpr bool bit(int position) const {
    check_position(position);
    return (word_ >> (kBits - 1 - position)) & 1u;
  }

  constexpr void flip(int position) {
    check_position(position);
    word_ ^= 1u << (kBits - 1 - position);
  }

  std::string to_string() const {
    std::string text(kBits, '0');
    for (int i = 0; i < kBits; ++i) {
      if (bit(i)) text[i] = '1';
    }
    return text;
  }

  std::string grouped() const {
    const std::string text = to_string();
    return text.substr(0, 7) + "." + text.substr(7, 6) + "." + text.substr(13, 4) + "." +
           text.substr(17, 2);
  }

  friend constexpr bool operator==(Genotype, Genotype) = default;

 private:
  static constexpr void check_position(int position) {
    if (position < 0 || position >= kBits) {
      throw std::out_of_range("genotype bit position outside [0, 18]");
    }
  }

  [[noreturn]] static void throw_bad_text() {
    throw std::invalid_argument(
        "genotype string must be 19 binary digits, optionally grouped as fffffff.pppppp.bbbb.mm");
  }

  std::uint32_t word_ = 0;
};

// Packs a valid chromosome into its 19-bit genotype. Throws
// std::out_of_range if any gene is outside its range.
inline Genotype encode(const Chromosome& c) {
  validate(c);
  std::uint32_t word = 0;
  for (const GeneSpec& spec : kGeneSpecs) {
    word |= static_cast<std::uint32_t>(gene_value(c, spec.gene) - spec.min_index) << spec.shift;
  }
  return Genotype::from_word(word);
}

// Unpacks any 19-bit pattern into a valid chromosome. A field whose raw
// value lands outside its gene range is clamped to the nearest bound, so
// decode is total over all 2^19 patterns.
inline Chromosome decode(const Genotype& g) {
  std::array<int, kGeneCount> values{};
  for (std::size_t i = 0; i < kGeneSpecs.size(); ++i) {
    const GeneSpec& spec = kGeneSpecs[i];
    const std::uint32_t field_mask = (1u << spec.bit_width) - 1;
    const int raw = static_cast<int>((g.word() >> spec.shift) & field_mask);
    values[i] = std::clamp(raw + spec.min_index, spec.min_index, spec.max_index);
  }
  return {values[0], values[1], values[2], values[3]};
}

}  // namespace specga
