#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "snc/digraph.hpp"

namespace snc {

/// Seedable source built on the standard 64-bit Mersenne Twister. Only raw
/// engine output is consumed; bounded draws and coin flips are derived here
/// so sequences match across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, bound), bound >= 1, by rejection.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform on [0, 1) with 53 bits of resolution.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Independent per-trial seed (splitmix64 finalizer over seed and index).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

struct WeightScheme {
  enum class Kind {
    unit,          ///< always 1
    integer,       ///< uniform on {1..bound}
    zero_integer,  ///< uniform on {0..bound}
    rational,      ///< p/q with p, q uniform on {1..bound}
  };
  Kind kind = Kind::unit;
  std::uint64_t bound = 1;

  Rational draw(Rng& rng) const;
};

/// Accepts `unit`, `int:M`, `zint:M` and `rat:Q` with M, Q >= 1.
/// Throws std::invalid_argument.
WeightScheme parse_weight_scheme(std::string_view text);
std::string to_string(const WeightScheme& scheme);

/// Each pair {i < j} in lexicographic order: a coin picks the direction, then
/// the weight is drawn.
Digraph generate_tournament(std::size_t n, const WeightScheme& weights, Rng& rng);
Digraph generate_tournament(std::size_t n, const WeightScheme& weights, std::uint64_t seed);

/// Each pair gets an arc with probability p, then direction and weight as
/// for tournaments. Throws std::invalid_argument unless 0 <= p <= 1.
Digraph generate_digraph(std::size_t n, double p, const WeightScheme& weights, Rng& rng);
Digraph generate_digraph(std::size_t n, double p, const WeightScheme& weights, std::uint64_t seed);

}  // namespace snc
