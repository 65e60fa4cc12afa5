#include "snc/generators.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

namespace snc {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  // Values below `threshold` would bias the modulus.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rational WeightScheme::draw(Rng& rng) const {
  switch (kind) {
    case Kind::unit:
      return 1;
    case Kind::integer:
      return Rational(Integer(std::to_string(1 + rng.below(bound))));
    case Kind::zero_integer:
      return Rational(Integer(std::to_string(rng.below(bound + 1))));
    case Kind::rational: {
      Integer p(std::to_string(1 + rng.below(bound)));
      Integer q(std::to_string(1 + rng.below(bound)));
      Rational w(p, q);
      w.canonicalize();
      return w;
    }
  }
  return 1;
}

WeightScheme parse_weight_scheme(std::string_view text) {
  if (text == "unit") return {};
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("unknown weight scheme '" + std::string(text) + "'");
  std::string_view name = text.substr(0, colon);
  std::string_view value = text.substr(colon + 1);
  std::uint64_t bound = 0;
  auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), bound);
  if (ec != std::errc() || end != value.data() + value.size() || bound < 1 || bound > (1ULL << 62)) {
    throw std::invalid_argument("weight scheme bound must be a positive integer in '" + std::string(text) + "'");
  }
  WeightScheme scheme;
  scheme.bound = bound;
  if (name == "int") {
    scheme.kind = WeightScheme::Kind::integer;
  } else if (name == "zint") {
    scheme.kind = WeightScheme::Kind::zero_integer;
  } else if (name == "rat") {
    scheme.kind = WeightScheme::Kind::rational;
  } else {
    throw std::invalid_argument("unknown weight scheme '" + std::string(text) + "'");
  }
  return scheme;
}

std::string to_string(const WeightScheme& scheme) {
  switch (scheme.kind) {
    case WeightScheme::Kind::unit:
      return "unit";
    case WeightScheme::Kind::integer:
      return "int:" + std::to_string(scheme.bound);
    case WeightScheme::Kind::zero_integer:
      return "zint:" + std::to_string(scheme.bound);
    case WeightScheme::Kind::rational:
      return "rat:" + std::to_string(scheme.bound);
  }
  return "unit";
}

Digraph generate_tournament(std::size_t n, const WeightScheme& weights, Rng& rng) {
  return generate_digraph(n, 1.0, weights, rng);
}

Digraph generate_tournament(std::size_t n, const WeightScheme& weights, std::uint64_t seed) {
  Rng rng(seed);
  return generate_tournament(n, weights, rng);
}

Digraph generate_digraph(std::size_t n, double p, const WeightScheme& weights, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("arc probability must lie in [0, 1]");
  Digraph d(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      // p = 1 skips the draw so tournaments consume fewer outputs.
      if (p < 1.0 && !(rng.unit() < p)) continue;
      bool forward = rng.coin();
      Rational w = weights.draw(rng);
      if (forward) {
        d.add_arc(i, j, std::move(w));
      } else {
        d.add_arc(j, i, std::move(w));
      }
    }
  }
  return d;
}

Digraph generate_digraph(std::size_t n, double p, const WeightScheme& weights, std::uint64_t seed) {
  Rng rng(seed);
  return generate_digraph(n, p, weights, rng);
}

}  // namespace snc
