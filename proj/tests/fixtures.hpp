#pragma once

// Named instances and brute-force oracles shared by the test suites. The
// oracles work from an adjacency matrix and shortest-path distances and do not
// call into the code paths they check.

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <vector>

#include "snc/digraph.hpp"
#include "snc/generators.hpp"

namespace snc::testing {

inline Digraph c3() {
  Digraph d(3);
  d.add_arc(0, 1);
  d.add_arc(1, 2);
  d.add_arc(2, 0);
  return d;
}

inline Digraph tt3() {
  Digraph d(3);
  d.add_arc(0, 1);
  d.add_arc(0, 2);
  d.add_arc(1, 2);
  return d;
}

/// C3 with weights 1, 2, 4 on 0->1, 1->2, 2->0.
inline Digraph c3_weighted() {
  Digraph d(3);
  d.add_arc(0, 1, 1);
  d.add_arc(1, 2, 2);
  d.add_arc(2, 0, 4);
  return d;
}

/// Worked example: v = 0, u1 = 1, u2 = 2, u3 = 3, u4 = 4.
inline Digraph fix_p() {
  Digraph d(5);
  d.add_arc(0, 1, 3);
  d.add_arc(0, 3, 6);
  d.add_arc(3, 1, 4);
  d.add_arc(1, 2, 2);
  d.add_arc(1, 4, 5);
  d.add_arc(3, 4, 1);
  return d;
}

/// i -> i+1 and i -> i+2 (mod 5).
inline Digraph rotational5() {
  Digraph d(5);
  for (Vertex i = 0; i < 5; ++i) {
    d.add_arc(i, (i + 1) % 5);
    d.add_arc(i, (i + 2) % 5);
  }
  return d;
}

inline VertexWeighting weights(std::initializer_list<int> values) {
  std::vector<Rational> v;
  for (int x : values) v.emplace_back(x);
  return VertexWeighting(std::move(v));
}

/// Presence matrix and weight matrix, built once.
struct Matrix {
  std::size_t n;
  std::vector<std::vector<char>> present;
  std::vector<std::vector<Rational>> weight;

  explicit Matrix(const Digraph& d)
      : n(d.size()), present(n, std::vector<char>(n, 0)), weight(n, std::vector<Rational>(n, Rational(0))) {
    for (const auto& a : d.arcs()) {
      present[a.tail][a.head] = 1;
      weight[a.tail][a.head] = a.weight;
    }
  }

  /// BFS distance from v along arcs (forward) or against them.
  std::vector<std::size_t> distances(std::size_t v, bool forward = true) const {
    const std::size_t inf = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(n, inf);
    std::queue<std::size_t> queue;
    dist[v] = 0;
    queue.push(v);
    while (!queue.empty()) {
      auto x = queue.front();
      queue.pop();
      for (std::size_t y = 0; y < n; ++y) {
        bool arc = forward ? present[x][y] : present[y][x];
        if (arc && dist[y] == inf) {
          dist[y] = dist[x] + 1;
          queue.push(y);
        }
      }
    }
    return dist;
  }

  std::vector<Vertex> at_distance(std::size_t v, std::size_t k, bool forward = true) const {
    auto dist = distances(v, forward);
    std::vector<Vertex> result;
    for (std::size_t y = 0; y < n; ++y) {
      if (dist[y] == k) result.push_back(y);
    }
    return result;
  }

  /// beta_v straight from the definition.
  Rational beta(std::size_t v) const {
    Rational total = 0;
    for (std::size_t s = 0; s < n; ++s) {
      if (s == v) continue;
      std::optional<Rational> best;
      for (std::size_t u = 0; u < n; ++u) {
        if (present[v][u] && present[u][s]) {
          Rational candidate = weight[u][s] - weight[v][s];
          if (!best || *best < candidate) best = candidate;
        }
      }
      if (best && *best > 0) total += *best;
    }
    return total;
  }

  Rational alpha(std::size_t v) const {
    Rational total = 0;
    for (std::size_t u = 0; u < n; ++u) {
      if (present[v][u]) total += weight[v][u];
    }
    return total;
  }
};

/// Minimum backward cost over all n! orders.
inline Rational brute_force_backward(const Digraph& d, bool count_mode) {
  Matrix m(d);
  std::vector<std::size_t> perm(d.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::optional<Rational> best;
  do {
    Rational cost = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (m.present[perm[i]][perm[j]]) cost += count_mode ? Rational(1) : m.weight[perm[i]][perm[j]];
      }
    }
    if (!best || cost < *best) best = cost;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best.value_or(Rational(0));
}

/// Random vertex weighting with entries p/q, p in 0..max_num, q in 1..max_den.
inline VertexWeighting random_weighting(std::size_t n, Rng& rng, std::uint64_t max_num = 5,
                                        std::uint64_t max_den = 4, bool allow_zero = true) {
  std::vector<Rational> values;
  for (std::size_t v = 0; v < n; ++v) {
    std::uint64_t p = allow_zero ? rng.below(max_num + 1) : 1 + rng.below(max_num);
    std::uint64_t q = 1 + rng.below(max_den);
    Rational r(static_cast<unsigned long>(p), static_cast<unsigned long>(q));
    r.canonicalize();
    values.push_back(r);
  }
  return VertexWeighting(std::move(values));
}

/// Union of random directed triangles; a triangle clashing with an existing
/// arc is skipped whole, so every arc lies in a directed triangle.
inline Digraph random_triangle_union(std::size_t n, std::size_t attempts, Rng& rng) {
  Digraph d(n);
  for (std::size_t i = 0; i < attempts; ++i) {
    Vertex a = rng.below(n);
    Vertex b = rng.below(n);
    Vertex c = rng.below(n);
    if (a == b || b == c || a == c) continue;
    const std::pair<Vertex, Vertex> arcs[] = {{a, b}, {b, c}, {c, a}};
    bool clash = false;
    for (auto [u, v] : arcs) clash = clash || d.has_arc(v, u);
    if (clash) continue;
    for (auto [u, v] : arcs) {
      if (!d.has_arc(u, v)) d.add_arc(u, v);
    }
  }
  return d;
}

}  // namespace snc::testing
