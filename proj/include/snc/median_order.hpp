#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "snc/digraph.hpp"
#include "snc/neighborhood.hpp"

namespace snc {

/// count: every backward arc costs 1 (zero-weight arcs included).
/// weight: every backward arc costs its weight.
enum class OrderMode { count, weight };

const char* to_string(OrderMode mode) noexcept;

struct MedianOrder {
  std::vector<Vertex> order;
  /// Total cost of arcs order[i] -> order[j] with j < i.
  Rational backward;
};

inline constexpr std::size_t default_order_cap = 20;

/// Minimum-backward ordering by dynamic programming over vertex subsets,
/// O(2^n n^2). Among optimal orders the lexicographically smallest is
/// returned. Throws PreconditionError when n exceeds `cap`.
MedianOrder median_order(const Digraph& d, OrderMode mode, std::size_t cap = default_order_cap);

/// Throws PreconditionError if `order` is not a permutation of V(d).
Rational backward_weight(const Digraph& d, std::span<const Vertex> order, OrderMode mode);

struct LastVertexCheck {
  /// Count mode: |N1+| <= |N2+|. Weight mode: arc-weighted delta >= 0.
  bool seymour = false;
  MedianOrder order;
  VertexReport report;
  std::size_t first_out = 0;
  std::size_t second_out = 0;
};

LastVertexCheck last_vertex_seymour(const Digraph& d, OrderMode mode, std::size_t cap = default_order_cap);

/// `v0 v1 ... vn-1` then `backward <p>[/<q>]`.
std::string serialize(const MedianOrder& order);

}  // namespace snc
