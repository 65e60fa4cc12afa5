#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "snc/rational.hpp"

namespace snc {

/// Vertices are dense indices 0..n-1.
using Vertex = std::size_t;

struct Neighbor {
  Vertex vertex;
  Rational weight;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

struct Arc {
  Vertex tail;
  Vertex head;
  Rational weight;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Oriented simple digraph with a nonnegative exact weight on every arc.
///
/// A present arc of weight 0 is distinct from an absent arc: it still opens
/// two-step paths through its head. Loops, two-cycles and negative weights are
/// rejected at insertion, so every constructed value satisfies the invariants.
class Digraph {
 public:
  explicit Digraph(std::size_t n = 0);

  std::size_t size() const noexcept { return out_.size(); }
  std::size_t arc_count() const noexcept { return arc_count_; }

  /// Throws GraphError on loop, two-cycle, duplicate, negative weight or
  /// out-of-range endpoint.
  void add_arc(Vertex tail, Vertex head, Rational weight = 1);
  /// Replaces the weight of an existing arc.
  void set_weight(Vertex tail, Vertex head, Rational weight);

  bool has_arc(Vertex tail, Vertex head) const;
  /// Weight of the arc, or nullptr when it is absent.
  const Rational* find_weight(Vertex tail, Vertex head) const;
  /// Weight of the arc, treating an absent arc as weight 0.
  Rational weight_or_zero(Vertex tail, Vertex head) const;

  /// Sorted by neighbor index.
  std::span<const Neighbor> out(Vertex v) const;
  std::span<const Neighbor> in(Vertex v) const;

  /// All arcs, sorted lexicographically by (tail, head).
  std::vector<Arc> arcs() const;

  void check_vertex(Vertex v) const;

  friend bool operator==(const Digraph& a, const Digraph& b) { return a.out_ == b.out_; }

 private:
  std::vector<std::vector<Neighbor>> out_;
  std::vector<std::vector<Neighbor>> in_;
  std::size_t arc_count_ = 0;
};

/// Nonnegative exact weight per vertex (eta in the vertex-weighted setting,
/// a losing density when it sums to one).
class VertexWeighting {
 public:
  VertexWeighting() = default;
  /// Throws GraphError if any value is negative.
  explicit VertexWeighting(std::vector<Rational> values);
  static VertexWeighting uniform(std::size_t n, const Rational& value = 1);

  std::size_t size() const noexcept { return values_.size(); }
  const Rational& operator[](Vertex v) const { return values_.at(v); }
  const std::vector<Rational>& values() const noexcept { return values_; }

  Rational total() const;
  Rational sum_over(std::span<const Vertex> vertices) const;

  /// Throws GraphError unless the weighting covers exactly n vertices.
  void check_domain(std::size_t n) const;

  friend bool operator==(const VertexWeighting&, const VertexWeighting&) = default;

 private:
  std::vector<Rational> values_;
};

/// First and second out/in-neighborhoods of one vertex, each sorted.
struct NeighborhoodSets {
  std::vector<Vertex> first_out;
  std::vector<Vertex> second_out;
  std::vector<Vertex> first_in;
  std::vector<Vertex> second_in;

  friend bool operator==(const NeighborhoodSets&, const NeighborhoodSets&) = default;
};

/// Second neighborhoods follow arc presence, not weight positivity.
NeighborhoodSets neighborhoods(const Digraph& d, Vertex v);

Digraph reverse(const Digraph& d);

bool is_tournament(const Digraph& d);

/// True iff every arc (u,v) closes a directed triangle u -> v -> x -> u.
bool every_arc_in_triangle(const Digraph& d);

/// Subgraph induced by `keep` (sorted, distinct), renumbered densely in the
/// order given.
Digraph induced_subgraph(const Digraph& d, std::span<const Vertex> keep);

}  // namespace snc
