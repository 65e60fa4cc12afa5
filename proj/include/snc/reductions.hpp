#pragma once

#include <vector>

#include "snc/digraph.hpp"

namespace snc {

struct EpsilonReduction {
  Digraph graph;
  Rational epsilon;
};

/// w*(uv) = w(uv) - epsilon * eta(v) on every positive arc; zero arcs stay
/// zero. epsilon is the largest value keeping all weights nonnegative, so at
/// least one positive arc reaches exactly zero. Throws PreconditionError if
/// no arc has w(uv) > 0 and eta(v) > 0.
EpsilonReduction epsilon_reduce(const Digraph& d, const VertexWeighting& eta);

/// For every v and every s in N2+(v) some arc u -> s with u in N1+(v) has
/// positive weight.
bool second_neighbors_fed_by_positive_arcs(const Digraph& d);

struct Subtraction {
  Rational t;
  VertexWeighting weighting;
};

/// t = min over eta_plus(v) > 0 of eta(v) / eta_plus(v), and eta - t eta_plus.
/// Throws PreconditionError if eta_plus is identically zero.
Subtraction subtract_until_zero(const VertexWeighting& eta, const VertexWeighting& eta_plus);

struct CounterexampleReduction {
  Digraph graph;
  VertexWeighting weighting;
  Rational t;
  /// Original indices of the surviving vertices, ascending.
  std::vector<Vertex> kept;
};

/// Shrinks a vertex-weighted counterexample using an expanding weighting.
///
/// Requires eta to make every vertex strongly contracting and eta_plus to make
/// every vertex weakly expanding with some positive entry. Subtracts
/// t * eta_plus, deletes the vertices that reach zero and re-verifies that
/// the smaller digraph is still strongly contracting everywhere. Throws
/// PreconditionError on bad input and InternalError if re-verification fails.
CounterexampleReduction reduce_counterexample(const Digraph& d, const VertexWeighting& eta,
                                              const VertexWeighting& eta_plus);

}  // namespace snc
