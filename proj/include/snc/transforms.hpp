#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "snc/digraph.hpp"

namespace snc {

struct Contraction {
  Digraph graph;
  /// old vertex -> new vertex; nullopt for the removed vertex.
  std::vector<std::optional<Vertex>> index_map;
};

/// Removes u and folds the weight of every in-arc x -> u onto x -> v.
///
/// Requires u != v and, for every x with w(xu) > 0, that x != v and x -> v is
/// an arc. Under that condition alpha is preserved and beta never grows for
/// every surviving vertex. Throws PreconditionError naming the offending x.
Contraction contract(const Digraph& d, Vertex u, Vertex v);

/// True when contract(d, u, v) would be accepted.
bool can_contract(const Digraph& d, Vertex u, Vertex v);

/// Unweighted digraph whose neighborhood cardinalities reproduce alpha and
/// beta. All arcs of `graph` have weight 1.
struct AuxiliaryExpansion {
  Digraph graph;
  /// blocks[v] lists the new vertices standing for v, in block order.
  std::vector<std::vector<Vertex>> blocks;
};

inline constexpr std::size_t default_expansion_cap = 1'000'000;

/// Replaces v by max(1, max in-weight of v) vertices; each original arc u -> v
/// of weight k becomes arcs from all of u's block to the first k vertices of
/// v's block. Requires positive integer weights. Throws PreconditionError on
/// a zero or fractional weight, or if the result would exceed `cap` vertices.
AuxiliaryExpansion expand_auxiliary(const Digraph& d, std::size_t cap = default_expansion_cap);

/// Instance file text followed by `# block <v>: <x0> <x1> ...` lines.
std::string serialize(const AuxiliaryExpansion& expansion);

Digraph drop_zero_arcs(const Digraph& d);

/// Multiplies every weight by the lcm of the denominators. Throws
/// PreconditionError if a zero-weight arc is present.
Digraph rationalize_and_scale(const Digraph& d);

/// Same arc set, w(uv) = eta(v).
Digraph arc_weights_from_vertex_weights(const Digraph& d, const VertexWeighting& eta);

/// Orientation of the arc between block members i < j. True keeps i -> j.
using BlockOrientation = std::function<bool(Vertex block, std::size_t i, std::size_t j)>;

/// Replaces every vertex v of a tournament by an eta(v)-vertex tournament
/// whose internal arcs weigh 0; every arc u -> v becomes all arcs from u's
/// block to v's block carrying w(uv). Blocks are laid out in vertex order and
/// oriented transitively (lower index first) unless `orient` is supplied.
/// Throws PreconditionError for a non-tournament or a non-positive-integer
/// eta value.
Digraph blowup(const Digraph& tournament, const VertexWeighting& eta, const BlockOrientation& orient = {});

/// Starting vertex of every block in blowup's layout.
std::vector<Vertex> blowup_offsets(const VertexWeighting& eta);

}  // namespace snc
