#include "snc/transforms.hpp"

#include <sstream>

#include "snc/errors.hpp"
#include "snc/instance_io.hpp"

namespace snc {

namespace {

// The in-neighbor that blocks contracting u to v, if any.
std::optional<Vertex> contraction_obstacle(const Digraph& d, Vertex u, Vertex v) {
  for (const auto& [x, w] : d.in(u)) {
    if (w > 0 && (x == v || !d.has_arc(x, v))) return x;
  }
  return std::nullopt;
}

}  // namespace

bool can_contract(const Digraph& d, Vertex u, Vertex v) {
  d.check_vertex(u);
  d.check_vertex(v);
  return u != v && !contraction_obstacle(d, u, v);
}

Contraction contract(const Digraph& d, Vertex u, Vertex v) {
  d.check_vertex(u);
  d.check_vertex(v);
  if (u == v) throw PreconditionError("cannot contract a vertex to itself", u);
  if (auto x = contraction_obstacle(d, u, v)) {
    throw PreconditionError("arc " + std::to_string(*x) + "->" + std::to_string(u) +
                                " has nonzero weight but " + std::to_string(*x) + "->" + std::to_string(v) +
                                " is not an arc",
                            *x);
  }

  Contraction result{Digraph(d.size() - 1), std::vector<std::optional<Vertex>>(d.size())};
  for (Vertex x = 0; x < d.size(); ++x) {
    if (x != u) result.index_map[x] = x < u ? x : x - 1;
  }
  for (const auto& arc : d.arcs()) {
    if (arc.tail == u || arc.head == u) continue;
    Rational w = arc.weight;
    if (arc.head == v) {
      if (const Rational* folded = d.find_weight(arc.tail, u)) w += *folded;
    }
    result.graph.add_arc(*result.index_map[arc.tail], *result.index_map[arc.head], std::move(w));
  }
  return result;
}

AuxiliaryExpansion expand_auxiliary(const Digraph& d, std::size_t cap) {
  std::vector<std::size_t> block_size(d.size(), 1);
  for (const auto& arc : d.arcs()) {
    if (!is_integer(arc.weight) || arc.weight <= 0) {
      throw PreconditionError("expansion needs positive integer weights; arc " + std::to_string(arc.tail) + "->" +
                                  std::to_string(arc.head) + " has weight " + to_string(arc.weight),
                              arc.tail);
    }
    if (!arc.weight.get_num().fits_ulong_p() || arc.weight.get_num().get_ui() > cap) {
      throw PreconditionError("expansion exceeds the cap of " + std::to_string(cap) + " vertices");
    }
    std::size_t k = arc.weight.get_num().get_ui();
    if (k > block_size[arc.head]) block_size[arc.head] = k;
  }

  std::size_t total = 0;
  AuxiliaryExpansion expansion;
  expansion.blocks.resize(d.size());
  for (Vertex v = 0; v < d.size(); ++v) {
    if (block_size[v] > cap - total) {
      throw PreconditionError("expansion exceeds the cap of " + std::to_string(cap) + " vertices");
    }
    for (std::size_t i = 0; i < block_size[v]; ++i) expansion.blocks[v].push_back(total + i);
    total += block_size[v];
  }

  expansion.graph = Digraph(total);
  for (const auto& arc : d.arcs()) {
    const std::size_t k = arc.weight.get_num().get_ui();
    const auto& heads = expansion.blocks[arc.head];
    for (Vertex x : expansion.blocks[arc.tail]) {
      for (std::size_t i = 0; i < k; ++i) expansion.graph.add_arc(x, heads[i], 1);
    }
  }
  return expansion;
}

std::string serialize(const AuxiliaryExpansion& expansion) {
  std::ostringstream out;
  out << serialize(expansion.graph);
  for (Vertex v = 0; v < expansion.blocks.size(); ++v) {
    out << "# block " << v << ':';
    for (Vertex x : expansion.blocks[v]) out << ' ' << x;
    out << '\n';
  }
  return out.str();
}

Digraph drop_zero_arcs(const Digraph& d) {
  Digraph result(d.size());
  for (const auto& arc : d.arcs()) {
    if (arc.weight != 0) result.add_arc(arc.tail, arc.head, arc.weight);
  }
  return result;
}

Digraph rationalize_and_scale(const Digraph& d) {
  Integer scale = 1;
  for (const auto& arc : d.arcs()) {
    if (arc.weight == 0) {
      throw PreconditionError("zero-weight arc " + std::to_string(arc.tail) + "->" + std::to_string(arc.head) +
                                  " cannot be scaled to a positive integer",
                              arc.tail);
    }
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), arc.weight.get_den_mpz_t());
  }
  Digraph result(d.size());
  for (const auto& arc : d.arcs()) result.add_arc(arc.tail, arc.head, Rational(arc.weight * scale));
  return result;
}

Digraph arc_weights_from_vertex_weights(const Digraph& d, const VertexWeighting& eta) {
  eta.check_domain(d.size());
  Digraph result(d.size());
  for (const auto& arc : d.arcs()) result.add_arc(arc.tail, arc.head, eta[arc.head]);
  return result;
}

std::vector<Vertex> blowup_offsets(const VertexWeighting& eta) {
  std::vector<Vertex> offsets(eta.size() + 1, 0);
  for (Vertex v = 0; v < eta.size(); ++v) {
    if (!is_integer(eta[v]) || eta[v] < 1 || !eta[v].get_num().fits_ulong_p()) {
      throw PreconditionError("blow-up sizes must be positive integers; vertex " + std::to_string(v) + " has " +
                                  to_string(eta[v]),
                              v);
    }
    offsets[v + 1] = offsets[v] + eta[v].get_num().get_ui();
  }
  return offsets;
}

Digraph blowup(const Digraph& tournament, const VertexWeighting& eta, const BlockOrientation& orient) {
  if (!is_tournament(tournament)) throw PreconditionError("blow-up needs a tournament");
  eta.check_domain(tournament.size());
  auto offsets = blowup_offsets(eta);

  Digraph result(offsets.back());
  for (Vertex v = 0; v < tournament.size(); ++v) {
    const std::size_t k = offsets[v + 1] - offsets[v];
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        if (!orient || orient(v, i, j)) {
          result.add_arc(offsets[v] + i, offsets[v] + j, 0);
        } else {
          result.add_arc(offsets[v] + j, offsets[v] + i, 0);
        }
      }
    }
  }
  for (const auto& arc : tournament.arcs()) {
    for (Vertex x = offsets[arc.tail]; x < offsets[arc.tail + 1]; ++x) {
      for (Vertex y = offsets[arc.head]; y < offsets[arc.head + 1]; ++y) result.add_arc(x, y, arc.weight);
    }
  }
  return result;
}

}  // namespace snc
