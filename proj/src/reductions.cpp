#include "snc/reductions.hpp"

#include <optional>

#include "snc/errors.hpp"
#include "snc/neighborhood.hpp"

namespace snc {

EpsilonReduction epsilon_reduce(const Digraph& d, const VertexWeighting& eta) {
  eta.check_domain(d.size());
  std::optional<Rational> epsilon;
  for (const auto& arc : d.arcs()) {
    if (arc.weight > 0 && eta[arc.head] > 0) {
      Rational ratio = arc.weight / eta[arc.head];
      if (!epsilon || ratio < *epsilon) epsilon = std::move(ratio);
    }
  }
  if (!epsilon) throw PreconditionError("no positive arc enters a vertex of positive weight; epsilon is undefined");

  EpsilonReduction result{Digraph(d.size()), *epsilon};
  for (const auto& arc : d.arcs()) {
    Rational w = arc.weight;
    if (w > 0) w -= *epsilon * eta[arc.head];
    result.graph.add_arc(arc.tail, arc.head, std::move(w));
  }
  return result;
}

bool second_neighbors_fed_by_positive_arcs(const Digraph& d) {
  for (Vertex v = 0; v < d.size(); ++v) {
    auto sets = neighborhoods(d, v);
    for (Vertex s : sets.second_out) {
      bool fed = false;
      for (Vertex u : sets.first_out) {
        const Rational* w = d.find_weight(u, s);
        if (w != nullptr && *w > 0) {
          fed = true;
          break;
        }
      }
      if (!fed) return false;
    }
  }
  return true;
}

Subtraction subtract_until_zero(const VertexWeighting& eta, const VertexWeighting& eta_plus) {
  eta_plus.check_domain(eta.size());
  std::optional<Rational> t;
  for (Vertex v = 0; v < eta.size(); ++v) {
    if (eta_plus[v] > 0) {
      Rational ratio = eta[v] / eta_plus[v];
      if (!t || ratio < *t) t = std::move(ratio);
    }
  }
  if (!t) throw PreconditionError("expanding weighting is identically zero");
  std::vector<Rational> values;
  values.reserve(eta.size());
  for (Vertex v = 0; v < eta.size(); ++v) values.emplace_back(eta[v] - *t * eta_plus[v]);
  return {*t, VertexWeighting(std::move(values))};
}

namespace {

std::optional<Vertex> first_not_contracting(const Digraph& d, const VertexWeighting& eta) {
  auto excess = vertex_weighted_excess(d, eta);
  for (Vertex v = 0; v < d.size(); ++v) {
    if (excess[v] <= 0) return v;
  }
  return std::nullopt;
}

}  // namespace

CounterexampleReduction reduce_counterexample(const Digraph& d, const VertexWeighting& eta,
                                              const VertexWeighting& eta_plus) {
  eta.check_domain(d.size());
  eta_plus.check_domain(d.size());
  if (auto v = first_not_contracting(d, eta)) {
    throw PreconditionError("eta is not a counterexample: vertex " + std::to_string(*v) + " is weakly expanding", *v);
  }
  auto plus_excess = vertex_weighted_excess(d, eta_plus);
  for (Vertex v = 0; v < d.size(); ++v) {
    if (plus_excess[v] > 0) {
      throw PreconditionError("eta_plus is not expanding at vertex " + std::to_string(v), v);
    }
  }

  auto [t, reduced] = subtract_until_zero(eta, eta_plus);
  if (auto v = first_not_contracting(d, reduced)) {
    throw InternalError("subtraction broke strong contraction at vertex " + std::to_string(*v));
  }

  CounterexampleReduction result;
  result.t = t;
  std::vector<Rational> surviving;
  for (Vertex v = 0; v < d.size(); ++v) {
    if (reduced[v] != 0) {
      result.kept.push_back(v);
      surviving.push_back(reduced[v]);
    }
  }
  result.graph = induced_subgraph(d, result.kept);
  result.weighting = VertexWeighting(std::move(surviving));
  if (auto v = first_not_contracting(result.graph, result.weighting)) {
    throw InternalError("deleting zero-weight vertices broke strong contraction at vertex " +
                        std::to_string(result.kept[*v]));
  }
  return result;
}

}  // namespace snc
