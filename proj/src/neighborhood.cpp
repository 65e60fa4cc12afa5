#include "snc/neighborhood.hpp"

#include <iomanip>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "snc/errors.hpp"

namespace snc {

const char* to_string(Classification c) noexcept {
  return c == Classification::weakly_expanding ? "weakly-expanding" : "strongly-contracting";
}

Rational alpha(const Digraph& d, Vertex v) {
  Rational sum = 0;
  for (const auto& nb : d.out(v)) sum += nb.weight;
  return sum;
}

Rational beta_term(const Digraph& d, Vertex v, Vertex s) {
  d.check_vertex(s);
  bool reachable = false;
  Rational best;
  for (const auto& via : d.out(v)) {
    if (const Rational* w = d.find_weight(via.vertex, s); w != nullptr && s != v) {
      if (!reachable || best < *w) best = *w;
      reachable = true;
    }
  }
  if (!reachable) {
    throw PreconditionError("no path of length two from " + std::to_string(v) + " to " + std::to_string(s), s);
  }
  return max(Rational(0), best - d.weight_or_zero(v, s));
}

VertexReport vertex_report(const Digraph& d, Vertex v) {
  VertexReport r;
  r.vertex = v;
  r.alpha = alpha(d, v);

  // Best ending weight over all routes v -> u -> s.
  std::map<Vertex, Rational> best;
  for (const auto& via : d.out(v)) {
    for (const auto& end : d.out(via.vertex)) {
      if (end.vertex == v) continue;
      auto [it, inserted] = best.try_emplace(end.vertex, end.weight);
      if (!inserted && it->second < end.weight) it->second = end.weight;
    }
  }

  r.beta = 0;
  r.beta_terms.reserve(best.size());
  for (auto& [s, w] : best) {
    Rational term = max(Rational(0), w - d.weight_or_zero(v, s));
    r.beta += term;
    r.beta_terms.emplace_back(s, std::move(term));
  }
  r.delta = r.beta - r.alpha;
  r.classification = r.delta >= 0 ? Classification::weakly_expanding : Classification::strongly_contracting;
  return r;
}

NeighborhoodReport report(const Digraph& d) {
  NeighborhoodReport r;
  r.vertices.reserve(d.size());
  for (Vertex v = 0; v < d.size(); ++v) r.vertices.push_back(vertex_report(d, v));
  return r;
}

std::vector<Vertex> seymour_vertices_arc(const Digraph& d) {
  std::vector<Vertex> result;
  for (Vertex v = 0; v < d.size(); ++v) {
    if (vertex_report(d, v).delta >= 0) result.push_back(v);
  }
  return result;
}

std::vector<Rational> vertex_weighted_excess(const Digraph& d, const VertexWeighting& eta) {
  eta.check_domain(d.size());
  std::vector<Rational> excess;
  excess.reserve(d.size());
  for (Vertex v = 0; v < d.size(); ++v) {
    auto sets = neighborhoods(d, v);
    excess.push_back(eta.sum_over(sets.first_out) - eta.sum_over(sets.second_out));
  }
  return excess;
}

std::vector<Vertex> seymour_vertices_vw(const Digraph& d, const VertexWeighting& eta) {
  auto excess = vertex_weighted_excess(d, eta);
  std::vector<Vertex> result;
  for (Vertex v = 0; v < d.size(); ++v) {
    if (excess[v] <= 0) result.push_back(v);
  }
  return result;
}

std::vector<Vertex> seymour_vertices_unweighted(const Digraph& d) {
  std::vector<Vertex> result;
  for (Vertex v = 0; v < d.size(); ++v) {
    auto sets = neighborhoods(d, v);
    if (sets.first_out.size() <= sets.second_out.size()) result.push_back(v);
  }
  return result;
}

std::string report_to_json(const NeighborhoodReport& r) {
  auto doc = nlohmann::ordered_json::array();
  for (const auto& v : r.vertices) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::object();
    for (const auto& [s, t] : v.beta_terms) terms[std::to_string(s)] = to_string(t);
    doc.push_back({{"vertex", v.vertex},
                   {"alpha", to_string(v.alpha)},
                   {"beta", to_string(v.beta)},
                   {"delta", to_string(v.delta)},
                   {"classification", to_string(v.classification)},
                   {"beta_terms", std::move(terms)}});
  }
  return doc.dump(2) + "\n";
}

std::string report_to_table(const NeighborhoodReport& r) {
  std::ostringstream out;
  out << std::left << std::setw(8) << "vertex" << std::setw(12) << "alpha" << std::setw(12) << "beta"
      << std::setw(12) << "delta" << "classification\n";
  for (const auto& v : r.vertices) {
    out << std::setw(8) << v.vertex << std::setw(12) << to_string(v.alpha) << std::setw(12) << to_string(v.beta)
        << std::setw(12) << to_string(v.delta) << to_string(v.classification) << '\n';
  }
  return out.str();
}

}  // namespace snc
