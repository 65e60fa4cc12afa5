#pragma once

#include <string>
#include <utility>
#include <vector>

#include "snc/digraph.hpp"

namespace snc {

enum class Classification { weakly_expanding, strongly_contracting };

const char* to_string(Classification c) noexcept;

/// Exact neighborhood weights of one vertex in the arc-weighted setting.
struct VertexReport {
  Vertex vertex = 0;
  Rational alpha;
  /// (s, beta_v(s)) for every s != v at the end of some path v -> u -> s,
  /// first out-neighbors included, sorted by s.
  std::vector<std::pair<Vertex, Rational>> beta_terms;
  Rational beta;
  Rational delta;
  Classification classification = Classification::weakly_expanding;
};

struct NeighborhoodReport {
  std::vector<VertexReport> vertices;
};

/// First neighborhood weight: total weight leaving v.
Rational alpha(const Digraph& d, Vertex v);

/// Clamped best excess max(0, max_{v->u->s} w(us) - w(vs)), with w(vs) = 0
/// when vs is not an arc. Throws PreconditionError if no path v -> u -> s
/// exists.
Rational beta_term(const Digraph& d, Vertex v, Vertex s);

VertexReport vertex_report(const Digraph& d, Vertex v);
NeighborhoodReport report(const Digraph& d);

/// Arc-weighted Seymour vertices: delta_v >= 0.
std::vector<Vertex> seymour_vertices_arc(const Digraph& d);
/// eta(N1+(v)) <= eta(N2+(v)); arc weights are ignored.
std::vector<Vertex> seymour_vertices_vw(const Digraph& d, const VertexWeighting& eta);
/// |N1+(v)| <= |N2+(v)|.
std::vector<Vertex> seymour_vertices_unweighted(const Digraph& d);

/// eta(N1+(v)) - eta(N2+(v)) for every v. Positive means strongly
/// contracting under eta.
std::vector<Rational> vertex_weighted_excess(const Digraph& d, const VertexWeighting& eta);

/// Machine-readable report: a JSON array with one object per vertex.
std::string report_to_json(const NeighborhoodReport& r);
/// Fixed-width human-readable table.
std::string report_to_table(const NeighborhoodReport& r);

}  // namespace snc
