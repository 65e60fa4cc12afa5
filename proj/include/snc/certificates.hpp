#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "snc/digraph.hpp"
#include "snc/simplex.hpp"

namespace snc {

/// Linear system whose nonnegative solutions are the everywhere weakly
/// expanding weightings of a digraph.
///
/// `n` has -1 where v_j is a first out-neighbor of v_i and +1 where it is a
/// second out-neighbor. `a` is [[n, -I], [1 ... 1, 0 ... 0]] over the
/// variables (x_1..x_n, s_1..s_n) and `b` is (0, ..., 0, 1).
struct FarkasSystem {
  RationalMatrix n;
  RationalMatrix a;
  RationalVector b;
};

/// Depends only on which arcs are present.
FarkasSystem build_farkas_system(const Digraph& d);

enum class CertificateVariant {
  expanding,    ///< weighting of D, every vertex weakly expanding
  contracting,  ///< weighting of reverse(D), every vertex strongly contracting
};

const char* to_string(CertificateVariant v) noexcept;

struct FarkasCertificate {
  CertificateVariant variant = CertificateVariant::expanding;
  VertexWeighting weighting;
};

struct CertificateCheck {
  bool ok = false;
  /// Vertices whose inequality fails, ascending.
  std::vector<Vertex> violations;
  /// Set when the weighting is all zero (an expanding claim must be
  /// non-trivial) or does not cover the vertex set.
  std::optional<std::string> problem;
};

/// Exactly one variant exists for every digraph. The certificate is
/// normalized to total weight 1 and verified before it is returned.
FarkasCertificate dichotomy(const Digraph& d);

/// Exact recheck: expanding claims are checked on d and need a nonzero
/// weighting; contracting claims are checked on reverse(d).
CertificateCheck verify_certificate(const Digraph& d, const FarkasCertificate& cert);

/// `variant expanding|contracting` followed by `w <v> <p>[/<q>]` lines.
std::string serialize_certificate(const FarkasCertificate& cert);
FarkasCertificate parse_certificate(std::string_view text, std::size_t n);

/// Vertex distribution l >= 0 with sum 1 and, for every u,
/// sum_{v -> u} l(v) <= sum_{u -> v} l(v). Arc weights are ignored. Such a
/// density exists for every digraph; failure throws InternalError.
VertexWeighting losing_density(const Digraph& d);

/// Weighted variant: sum_{x -> v} w(xv) l(x) <= sum_{v -> y} w(vy) l(y).
/// Returns nullopt if the system is infeasible.
std::optional<VertexWeighting> arc_weighted_losing_density(const Digraph& d);

bool is_losing_density(const Digraph& d, const VertexWeighting& l, bool use_arc_weights);

/// reverse(d) with each arc x -> y reweighted to w(yx) * l(y), so that alpha
/// at v is the weighted inflow sum_{x -> v} w(xv) l(x) bounded by the losing
/// density inequality. With unit weights its arc-weighted Seymour vertices are
/// exactly the vertex-weighted Seymour vertices of reverse(d) under l.
Digraph density_weighted_reverse(const Digraph& d, const VertexWeighting& l);

}  // namespace snc
