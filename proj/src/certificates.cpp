#include "snc/certificates.hpp"

#include <sstream>
#include <variant>

#include "snc/errors.hpp"
#include "snc/instance_io.hpp"
#include "snc/neighborhood.hpp"

namespace snc {

const char* to_string(CertificateVariant v) noexcept {
  return v == CertificateVariant::expanding ? "expanding" : "contracting";
}

FarkasSystem build_farkas_system(const Digraph& d) {
  const std::size_t n = d.size();
  FarkasSystem system;
  system.n.assign(n, RationalVector(n, Rational(0)));
  for (Vertex i = 0; i < n; ++i) {
    auto sets = neighborhoods(d, i);
    for (Vertex j : sets.first_out) system.n[i][j] = -1;
    for (Vertex j : sets.second_out) system.n[i][j] = 1;
  }

  system.a.assign(n + 1, RationalVector(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) system.a[i][j] = system.n[i][j];
    system.a[i][n + i] = -1;
    system.a[n][i] = 1;
  }
  system.b.assign(n + 1, Rational(0));
  system.b[n] = 1;
  return system;
}

namespace {

VertexWeighting normalized(RationalVector values) {
  Rational total = 0;
  for (const auto& v : values) total += v;
  if (total != 0) {
    for (auto& v : values) v /= total;
  }
  return VertexWeighting(std::move(values));
}

}  // namespace

FarkasCertificate dichotomy(const Digraph& d) {
  const std::size_t n = d.size();
  auto system = build_farkas_system(d);
  auto outcome = lp_feasible(system.a, system.b);

  FarkasCertificate cert;
  if (auto* feasible = std::get_if<Feasible>(&outcome)) {
    cert.variant = CertificateVariant::expanding;
    cert.weighting = normalized(RationalVector(feasible->x.begin(), feasible->x.begin() + n));
  } else {
    const auto& p = std::get<Infeasible>(outcome).p;
    RationalVector weights(n);
    for (std::size_t i = 0; i < n; ++i) {
      weights[i] = -p[i];
      if (weights[i] < 0) throw InternalError("Farkas vector has a positive vertex coordinate");
    }
    cert.variant = CertificateVariant::contracting;
    cert.weighting = normalized(std::move(weights));
  }

  if (!verify_certificate(d, cert).ok) {
    throw InternalError(std::string("dichotomy produced an unverifiable ") + to_string(cert.variant) + " certificate");
  }
  return cert;
}

CertificateCheck verify_certificate(const Digraph& d, const FarkasCertificate& cert) {
  CertificateCheck check;
  if (cert.weighting.size() != d.size()) {
    check.problem = "weighting covers " + std::to_string(cert.weighting.size()) + " vertices, digraph has " +
                    std::to_string(d.size());
    return check;
  }
  if (cert.variant == CertificateVariant::expanding) {
    if (cert.weighting.total() == 0) check.problem = "expanding weighting is identically zero";
    auto excess = vertex_weighted_excess(d, cert.weighting);
    for (Vertex v = 0; v < d.size(); ++v) {
      if (excess[v] > 0) check.violations.push_back(v);
    }
  } else {
    auto excess = vertex_weighted_excess(reverse(d), cert.weighting);
    for (Vertex v = 0; v < d.size(); ++v) {
      if (excess[v] <= 0) check.violations.push_back(v);
    }
  }
  check.ok = !check.problem && check.violations.empty();
  return check;
}

std::string serialize_certificate(const FarkasCertificate& cert) {
  std::ostringstream out;
  out << "variant " << to_string(cert.variant) << '\n';
  for (Vertex v = 0; v < cert.weighting.size(); ++v) out << "w " << v << ' ' << to_string(cert.weighting[v]) << '\n';
  return out.str();
}

FarkasCertificate parse_certificate(std::string_view text, std::size_t n) {
  auto lines = detail::tokenize(text);
  if (lines.empty() || lines.front().tokens[0] != "variant" || lines.front().tokens.size() != 2) {
    throw ParseError(lines.empty() ? 1 : lines.front().number, "expected 'variant expanding|contracting'");
  }
  FarkasCertificate cert;
  const auto& kind = lines.front().tokens[1];
  if (kind == "expanding") {
    cert.variant = CertificateVariant::expanding;
  } else if (kind == "contracting") {
    cert.variant = CertificateVariant::contracting;
  } else {
    throw ParseError(lines.front().number, "unknown variant '" + kind + "'");
  }

  RationalVector weights(n, Rational(0));
  std::vector<char> seen(n, 0);
  for (auto it = lines.begin() + 1; it != lines.end(); ++it) {
    if (it->tokens[0] != "w" || it->tokens.size() != 3) throw ParseError(it->number, "expected 'w <v> <weight>'");
    Vertex v = detail::parse_index(it->tokens[1], it->number);
    if (v >= n) throw ParseError(it->number, "vertex " + it->tokens[1] + " out of range");
    if (seen[v]) throw ParseError(it->number, "duplicate weight for vertex " + it->tokens[1]);
    seen[v] = 1;
    weights[v] = detail::parse_weight(it->tokens[2], it->number);
  }
  cert.weighting = VertexWeighting(std::move(weights));
  return cert;
}

namespace {

// Rows: inflow(u) - outflow(u) + s_u = 0, then sum l = 1.
std::optional<VertexWeighting> solve_losing_density(const Digraph& d, bool use_arc_weights) {
  const std::size_t n = d.size();
  RationalMatrix a(n + 1, RationalVector(2 * n, Rational(0)));
  for (const auto& arc : d.arcs()) {
    Rational w = use_arc_weights ? arc.weight : Rational(1);
    a[arc.head][arc.tail] += w;
    a[arc.tail][arc.head] -= w;
  }
  for (std::size_t i = 0; i < n; ++i) {
    a[i][n + i] = 1;
    a[n][i] = 1;
  }
  RationalVector b(n + 1, Rational(0));
  b[n] = 1;

  auto outcome = lp_feasible(a, b);
  auto* feasible = std::get_if<Feasible>(&outcome);
  if (feasible == nullptr) return std::nullopt;
  VertexWeighting density(RationalVector(feasible->x.begin(), feasible->x.begin() + n));
  if (!is_losing_density(d, density, use_arc_weights)) throw InternalError("losing density failed verification");
  return density;
}

}  // namespace

bool is_losing_density(const Digraph& d, const VertexWeighting& l, bool use_arc_weights) {
  if (l.size() != d.size() || l.total() != 1) return false;
  RationalVector balance(d.size(), Rational(0));
  for (const auto& arc : d.arcs()) {
    Rational w = use_arc_weights ? arc.weight : Rational(1);
    balance[arc.head] += w * l[arc.tail];
    balance[arc.tail] -= w * l[arc.head];
  }
  for (const auto& b : balance) {
    if (b > 0) return false;
  }
  return true;
}

VertexWeighting losing_density(const Digraph& d) {
  auto density = solve_losing_density(d, false);
  if (!density) throw InternalError("no losing density found; every digraph has one");
  return *density;
}

std::optional<VertexWeighting> arc_weighted_losing_density(const Digraph& d) {
  return solve_losing_density(d, true);
}

Digraph density_weighted_reverse(const Digraph& d, const VertexWeighting& l) {
  l.check_domain(d.size());
  Digraph r(d.size());
  for (const auto& arc : d.arcs()) r.add_arc(arc.head, arc.tail, Rational(arc.weight * l[arc.tail]));
  return r;
}

}  // namespace snc
