#include "snc/median_order.hpp"

#include <bit>
#include <cstdint>
#include <limits>
#include <sstream>

#include "snc/errors.hpp"

namespace snc {

const char* to_string(OrderMode mode) noexcept { return mode == OrderMode::count ? "count" : "weight"; }

namespace {

// cost[v][u]: price of placing v after u, i.e. of arc v -> u pointing back.
template <typename Cost>
std::vector<Vertex> optimal_order(const std::vector<std::vector<Cost>>& cost) {
  const std::size_t n = cost.size();
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint32_t> out_mask(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t u = 0; u < n; ++u) {
      if (cost[v][u] != 0) out_mask[v] |= std::uint32_t{1} << u;
    }
  }

  auto placement = [&](std::size_t v, std::uint32_t prefix) {
    Cost c = 0;
    for (std::uint32_t bits = prefix & out_mask[v]; bits != 0; bits &= bits - 1) c += cost[v][std::countr_zero(bits)];
    return c;
  };

  // rest[S]: cheapest completion once the vertices of S form the prefix.
  std::vector<Cost> rest(std::size_t{full} + 1, Cost(0));
  for (std::uint32_t s = full; s-- > 0;) {
    bool first = true;
    for (std::size_t v = 0; v < n; ++v) {
      if (s & (std::uint32_t{1} << v)) continue;
      Cost candidate = placement(v, s) + rest[s | (std::uint32_t{1} << v)];
      if (first || candidate < rest[s]) {
        rest[s] = candidate;
        first = false;
      }
    }
  }

  std::vector<Vertex> order;
  order.reserve(n);
  std::uint32_t prefix = 0;
  while (prefix != full) {
    for (std::size_t v = 0; v < n; ++v) {
      if (prefix & (std::uint32_t{1} << v)) continue;
      if (placement(v, prefix) + rest[prefix | (std::uint32_t{1} << v)] == rest[prefix]) {
        order.push_back(v);
        prefix |= std::uint32_t{1} << v;
        break;
      }
    }
  }
  return order;
}

Rational arc_cost(const Arc& arc, OrderMode mode) { return mode == OrderMode::count ? Rational(1) : arc.weight; }

}  // namespace

MedianOrder median_order(const Digraph& d, OrderMode mode, std::size_t cap) {
  const std::size_t n = d.size();
  if (n > cap || n > 30) {
    throw PreconditionError("median order needs n <= " + std::to_string(std::min<std::size_t>(cap, 30)) +
                            ", got " + std::to_string(n));
  }

  // Clear denominators so the DP can run on machine integers when the total
  // fits; otherwise fall back to exact rationals.
  Integer scale = 1;
  Rational total = 0;
  for (const auto& arc : d.arcs()) {
    Rational c = arc_cost(arc, mode);
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
    total += c;
  }
  const Rational scaled_total = total * scale;
  MedianOrder result;
  if (scaled_total.get_num().fits_slong_p() && scaled_total < std::numeric_limits<std::int64_t>::max() / 2) {
    std::vector<std::vector<std::int64_t>> cost(n, std::vector<std::int64_t>(n, 0));
    for (const auto& arc : d.arcs()) cost[arc.tail][arc.head] = Rational(arc_cost(arc, mode) * scale).get_num().get_si();
    result.order = optimal_order(cost);
  } else {
    std::vector<std::vector<Rational>> cost(n, std::vector<Rational>(n, Rational(0)));
    for (const auto& arc : d.arcs()) cost[arc.tail][arc.head] = arc_cost(arc, mode);
    result.order = optimal_order(cost);
  }
  result.backward = backward_weight(d, result.order, mode);
  return result;
}

Rational backward_weight(const Digraph& d, std::span<const Vertex> order, OrderMode mode) {
  const std::size_t n = d.size();
  std::vector<std::size_t> position(n, n);
  if (order.size() != n) throw PreconditionError("order length differs from vertex count");
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || position[order[i]] != n) throw PreconditionError("order is not a permutation", order[i]);
    position[order[i]] = i;
  }
  Rational sum = 0;
  for (const auto& arc : d.arcs()) {
    if (position[arc.tail] > position[arc.head]) sum += arc_cost(arc, mode);
  }
  return sum;
}

LastVertexCheck last_vertex_seymour(const Digraph& d, OrderMode mode, std::size_t cap) {
  LastVertexCheck check;
  check.order = median_order(d, mode, cap);
  if (check.order.order.empty()) return check;
  const Vertex last = check.order.order.back();
  check.report = vertex_report(d, last);
  auto sets = neighborhoods(d, last);
  check.first_out = sets.first_out.size();
  check.second_out = sets.second_out.size();
  check.seymour = mode == OrderMode::count ? check.first_out <= check.second_out : check.report.delta >= 0;
  return check;
}

std::string serialize(const MedianOrder& order) {
  std::ostringstream out;
  for (std::size_t i = 0; i < order.order.size(); ++i) out << (i ? " " : "") << order.order[i];
  out << "\nbackward " << to_string(order.backward) << '\n';
  return out.str();
}

}  // namespace snc
