#include "snc/digraph.hpp"

#include <algorithm>
#include <string>

#include "snc/errors.hpp"

namespace snc {

namespace {

auto lower(std::vector<Neighbor>& list, Vertex v) {
  return std::lower_bound(list.begin(), list.end(), v,
                          [](const Neighbor& n, Vertex x) { return n.vertex < x; });
}

auto lower(const std::vector<Neighbor>& list, Vertex v) {
  return std::lower_bound(list.begin(), list.end(), v,
                          [](const Neighbor& n, Vertex x) { return n.vertex < x; });
}

std::string arc_name(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Digraph::Digraph(std::size_t n) : out_(n), in_(n) {}

void Digraph::check_vertex(Vertex v) const {
  if (v >= size()) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for digraph on " +
                     std::to_string(size()) + " vertices");
  }
}

void Digraph::add_arc(Vertex tail, Vertex head, Rational weight) {
  weight.canonicalize();
  check_vertex(tail);
  check_vertex(head);
  if (tail == head) throw GraphError("loop at vertex " + std::to_string(tail));
  if (weight < 0) throw GraphError("negative weight on arc " + arc_name(tail, head));
  if (has_arc(tail, head)) throw GraphError("duplicate arc " + arc_name(tail, head));
  if (has_arc(head, tail)) throw GraphError("two-cycle between " + std::to_string(tail) + " and " + std::to_string(head));
  out_[tail].insert(lower(out_[tail], head), Neighbor{head, weight});
  in_[head].insert(lower(in_[head], tail), Neighbor{tail, std::move(weight)});
  ++arc_count_;
}

void Digraph::set_weight(Vertex tail, Vertex head, Rational weight) {
  weight.canonicalize();
  check_vertex(tail);
  check_vertex(head);
  if (weight < 0) throw GraphError("negative weight on arc " + arc_name(tail, head));
  auto it = lower(out_[tail], head);
  if (it == out_[tail].end() || it->vertex != head) throw GraphError("no arc " + arc_name(tail, head));
  it->weight = weight;
  lower(in_[head], tail)->weight = std::move(weight);
}

const Rational* Digraph::find_weight(Vertex tail, Vertex head) const {
  if (tail >= size() || head >= size()) return nullptr;
  auto it = lower(out_[tail], head);
  if (it == out_[tail].end() || it->vertex != head) return nullptr;
  return &it->weight;
}

bool Digraph::has_arc(Vertex tail, Vertex head) const { return find_weight(tail, head) != nullptr; }

Rational Digraph::weight_or_zero(Vertex tail, Vertex head) const {
  const Rational* w = find_weight(tail, head);
  return w != nullptr ? *w : Rational(0);
}

std::span<const Neighbor> Digraph::out(Vertex v) const {
  check_vertex(v);
  return out_[v];
}

std::span<const Neighbor> Digraph::in(Vertex v) const {
  check_vertex(v);
  return in_[v];
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count_);
  for (Vertex u = 0; u < size(); ++u) {
    for (const auto& [v, w] : out_[u]) result.push_back(Arc{u, v, w});
  }
  return result;
}

VertexWeighting::VertexWeighting(std::vector<Rational> values) : values_(std::move(values)) {
  for (std::size_t v = 0; v < values_.size(); ++v) {
    values_[v].canonicalize();
    if (values_[v] < 0) throw GraphError("negative weight on vertex " + std::to_string(v));
  }
}

VertexWeighting VertexWeighting::uniform(std::size_t n, const Rational& value) {
  return VertexWeighting(std::vector<Rational>(n, value));
}

Rational VertexWeighting::total() const {
  Rational sum = 0;
  for (const auto& w : values_) sum += w;
  return sum;
}

Rational VertexWeighting::sum_over(std::span<const Vertex> vertices) const {
  Rational sum = 0;
  for (Vertex v : vertices) sum += values_.at(v);
  return sum;
}

void VertexWeighting::check_domain(std::size_t n) const {
  if (values_.size() != n) {
    throw GraphError("vertex weighting covers " + std::to_string(values_.size()) +
                     " vertices but the digraph has " + std::to_string(n));
  }
}

namespace {

// Vertices at distance exactly two along `step`, given the first layer.
template <typename Step>
std::vector<Vertex> second_layer(std::size_t n, Vertex v, const std::vector<Vertex>& first, Step step) {
  std::vector<char> mark(n, 0);
  mark[v] = 1;
  for (Vertex u : first) mark[u] = 1;
  std::vector<Vertex> second;
  for (Vertex u : first) {
    for (const auto& nb : step(u)) {
      if (!mark[nb.vertex]) {
        mark[nb.vertex] = 1;
        second.push_back(nb.vertex);
      }
    }
  }
  std::sort(second.begin(), second.end());
  return second;
}

std::vector<Vertex> vertices_of(std::span<const Neighbor> list) {
  std::vector<Vertex> out;
  out.reserve(list.size());
  for (const auto& nb : list) out.push_back(nb.vertex);
  return out;
}

}  // namespace

NeighborhoodSets neighborhoods(const Digraph& d, Vertex v) {
  d.check_vertex(v);
  NeighborhoodSets sets;
  sets.first_out = vertices_of(d.out(v));
  sets.first_in = vertices_of(d.in(v));
  sets.second_out = second_layer(d.size(), v, sets.first_out, [&](Vertex u) { return d.out(u); });
  sets.second_in = second_layer(d.size(), v, sets.first_in, [&](Vertex u) { return d.in(u); });
  return sets;
}

Digraph reverse(const Digraph& d) {
  Digraph r(d.size());
  for (const auto& arc : d.arcs()) r.add_arc(arc.head, arc.tail, arc.weight);
  return r;
}

bool is_tournament(const Digraph& d) {
  const std::size_t n = d.size();
  // No two-cycles by construction, so the pair count suffices.
  return d.arc_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

bool every_arc_in_triangle(const Digraph& d) {
  for (const auto& arc : d.arcs()) {
    bool closed = false;
    for (const auto& nb : d.out(arc.head)) {
      if (d.has_arc(nb.vertex, arc.tail)) {
        closed = true;
        break;
      }
    }
    if (!closed) return false;
  }
  return true;
}

Digraph induced_subgraph(const Digraph& d, std::span<const Vertex> keep) {
  std::vector<std::size_t> index(d.size(), d.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    d.check_vertex(keep[i]);
    index[keep[i]] = i;
  }
  Digraph sub(keep.size());
  for (const auto& arc : d.arcs()) {
    if (index[arc.tail] < keep.size() && index[arc.head] < keep.size()) {
      sub.add_arc(index[arc.tail], index[arc.head], arc.weight);
    }
  }
  return sub;
}

}  // namespace snc
