#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "snc/digraph.hpp"

namespace snc {

/// Contents of an instance file. `vertex_weights` is set iff the file carried
/// at least one `vweight` line; unlisted vertices then weigh 0.
struct Instance {
  Digraph graph;
  std::optional<VertexWeighting> vertex_weights;
};

/// Line-oriented instance format:
///
///     digraph <n>
///     arc <u> <v> <w>        w is p or p/q
///     vweight <v> <w>
///
/// `#` starts a comment that runs to end of line. Throws ParseError carrying
/// the 1-based line number for syntax errors and invariant violations alike.
Instance parse_instance(std::string_view text);
Digraph parse_digraph(std::string_view text);

/// Canonical form: lowest-terms weights, arcs sorted by (tail, head), then the
/// vertex weights in vertex order when present.
std::string serialize(const Digraph& d);
std::string serialize(const Instance& instance);

/// A standalone weighting: `vweight <v> <w>` lines over n vertices; unlisted
/// vertices weigh 0.
VertexWeighting parse_weighting(std::string_view text, std::size_t n);
std::string serialize_weighting(const VertexWeighting& eta);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

namespace detail {

struct TextLine {
  std::size_t number;
  std::vector<std::string> tokens;
};

/// Splits into whitespace-separated tokens per line, dropping comments and
/// blank lines.
std::vector<TextLine> tokenize(std::string_view text);
std::size_t parse_index(const std::string& token, std::size_t line);
Rational parse_weight(const std::string& token, std::size_t line);

}  // namespace detail

}  // namespace snc
