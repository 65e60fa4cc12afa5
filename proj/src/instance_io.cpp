#include "snc/instance_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "snc/errors.hpp"

namespace snc {

namespace detail {

std::vector<TextLine> tokenize(std::string_view text) {
  std::vector<TextLine> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view() : text.substr(eol + 1);
    line = line.substr(0, line.find('#'));

    TextLine parsed{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) parsed.tokens.emplace_back(line.substr(start, i - start));
    }
    if (!parsed.tokens.empty()) lines.push_back(std::move(parsed));
  }
  return lines;
}

std::size_t parse_index(const std::string& token, std::size_t line) {
  if (token.empty() || token.size() > 18 ||
      !std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw ParseError(line, "expected a vertex index, got '" + token + "'");
  }
  return static_cast<std::size_t>(std::stoull(token));
}

Rational parse_weight(const std::string& token, std::size_t line) {
  Rational w;
  try {
    w = parse_rational(token);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
  if (w < 0) throw ParseError(line, "negative weight " + token);
  return w;
}

}  // namespace detail

using detail::parse_index;
using detail::parse_weight;

namespace {

void expect_arity(const detail::TextLine& line, std::size_t count) {
  if (line.tokens.size() != count) {
    throw ParseError(line.number, "'" + line.tokens[0] + "' takes " + std::to_string(count - 1) + " arguments");
  }
}

// Fills `values` from a `vweight` line, rejecting duplicates and bad indices.
void read_vweight(const detail::TextLine& line, std::size_t n, std::vector<Rational>& values,
                  std::vector<char>& seen) {
  expect_arity(line, 3);
  Vertex v = parse_index(line.tokens[1], line.number);
  if (v >= n) throw ParseError(line.number, "vertex " + line.tokens[1] + " out of range");
  if (seen[v]) throw ParseError(line.number, "duplicate vweight for vertex " + line.tokens[1]);
  seen[v] = 1;
  values[v] = parse_weight(line.tokens[2], line.number);
}

}  // namespace

Instance parse_instance(std::string_view text) {
  auto lines = detail::tokenize(text);
  if (lines.empty()) throw ParseError(1, "missing 'digraph <n>' header");
  const auto& header = lines.front();
  if (header.tokens[0] != "digraph") throw ParseError(header.number, "expected 'digraph <n>' header");
  expect_arity(header, 2);
  std::size_t n = parse_index(header.tokens[1], header.number);
  if (n < 1) throw ParseError(header.number, "digraph needs at least one vertex");

  Instance instance{Digraph(n), std::nullopt};
  std::vector<Rational> vweights(n, Rational(0));
  std::vector<char> seen(n, 0);
  bool any_vweight = false;

  for (auto it = lines.begin() + 1; it != lines.end(); ++it) {
    const auto& line = *it;
    const std::string& keyword = line.tokens[0];
    if (keyword == "arc") {
      expect_arity(line, 4);
      Vertex u = parse_index(line.tokens[1], line.number);
      Vertex v = parse_index(line.tokens[2], line.number);
      Rational w = parse_weight(line.tokens[3], line.number);
      try {
        instance.graph.add_arc(u, v, w);
      } catch (const GraphError& e) {
        throw ParseError(line.number, e.what());
      }
    } else if (keyword == "vweight") {
      read_vweight(line, n, vweights, seen);
      any_vweight = true;
    } else {
      throw ParseError(line.number, "unknown directive '" + keyword + "'");
    }
  }
  if (any_vweight) instance.vertex_weights = VertexWeighting(std::move(vweights));
  return instance;
}

Digraph parse_digraph(std::string_view text) { return parse_instance(text).graph; }

std::string serialize(const Digraph& d) {
  std::ostringstream out;
  out << "digraph " << d.size() << '\n';
  for (const auto& arc : d.arcs()) {
    out << "arc " << arc.tail << ' ' << arc.head << ' ' << to_string(arc.weight) << '\n';
  }
  return out.str();
}

std::string serialize(const Instance& instance) {
  std::string text = serialize(instance.graph);
  if (instance.vertex_weights) text += serialize_weighting(*instance.vertex_weights);
  return text;
}

VertexWeighting parse_weighting(std::string_view text, std::size_t n) {
  std::vector<Rational> values(n, Rational(0));
  std::vector<char> seen(n, 0);
  for (const auto& line : detail::tokenize(text)) {
    if (line.tokens[0] != "vweight") {
      throw ParseError(line.number, "expected 'vweight <v> <w>', got '" + line.tokens[0] + "'");
    }
    read_vweight(line, n, values, seen);
  }
  return VertexWeighting(std::move(values));
}

std::string serialize_weighting(const VertexWeighting& eta) {
  std::ostringstream out;
  for (Vertex v = 0; v < eta.size(); ++v) out << "vweight " << v << ' ' << to_string(eta[v]) << '\n';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path + "'");
  out << contents;
  if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace snc
