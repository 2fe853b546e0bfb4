#include "indratio/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <vector>

#include "indratio/error.hpp"

namespace indratio {

namespace {

constexpr int kBias = 63;
constexpr std::size_t kMaxShortForm = 62;
constexpr std::size_t kMaxMediumForm = 258047;
constexpr std::string_view kHeader = ">>graph6<<";

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// `base` shifts reported offsets back into the caller's coordinates.
int sextet(std::string_view s, std::size_t pos, std::size_t base) {
  if (pos >= s.size()) throw ParseError("graph6 input truncated", base + pos);
  int c = static_cast<unsigned char>(s[pos]);
  if (c < kBias || c > kBias + 63) throw ParseError("byte outside the graph6 range 63..126", base + pos);
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kHeader)) base = kHeader.size();
  std::string_view body = text.substr(base);
  while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) body.remove_suffix(1);

  std::size_t pos = 0;
  std::size_t n = 0;
  if (body.empty()) throw ParseError("empty graph6 input", base);
  if (body[0] == '~') {
    if (body.size() > 1 && body[1] == '~')
      throw ParseError("graph6 8-byte size form (n > 258047) is not supported", base + 1);
    pos = 1;
    for (int i = 0; i < 3; ++i, ++pos) n = (n << 6) | static_cast<std::size_t>(sextet(body, pos, base));
    if (n <= kMaxShortForm) throw ParseError("non-canonical graph6 size header", base);
  } else {
    n = static_cast<std::size_t>(sextet(body, 0, base));
    pos = 1;
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = pos + (bits + 5) / 6;
  if (body.size() < expected) throw ParseError("graph6 input truncated", base + body.size());
  if (body.size() > expected) throw ParseError("trailing bytes after graph6 data", base + expected);

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int byte = sextet(body, pos + k / 6, base);
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  if (bits % 6 != 0) {
    const int last = sextet(body, expected - 1, base);
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if (last & pad_mask) throw ParseError("nonzero graph6 padding bits", base + expected - 1);
  }
  return Graph::from_edge_list(n, edges);
}

std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::string out;
  if (n <= kMaxShortForm) {
    out.push_back(static_cast<char>(kBias + n));
  } else if (n <= kMaxMediumForm) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(kBias + ((n >> shift) & 63)));
  } else {
    throw NotSupported("graph6 output limited to 258047 vertices");
  }
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kBias + acc));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>(kBias + (acc << (6 - filled))));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::size_t pos = 0;
  auto next_int = [&](const char* what) -> long long {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos >= text.size()) throw ParseError(std::string("edge list ended while reading ") + what, pos);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc() || value < 0)
      throw ParseError(std::string("expected a nonnegative integer for ") + what, pos);
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  };
  const auto n = next_int("vertex count");
  const auto m = next_int("edge count");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    const auto u = next_int("edge endpoint");
    const auto v = next_int("edge endpoint");
    if (u >= n || v >= n)
      throw InvalidVertex("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint outside 0.." +
                          std::to_string(n) + "-1");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  while (pos < text.size() && is_space(text[pos])) ++pos;
  if (pos != text.size()) throw ParseError("unexpected trailing content in edge list", pos);
  return Graph::from_edge_list(static_cast<std::size_t>(n), edges);
}

std::string emit_edge_list(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph read_graph(std::string_view text, GraphFormat format) {
  std::string_view body = trim(text);
  if (format == GraphFormat::Auto) {
    if (body.empty()) throw ParseError("no graph in input", 0);
    format = std::isdigit(static_cast<unsigned char>(body.front())) ? GraphFormat::EdgeList : GraphFormat::Graph6;
  }
  if (format == GraphFormat::EdgeList) return parse_edge_list(body);
  if (body.find('\n') != std::string_view::npos)
    throw ParseError("expected a single graph6 line", body.find('\n'));
  return parse_graph6(body);
}

GraphFormat parse_format_name(std::string_view name) {
  if (name == "auto") return GraphFormat::Auto;
  if (name == "g6" || name == "graph6") return GraphFormat::Graph6;
  if (name == "edges" || name == "edgelist") return GraphFormat::EdgeList;
  throw InvalidParameter("unknown graph format '" + std::string(name) + "'");
}

}  // namespace indratio
