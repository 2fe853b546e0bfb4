#include "indratio/structure.hpp"

#include <algorithm>
#include <array>

#include "indratio/error.hpp"

namespace indratio {

std::string to_string(GraphClass c) { return c == GraphClass::T4 ? "T4" : "T35"; }

GraphClass parse_graph_class(std::string_view name) {
  if (name == "T4" || name == "t4") return GraphClass::T4;
  if (name == "T35" || name == "t35") return GraphClass::T35;
  throw InvalidParameter("unknown graph class '" + std::string(name) + "' (expected T4 or T35)");
}

std::string to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::TriangleTriangle: return "triangle-triangle";
    case WitnessKind::Triangle4Cycle: return "triangle-4cycle";
    case WitnessKind::Triangle5Cycle: return "triangle-5cycle";
  }
  return "unknown";
}

std::vector<VertexSet> enumerate_triangles(const Graph& g) {
  std::vector<VertexSet> out;
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b : g.neighbors(a)) {
      if (b <= a) continue;
      for (Vertex c : g.neighbors(b))
        if (c > b && g.adjacent(a, c)) out.push_back({a, b, c});
    }
  return out;
}

namespace {

// Calls visit(path) for every simple path u, v, x1, ..., x_{k-2} whose last
// vertex is adjacent to u, in ascending-neighbor order, until visit returns true.
template <class Visit>
bool search_cycles(const Graph& g, Vertex u, Vertex v, int k, Visit&& visit) {
  std::vector<Vertex> path{u, v};
  auto extend = [&](auto&& self) -> bool {
    if (static_cast<int>(path.size()) == k) return g.adjacent(path.back(), u) && visit(path);
    for (Vertex w : g.neighbors(path.back())) {
      if (std::find(path.begin(), path.end(), w) != path.end()) continue;
      path.push_back(w);
      if (self(self)) return true;
      path.pop_back();
    }
    return false;
  };
  return extend(extend);
}

void check_edge(const Graph& g, Edge e) {
  if (!g.contains(e.first) || !g.contains(e.second) || !g.adjacent(e.first, e.second))
    throw InvalidEdge("(" + std::to_string(e.first) + "," + std::to_string(e.second) + ") is not an edge");
}

}  // namespace

std::optional<std::vector<Vertex>> edge_on_cycle(const Graph& g, Edge e, int k) {
  if (k < 3 || k > 5) throw InvalidParameter("cycle length must be 3, 4 or 5");
  check_edge(g, e);
  std::optional<std::vector<Vertex>> found;
  search_cycles(g, e.first, e.second, k, [&](const std::vector<Vertex>& p) {
    found = p;
    return true;
  });
  return found;
}

std::optional<ForbiddenWitness> find_forbidden(const Graph& g, GraphClass cls) {
  for (const auto& t : enumerate_triangles(g)) {
    const std::array<Edge, 3> sides{Edge{t[0], t[1]}, Edge{t[0], t[2]}, Edge{t[1], t[2]}};
    for (const auto& e : sides) {
      const Vertex third = t[0] + t[1] + t[2] - e.first - e.second;
      if (cls == GraphClass::T4) {
        if (auto c = edge_on_cycle(g, e, 4)) return ForbiddenWitness{WitnessKind::Triangle4Cycle, t, *c, e};
        continue;
      }
      std::optional<std::vector<Vertex>> other;
      search_cycles(g, e.first, e.second, 3, [&](const std::vector<Vertex>& p) {
        if (p[2] == third) return false;
        other = p;
        return true;
      });
      if (other) return ForbiddenWitness{WitnessKind::TriangleTriangle, t, *other, e};
      if (auto c = edge_on_cycle(g, e, 5)) return ForbiddenWitness{WitnessKind::Triangle5Cycle, t, *c, e};
    }
  }
  return std::nullopt;
}

bool witness_is_valid(const Graph& g, const ForbiddenWitness& w) {
  auto ok_vertex = [&](Vertex v) { return g.contains(v); };
  if (w.triangle.size() != 3 || !std::all_of(w.triangle.begin(), w.triangle.end(), ok_vertex)) return false;
  const auto& t = w.triangle;
  if (!(t[0] < t[1] && t[1] < t[2])) return false;
  if (!g.adjacent(t[0], t[1]) || !g.adjacent(t[0], t[2]) || !g.adjacent(t[1], t[2])) return false;

  const std::size_t len = w.kind == WitnessKind::TriangleTriangle ? 3 : w.kind == WitnessKind::Triangle4Cycle ? 4 : 5;
  const auto& c = w.cycle;
  if (c.size() != len || !std::all_of(c.begin(), c.end(), ok_vertex)) return false;
  auto sorted = normalized(c);
  if (sorted.size() != len) return false;
  if (w.kind == WitnessKind::TriangleTriangle && sorted == t) return false;

  auto [u, v] = w.shared_edge;
  if (u >= v) return false;
  auto in_triangle = [&](Vertex x) { return std::binary_search(t.begin(), t.end(), x); };
  if (!in_triangle(u) || !in_triangle(v)) return false;
  bool shared_on_cycle = false;
  for (std::size_t i = 0; i < len; ++i) {
    Vertex a = c[i];
    Vertex b = c[(i + 1) % len];
    if (!g.adjacent(a, b)) return false;
    if (std::min(a, b) == u && std::max(a, b) == v) shared_on_cycle = true;
  }
  return shared_on_cycle;
}

std::string format_witness(const ForbiddenWitness& w) {
  auto join = [](const std::vector<Vertex>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + std::to_string(vs[i]);
    return s;
  };
  return "kind: " + to_string(w.kind) + "\ntriangle: " + join(w.triangle) + "\ncycle: " + join(w.cycle) +
         "\nshared_edge: " + std::to_string(w.shared_edge.first) + " " + std::to_string(w.shared_edge.second) + "\n";
}

bool is_triangle_component(const Graph& g, std::span<const Vertex> comp) {
  return comp.size() == 3 && std::all_of(comp.begin(), comp.end(), [&](Vertex v) { return g.degree(v) == 2; }) &&
         g.adjacent(comp[0], comp[1]) && g.adjacent(comp[0], comp[2]) && g.adjacent(comp[1], comp[2]);
}

bool is_two_chain_component(const Graph& g, std::span<const Vertex> comp) {
  if (comp.size() != 6) return false;
  std::vector<Vertex> hubs;
  std::size_t degree_sum = 0;
  for (Vertex v : comp) {
    degree_sum += g.degree(v);
    if (g.degree(v) == 3) hubs.push_back(v);
    else if (g.degree(v) != 2) return false;
  }
  if (degree_sum != 14 || hubs.size() != 2 || !g.adjacent(hubs[0], hubs[1])) return false;
  // each hub together with its two other neighbors spans a triangle
  for (Vertex h : hubs) {
    std::vector<Vertex> rest;
    for (Vertex w : g.neighbors(h))
      if (w != hubs[0] && w != hubs[1]) rest.push_back(w);
    if (rest.size() != 2 || !g.adjacent(rest[0], rest[1])) return false;
  }
  return true;
}

DifficultReport difficult_components(const Graph& g) {
  DifficultReport r;
  for (auto& comp : connected_components(g)) {
    if (is_triangle_component(g, comp)) r.triangle_components.push_back(std::move(comp));
    else if (is_two_chain_component(g, comp)) r.two_chain_components.push_back(std::move(comp));
  }
  r.lambda = r.triangle_components.size() + r.two_chain_components.size();
  return r;
}

std::size_t phi(const Graph& g, std::span<const Vertex> h) {
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : h) {
    if (!g.contains(v)) throw InvalidVertex("vertex " + std::to_string(v) + " is not in the graph");
    in[static_cast<std::size_t>(v)] = 1;
  }
  std::size_t count = 0;
  for (Vertex v : normalized({h.begin(), h.end()}))
    for (Vertex w : g.neighbors(v))
      if (!in[static_cast<std::size_t>(w)]) ++count;
  return count;
}

}  // namespace indratio
