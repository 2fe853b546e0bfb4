#include "indratio/graph.hpp"

#include <algorithm>
#include <string>

#include "indratio/error.hpp"

namespace indratio {

namespace {

std::string edge_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

std::vector<char> membership(const Graph& g, std::span<const Vertex> x) {
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : x) {
    if (!g.contains(v)) throw InvalidVertex("vertex " + std::to_string(v) + " is not in the graph");
    in[static_cast<std::size_t>(v)] = 1;
  }
  return in;
}

}  // namespace

VertexSet normalized(VertexSet vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.adjacency_.resize(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
      throw InvalidVertex("edge " + edge_text(u, v) + " has an endpoint outside 0.." +
                          std::to_string(n) + "-1");
    if (u == v) throw InvalidEdge("self-loop at vertex " + std::to_string(u));
    g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
    g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& adj = g.adjacency_[v];
    std::sort(adj.begin(), adj.end());
    auto dup = std::adjacent_find(adj.begin(), adj.end());
    if (dup != adj.end())
      throw InvalidEdge("duplicate edge " + edge_text(static_cast<Vertex>(v), *dup));
  }
  g.edge_count_ = edges.size();
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nu = neighbors(u);
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < adjacency_.size(); ++u)
    for (Vertex v : adjacency_[u])
      if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
  return out;
}

VertexDeletion remove_vertices(const Graph& g, std::span<const Vertex> x) {
  auto removed = membership(g, x);
  VertexSet keep;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (!removed[v]) keep.push_back(static_cast<Vertex>(v));
  return induced_subgraph(g, keep);
}

VertexDeletion induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  membership(g, keep);
  VertexDeletion out;
  out.from_parent.assign(g.vertex_count(), -1);
  out.to_parent.assign(keep.begin(), keep.end());
  for (std::size_t i = 0; i < keep.size(); ++i) out.from_parent[static_cast<std::size_t>(keep[i])] = static_cast<Vertex>(i);

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (Vertex w : g.neighbors(keep[i])) {
      Vertex j = out.from_parent[static_cast<std::size_t>(w)];
      if (j > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), j);
    }
  out.graph = Graph::from_edge_list(keep.size(), edges);
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> stack;
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    seen[s] = 1;
    stack.push_back(static_cast<Vertex>(s));
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::size_t incident_edge_count(const Graph& g, std::span<const Vertex> x) {
  auto in = membership(g, x);
  std::size_t count = 0;
  for (auto [u, v] : g.edges())
    if (in[static_cast<std::size_t>(u)] || in[static_cast<std::size_t>(v)]) ++count;
  return count;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  auto edges = g.edges();
  const auto shift = static_cast<Vertex>(g.vertex_count());
  for (auto [u, v] : h.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph::from_edge_list(g.vertex_count() + h.vertex_count(), edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.vertex_count()) throw InvalidParameter("permutation size does not match the graph");
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return Graph::from_edge_list(g.vertex_count(), edges);
}

}  // namespace indratio
