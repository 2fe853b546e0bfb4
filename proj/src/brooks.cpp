#include "indratio/brooks.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "indratio/error.hpp"

namespace indratio {

namespace {

constexpr int kColors = 3;

// Vertices reachable from root avoiding `blocked`, farthest first, root last.
std::vector<Vertex> order_towards(const Graph& g, Vertex root, const std::vector<char>& blocked) {
  std::vector<Vertex> bfs{root};
  std::vector<char> seen(blocked);
  seen[static_cast<std::size_t>(root)] = 1;
  for (std::size_t head = 0; head < bfs.size(); ++head)
    for (Vertex w : g.neighbors(bfs[head]))
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        bfs.push_back(w);
      }
  std::reverse(bfs.begin(), bfs.end());
  return bfs;
}

void greedy(const Graph& g, std::span<const Vertex> order, Coloring& color) {
  for (Vertex v : order) {
    std::array<bool, kColors + 1> used{};
    for (Vertex w : g.neighbors(v)) {
      int c = color[static_cast<std::size_t>(w)];
      if (c >= 0) used[static_cast<std::size_t>(c)] = true;
    }
    int c = 0;
    while (c < kColors && used[static_cast<std::size_t>(c)]) ++c;
    if (c == kColors) throw std::logic_error("greedy step ran out of colors at vertex " + std::to_string(v));
    color[static_cast<std::size_t>(v)] = c;
  }
}

bool connected_without(const Graph& g, const std::vector<char>& blocked) {
  Vertex start = -1;
  std::size_t open = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (!blocked[v]) {
      ++open;
      if (start < 0) start = static_cast<Vertex>(v);
    }
  if (open == 0) return true;
  return order_towards(g, start, blocked).size() == open;
}

// First articulation point in ascending order, or -1. Iterative Tarjan.
Vertex find_cut_vertex(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::size_t> next(n, 0);
  std::vector<char> cut(n, 0);
  int timer = 0;
  int root_children = 0;
  std::vector<Vertex> stack{0};
  disc[0] = low[0] = timer++;
  while (!stack.empty()) {
    Vertex v = stack.back();
    auto& i = next[static_cast<std::size_t>(v)];
    auto nv = g.neighbors(v);
    if (i < nv.size()) {
      Vertex w = nv[i++];
      auto wi = static_cast<std::size_t>(w);
      if (disc[wi] < 0) {
        parent[wi] = v;
        disc[wi] = low[wi] = timer++;
        if (v == 0) ++root_children;
        stack.push_back(w);
      } else if (w != parent[static_cast<std::size_t>(v)]) {
        low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], disc[wi]);
      }
      continue;
    }
    stack.pop_back();
    Vertex p = parent[static_cast<std::size_t>(v)];
    if (p >= 0) {
      auto pi = static_cast<std::size_t>(p);
      low[pi] = std::min(low[pi], low[static_cast<std::size_t>(v)]);
      if (p != 0 && low[static_cast<std::size_t>(v)] >= disc[pi]) cut[pi] = 1;
    }
  }
  if (root_children > 1) cut[0] = 1;
  auto it = std::find(cut.begin(), cut.end(), 1);
  return it == cut.end() ? -1 : static_cast<Vertex>(it - cut.begin());
}

Coloring color_through_cut_vertex(const Graph& g, Vertex c) {
  Coloring color(g.vertex_count(), -1);
  auto minus_c = remove_vertices(g, std::array{c});
  for (const auto& piece : connected_components(minus_c.graph)) {
    VertexSet keep{c};
    for (Vertex v : piece) keep.push_back(minus_c.to_parent[static_cast<std::size_t>(v)]);
    keep = normalized(std::move(keep));
    auto sub = induced_subgraph(g, keep);
    Coloring local(sub.graph.vertex_count(), -1);
    const Vertex root = sub.from_parent[static_cast<std::size_t>(c)];
    greedy(sub.graph, order_towards(sub.graph, root, std::vector<char>(sub.graph.vertex_count(), 0)), local);
    // rename colors so that every piece agrees on c
    const int at_root = local[static_cast<std::size_t>(root)];
    for (std::size_t i = 0; i < local.size(); ++i) {
      int k = local[i];
      if (k == at_root) k = 0;
      else if (k == 0) k = at_root;
      color[static_cast<std::size_t>(sub.to_parent[i])] = k;
    }
  }
  return color;
}

}  // namespace

Coloring brooks_three_coloring(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw PreconditionViolated("empty graph");
  for (std::size_t v = 0; v < n; ++v)
    if (g.degree(static_cast<Vertex>(v)) != 3)
      throw PreconditionViolated("graph is not 3-regular (vertex " + std::to_string(v) + " has degree " +
                                 std::to_string(g.degree(static_cast<Vertex>(v))) + ")");
  if (connected_components(g).size() != 1) throw PreconditionViolated("graph is not connected");
  if (n == 4) throw PreconditionViolated("graph is K4, which needs four colors");

  if (Vertex c = find_cut_vertex(g); c >= 0) return color_through_cut_vertex(g, c);

  std::vector<char> blocked(n, 0);
  for (std::size_t vi = 0; vi < n; ++vi) {
    const auto v = static_cast<Vertex>(vi);
    auto nv = g.neighbors(v);
    for (std::size_t i = 0; i < nv.size(); ++i)
      for (std::size_t j = i + 1; j < nv.size(); ++j) {
        const Vertex x = nv[i];
        const Vertex y = nv[j];
        if (g.adjacent(x, y)) continue;
        blocked[static_cast<std::size_t>(x)] = blocked[static_cast<std::size_t>(y)] = 1;
        if (connected_without(g, blocked)) {
          Coloring color(n, -1);
          color[static_cast<std::size_t>(x)] = color[static_cast<std::size_t>(y)] = 0;
          greedy(g, order_towards(g, v, blocked), color);
          return color;
        }
        blocked[static_cast<std::size_t>(x)] = blocked[static_cast<std::size_t>(y)] = 0;
      }
  }
  throw std::logic_error("no Brooks triple in a 2-connected cubic graph other than K4");
}

bool is_proper_coloring(const Graph& g, std::span<const int> color) {
  if (color.size() != g.vertex_count()) return false;
  for (int c : color)
    if (c < 0 || c >= kColors) return false;
  for (auto [u, v] : g.edges())
    if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) return false;
  return true;
}

}  // namespace indratio
