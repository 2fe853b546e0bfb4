#include "indratio/gen.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "indratio/error.hpp"

namespace indratio {

Graph figure1_graph() {
  static const std::vector<Edge> edges{
      {0, 8},   {8, 4},   {4, 1},   {0, 9},   {9, 5},   {5, 1},   {8, 6},   {6, 4},   {9, 7},
      {7, 5},   {6, 7},   {0, 10},  {10, 12}, {12, 2},  {0, 11},  {11, 13}, {13, 2},  {10, 14},
      {14, 12}, {11, 15}, {15, 13}, {14, 15}, {3, 0},   {3, 1},   {3, 2},   {1, 2},
  };
  return Graph::from_edge_list(16, edges);
}

Graph cylinder_grid(std::size_t k, std::size_t m) {
  if (k < 3 || m < 2) throw InvalidParameter("cylinder grid needs k >= 3 and m >= 2");
  std::vector<Edge> edges;
  auto id = [k](std::size_t i, std::size_t j) { return static_cast<Vertex>(j * k + i); };
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < k; ++i) {
      edges.emplace_back(id(i, j), id((i + 1) % k, j));
      if (j + 1 < m) edges.emplace_back(id(i, j), id(i, j + 1));
    }
  return Graph::from_edge_list(k * m, edges);
}

Graph random_valid_graph(std::size_t n, double p, GraphClass cls, std::uint64_t seed) {
  if (n < 1) throw InvalidParameter("random graph needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidParameter("edge probability must lie in [0, 1]");

  std::mt19937_64 rng(seed);
  std::set<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      // 53 random bits mapped to [0, 1), independent of the standard library's distributions
      if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p)
        edges.emplace(static_cast<Vertex>(u), static_cast<Vertex>(v));

  for (;;) {
    const std::vector<Edge> list(edges.begin(), edges.end());
    Graph g = Graph::from_edge_list(n, list);
    auto w = find_forbidden(g, cls);
    if (!w) return g;
    const auto& t = w->triangle;
    auto on_triangle = [&](Edge e) {
      return std::binary_search(t.begin(), t.end(), e.first) && std::binary_search(t.begin(), t.end(), e.second);
    };
    std::vector<Edge> cycle_edges;
    for (std::size_t i = 0; i < w->cycle.size(); ++i) {
      auto [a, b] = std::minmax(w->cycle[i], w->cycle[(i + 1) % w->cycle.size()]);
      cycle_edges.emplace_back(a, b);
    }
    std::sort(cycle_edges.begin(), cycle_edges.end());
    auto victim = std::find_if(cycle_edges.begin(), cycle_edges.end(), [&](Edge e) { return !on_triangle(e); });
    edges.erase(victim != cycle_edges.end() ? *victim : Edge{t[0], t[1]});
  }
}

}  // namespace indratio
