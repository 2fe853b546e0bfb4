#pragma once

#include <algorithm>
#include <vector>

#include "indratio/graph.hpp"

namespace fixtures {

using indratio::Edge;
using indratio::Graph;
using indratio::Vertex;

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edge_list(static_cast<std::size_t>(n), e);
}

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edge_list(static_cast<std::size_t>(n), e);
}

inline Graph triangle() { return complete(3); }

// K4 minus the edge 03
inline Graph diamond() {
  std::vector<Edge> e{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}};
  return Graph::from_edge_list(4, e);
}

// two triangles 012 and 345 joined by 2-3
inline Graph two_chain() {
  std::vector<Edge> e{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {2, 3}};
  return Graph::from_edge_list(6, e);
}

inline Graph k33() {
  std::vector<Edge> e;
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) e.emplace_back(i, j);
  return Graph::from_edge_list(6, e);
}

// generalized Petersen graph GP(n, k), 2k != n: outer i, inner n + i
inline Graph generalized_petersen(int n, int k) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    e.emplace_back(i, (i + 1) % n);
    e.emplace_back(i, n + i);
    const int a = n + i;
    const int b = n + (i + k) % n;
    e.emplace_back(std::min(a, b), std::max(a, b));
  }
  return Graph::from_edge_list(static_cast<std::size_t>(2 * n), e);
}

inline Graph petersen() { return generalized_petersen(5, 2); }
inline Graph mobius_kantor() { return generalized_petersen(8, 3); }

// 3-cube Q3
inline Graph cube() { return generalized_petersen(4, 1); }

// cubic graph with a bridge: two copies of K4 with one edge subdivided, joined
// through the subdivision vertices
inline Graph cubic_with_bridge() {
  std::vector<Edge> e;
  for (int base : {0, 5}) {
    // K4 on base..base+3 minus edge (base, base+1), plus subdivision vertex base+4
    e.emplace_back(base, base + 2);
    e.emplace_back(base, base + 3);
    e.emplace_back(base + 1, base + 2);
    e.emplace_back(base + 1, base + 3);
    e.emplace_back(base + 2, base + 3);
    e.emplace_back(base, base + 4);
    e.emplace_back(base + 1, base + 4);
  }
  e.emplace_back(4, 9);
  return Graph::from_edge_list(10, e);
}

}  // namespace fixtures
