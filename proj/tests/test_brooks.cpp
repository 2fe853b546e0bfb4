#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <optional>
#include <random>

#include "fixtures.hpp"
#include "indratio/brooks.hpp"
#include "indratio/error.hpp"
#include "indratio/gen.hpp"

using namespace indratio;

namespace {

// pairing model, rejecting loops, multi-edges and disconnected results
std::optional<Graph> random_cubic(int n, std::mt19937_64& rng) {
  std::vector<Vertex> points;
  for (int v = 0; v < n; ++v)
    for (int k = 0; k < 3; ++k) points.push_back(v);
  std::shuffle(points.begin(), points.end(), rng);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < points.size(); i += 2) {
    if (points[i] == points[i + 1]) return std::nullopt;
    const Edge e{std::min(points[i], points[i + 1]), std::max(points[i], points[i + 1])};
    if (std::find(edges.begin(), edges.end(), e) != edges.end()) return std::nullopt;
    edges.push_back(e);
  }
  Graph g = Graph::from_edge_list(static_cast<std::size_t>(n), edges);
  if (connected_components(g).size() != 1) return std::nullopt;
  return g;
}

void check_coloring(const Graph& g) {
  const Coloring c = brooks_three_coloring(g);
  REQUIRE(c.size() == g.vertex_count());
  for (int x : c) REQUIRE((x >= 0 && x <= 2));
  for (const auto& [u, v] : g.edges()) REQUIRE(c[u] != c[v]);
  REQUIRE(is_proper_coloring(g, c));
}

}  // namespace

TEST_CASE("Brooks coloring on named cubic graphs", "[brooks]") {
  check_coloring(fixtures::petersen());
  check_coloring(fixtures::mobius_kantor());
  check_coloring(fixtures::cube());
  check_coloring(fixtures::k33());
  check_coloring(cylinder_grid(3, 2));
  check_coloring(fixtures::cubic_with_bridge());
  for (int n = 5; n <= 12; ++n)
    for (int k = 1; 2 * k < n; ++k) check_coloring(fixtures::generalized_petersen(n, k));
}

TEST_CASE("Brooks coloring preconditions", "[brooks]") {
  CHECK_THROWS_AS(brooks_three_coloring(fixtures::complete(4)), PreconditionViolated);
  CHECK_THROWS_AS(brooks_three_coloring(fixtures::cycle(5)), PreconditionViolated);
  CHECK_THROWS_AS(brooks_three_coloring(disjoint_union(fixtures::k33(), fixtures::petersen())), PreconditionViolated);
  CHECK_THROWS_AS(brooks_three_coloring(Graph{}), PreconditionViolated);
}

TEST_CASE("is_proper_coloring", "[brooks]") {
  const Graph c5 = fixtures::cycle(5);
  CHECK(is_proper_coloring(c5, std::vector<int>{0, 1, 0, 1, 2}));
  CHECK_FALSE(is_proper_coloring(c5, std::vector<int>{0, 1, 0, 1, 0}));
  CHECK_FALSE(is_proper_coloring(c5, std::vector<int>{0, 1, 0}));
}

TEST_CASE("Brooks coloring on random cubic graphs", "[brooks][property]") {
  std::mt19937_64 rng(2024);
  int colored = 0;
  while (colored < 300) {
    const int n = 4 + 2 * static_cast<int>(rng() % 14);
    auto g = random_cubic(n, rng);
    if (!g || *g == fixtures::complete(4)) continue;
    check_coloring(*g);
    ++colored;
  }
}
