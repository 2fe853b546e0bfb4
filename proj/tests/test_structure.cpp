#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "brute.hpp"
#include "fixtures.hpp"
#include "indratio/error.hpp"
#include "indratio/gen.hpp"
#include "indratio/structure.hpp"

using namespace indratio;

TEST_CASE("enumerate_triangles matches brute force", "[structure]") {
  CHECK(enumerate_triangles(fixtures::complete(4)).size() == 4);
  CHECK(enumerate_triangles(fixtures::cycle(5)).empty());

  const auto fig = enumerate_triangles(figure1_graph());
  CHECK(fig == brute::triangles(figure1_graph()));
  // r-t-b plus one triangle in each of the four gadgets
  CHECK(fig.size() == 5);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = brute::random_graph(1 + rng() % 14, 0.4, rng);
    REQUIRE(enumerate_triangles(g) == brute::triangles(g));
  }
}

TEST_CASE("edge_on_cycle finds bounded cycles through an edge", "[structure]") {
  const Graph c5 = fixtures::cycle(5);
  auto five = edge_on_cycle(c5, {0, 1}, 5);
  REQUIRE(five);
  CHECK(*five == std::vector<Vertex>{0, 1, 2, 3, 4});
  CHECK_FALSE(edge_on_cycle(c5, {0, 1}, 4));
  CHECK_FALSE(edge_on_cycle(c5, {0, 1}, 3));

  auto four = edge_on_cycle(fixtures::complete(4), {0, 1}, 4);
  REQUIRE(four);
  CHECK(*four == std::vector<Vertex>{0, 1, 2, 3});

  CHECK_THROWS_AS(edge_on_cycle(c5, {0, 2}, 4), InvalidEdge);
  CHECK_THROWS_AS(edge_on_cycle(c5, {0, 1}, 6), InvalidParameter);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = brute::random_graph(3 + rng() % 9, 0.45, rng);
    for (auto [u, v] : g.edges())
      for (int k = 3; k <= 5; ++k) {
        auto c = edge_on_cycle(g, {u, v}, k);
        REQUIRE(c.has_value() == brute::cycle_through(g, u, v, k));
      }
  }
}

TEST_CASE("find_forbidden on the named examples", "[structure]") {
  const Graph k4 = fixtures::complete(4);
  auto w = find_forbidden(k4, GraphClass::T4);
  REQUIRE(w);
  CHECK(w->kind == WitnessKind::Triangle4Cycle);
  CHECK(w->triangle == VertexSet{0, 1, 2});
  CHECK(w->shared_edge == Edge{0, 1});
  CHECK(witness_is_valid(k4, *w));

  const Graph diamond = fixtures::diamond();
  auto d = find_forbidden(diamond, GraphClass::T4);
  REQUIRE(d);
  CHECK(d->triangle == VertexSet{0, 1, 2});
  CHECK(d->shared_edge == Edge{0, 1});
  CHECK(d->cycle == std::vector<Vertex>{0, 1, 3, 2});
  CHECK(witness_is_valid(diamond, *d));

  auto dt = find_forbidden(diamond, GraphClass::T35);
  REQUIRE(dt);
  CHECK(dt->kind == WitnessKind::TriangleTriangle);
  CHECK(dt->shared_edge == Edge{1, 2});

  CHECK_FALSE(find_forbidden(figure1_graph(), GraphClass::T4));
  CHECK_FALSE(brute::has_4cycle(figure1_graph()));

  CHECK(format_witness(*d) == "kind: triangle-4cycle\ntriangle: 0 1 2\ncycle: 0 1 3 2\nshared_edge: 0 1\n");
}

TEST_CASE("witness_is_valid rejects tampered witnesses", "[structure]") {
  const Graph k4 = fixtures::complete(4);
  auto w = *find_forbidden(k4, GraphClass::T4);
  auto bad_cycle = w;
  bad_cycle.cycle = {0, 1, 2, 2};
  CHECK_FALSE(witness_is_valid(k4, bad_cycle));
  auto bad_edge = w;
  bad_edge.shared_edge = {0, 3};
  CHECK_FALSE(witness_is_valid(k4, bad_edge));
  auto bad_kind = w;
  bad_kind.kind = WitnessKind::Triangle5Cycle;
  CHECK_FALSE(witness_is_valid(k4, bad_kind));
  CHECK_FALSE(witness_is_valid(fixtures::cycle(4), w));
}

TEST_CASE("class detection agrees with brute force; T35 implies T4", "[structure][property]") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 400; ++trial) {
    const Graph g = brute::random_graph(3 + rng() % 10, 0.15 + 0.3 * static_cast<double>(rng() % 10) / 10.0, rng);
    auto t4 = find_forbidden(g, GraphClass::T4);
    auto t35 = find_forbidden(g, GraphClass::T35);
    REQUIRE(t4.has_value() == brute::violates_t4(g));
    REQUIRE(t35.has_value() == brute::violates_t35(g));
    if (!t35) REQUIRE_FALSE(t4);
    if (t4) REQUIRE(witness_is_valid(g, *t4));
    if (t35) REQUIRE(witness_is_valid(g, *t35));
    if (!t4) {
      // no two triangles share an edge
      const auto tri = enumerate_triangles(g);
      for (std::size_t i = 0; i < tri.size(); ++i)
        for (std::size_t j = i + 1; j < tri.size(); ++j) {
          VertexSet common;
          std::set_intersection(tri[i].begin(), tri[i].end(), tri[j].begin(), tri[j].end(),
                                std::back_inserter(common));
          REQUIRE(common.size() < 2);
        }
    }
  }
}

TEST_CASE("difficult_components", "[structure]") {
  const Graph g = disjoint_union(fixtures::triangle(), fixtures::two_chain());
  auto r = difficult_components(g);
  CHECK(r.lambda == 2);
  CHECK(r.triangle_components == std::vector<VertexSet>{{0, 1, 2}});
  CHECK(r.two_chain_components == std::vector<VertexSet>{{3, 4, 5, 6, 7, 8}});

  const std::vector<Edge> pendant{{0, 1}, {0, 2}, {1, 2}, {2, 3}};
  CHECK(difficult_components(Graph::from_edge_list(4, pendant)).lambda == 0);
  CHECK(difficult_components(figure1_graph()).lambda == 0);
  CHECK(difficult_components(fixtures::cycle(6)).lambda == 0);
}

TEST_CASE("difficult_components agrees with isomorphism to the patterns", "[structure][property]") {
  const Graph tri = fixtures::triangle();
  const Graph chain = fixtures::two_chain();
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    const Graph g = brute::random_graph(1 + rng() % 14, 0.2, rng);
    const auto r = difficult_components(g);
    std::size_t tri_count = 0;
    std::size_t chain_count = 0;
    for (const auto& comp : connected_components(g)) {
      const Graph h = induced_subgraph(g, comp).graph;
      if (h.vertex_count() == 3 && brute::isomorphic(h, tri)) ++tri_count;
      if (h.vertex_count() == 6 && brute::isomorphic(h, chain)) ++chain_count;
    }
    REQUIRE(r.triangle_components.size() == tri_count);
    REQUIRE(r.two_chain_components.size() == chain_count);
    REQUIRE(r.lambda == tri_count + chain_count);
  }
}

TEST_CASE("phi counts boundary edges", "[structure]") {
  const Graph g = disjoint_union(fixtures::triangle(), fixtures::cycle(5));
  CHECK(phi(g, VertexSet{0, 1, 2}) == 0);
  CHECK(phi(fixtures::complete(4), VertexSet{0, 1, 2}) == 3);
  // v=0, v1..v4 = 8..11: v has r as its only outside neighbor; each vi has two
  CHECK(phi(figure1_graph(), VertexSet{0, 8, 9, 10, 11}) == 9);
  CHECK_THROWS_AS(phi(g, VertexSet{42}), InvalidVertex);
}
