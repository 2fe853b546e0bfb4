#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "indratio/graph.hpp"

namespace indratio {

/// Forbidden-configuration classes.
///  - T4:  no triangle shares an edge with a 4-cycle.
///  - T35: no triangle shares an edge with another triangle or with a 5-cycle.
enum class GraphClass { T4, T35 };

std::string to_string(GraphClass c);
GraphClass parse_graph_class(std::string_view name);

enum class WitnessKind { TriangleTriangle, Triangle4Cycle, Triangle5Cycle };

std::string to_string(WitnessKind k);

/// A triangle and a short cycle sharing `shared_edge`.
struct ForbiddenWitness {
  WitnessKind kind;
  VertexSet triangle;         // sorted
  std::vector<Vertex> cycle;  // in cycle order, starting at shared_edge.first
  Edge shared_edge;           // (u, v), u < v

  friend bool operator==(const ForbiddenWitness&, const ForbiddenWitness&) = default;
};

/// Triangle and 2-chain components (two disjoint triangles joined by one edge).
struct DifficultReport {
  std::vector<VertexSet> triangle_components;
  std::vector<VertexSet> two_chain_components;
  std::size_t lambda = 0;
};

/// All triangles, each as a sorted triple, in lexicographic order.
std::vector<VertexSet> enumerate_triangles(const Graph& g);

/// Some cycle of exactly k vertices (k in {3,4,5}) through edge e, or nothing.
/// The cycle starts with e.first, e.second. Among candidates the one found
/// first by ascending-neighbor search is returned.
/// Throws InvalidEdge if e is not an edge and InvalidParameter for other k.
std::optional<std::vector<Vertex>> edge_on_cycle(const Graph& g, Edge e, int k);

/// First forbidden configuration for `cls`, scanning triangles in
/// lexicographic order, their edges in lexicographic order, and (for T35)
/// triangle-triangle before triangle-5cycle.
std::optional<ForbiddenWitness> find_forbidden(const Graph& g, GraphClass cls);

/// Re-checks a witness against the graph: triangle edges present, the cycle is
/// a simple cycle of the length implied by `kind`, and the shared edge lies on both.
bool witness_is_valid(const Graph& g, const ForbiddenWitness& w);

/// Structured text record, one "key: value" line per field.
std::string format_witness(const ForbiddenWitness& w);

DifficultReport difficult_components(const Graph& g);

/// True iff the component `comp` (a whole connected component) is a triangle.
bool is_triangle_component(const Graph& g, std::span<const Vertex> comp);
bool is_two_chain_component(const Graph& g, std::span<const Vertex> comp);

/// Number of edges with exactly one end in h.
std::size_t phi(const Graph& g, std::span<const Vertex> h);

}  // namespace indratio
