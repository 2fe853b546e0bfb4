#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace indratio {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free list of vertex identifiers.
using VertexSet = std::vector<Vertex>;

/// Sorts and deduplicates `vs` in place and returns it.
VertexSet normalized(VertexSet vs);

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency lists are kept sorted, so neighbor iteration is in ascending
/// order and every algorithm built on top is deterministic.
class Graph {
public:
  Graph() = default;

  /// Builds the graph with exactly the given edges.
  /// Throws InvalidEdge on self-loops or duplicates, InvalidVertex on
  /// out-of-range endpoints.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;
  bool contains(Vertex v) const noexcept {
    return v >= 0 && static_cast<std::size_t>(v) < adjacency_.size();
  }

  /// All edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Result of deleting a vertex set: the induced subgraph on the survivors,
/// relabeled to 0..n'-1, together with the maps between the two labelings.
struct VertexDeletion {
  Graph graph;
  std::vector<Vertex> to_parent;    // new label -> old label
  std::vector<Vertex> from_parent;  // old label -> new label, or -1 if deleted
};

/// Induced subgraph on V(g) \ x. Throws InvalidVertex if x names a missing vertex.
VertexDeletion remove_vertices(const Graph& g, std::span<const Vertex> x);

/// Induced subgraph on `keep` (sorted), relabeled in ascending order.
VertexDeletion induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// Connected components, each ascending, sorted by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// Number of edges with at least one end in x.
std::size_t incident_edge_count(const Graph& g, std::span<const Vertex> x);

/// Vertices of h placed after those of g.
Graph disjoint_union(const Graph& g, const Graph& h);

/// Graph with vertex v renamed to perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace indratio
