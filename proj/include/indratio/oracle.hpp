#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "indratio/graph.hpp"

namespace indratio {

/// Above this many vertices the exact search may take very long.
inline constexpr std::size_t kOracleSoftLimit = 40;

struct OracleResult {
  std::size_t alpha = 0;
  VertexSet witness;
  std::uint64_t nodes_explored = 0;
  bool soft_limit_exceeded = false;  // n > kOracleSoftLimit
};

/// Exact maximum independent set by branch and bound: branch on a
/// maximum-degree vertex (take it and drop its neighbors, or drop it),
/// take degree-0/1 vertices without branching, prune with a greedy clique
/// cover. Deterministic for a given graph.
OracleResult max_independent_set_exact(const Graph& g);

/// Throws InvalidVertex for identifiers outside the graph.
bool is_independent_set(const Graph& g, std::span<const Vertex> s);

}  // namespace indratio
