#pragma once

#include <span>
#include <vector>

#include "indratio/graph.hpp"

namespace indratio {

/// color[v] in {0, 1, 2}.
using Coloring = std::vector<int>;

/// Proper 3-coloring of a connected 3-regular graph other than K4.
///
/// Blocks are handled through a cut vertex when one exists; otherwise a
/// vertex v with nonadjacent neighbors x, y such that G - {x, y} stays
/// connected is found, x and y share a color, and the rest is colored
/// greedily in an order that ends at v.
/// Throws PreconditionViolated if g is not connected, not 3-regular, or is K4.
Coloring brooks_three_coloring(const Graph& g);

bool is_proper_coloring(const Graph& g, std::span<const int> color);

}  // namespace indratio
