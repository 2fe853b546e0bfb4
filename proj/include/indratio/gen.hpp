#pragma once

#include <cstddef>
#include <cstdint>

#include "indratio/graph.hpp"
#include "indratio/structure.hpp"

namespace indratio {

/// 16-vertex, 26-edge planar graph without 4-cycles and with independence
/// number 5. Labels: 0=v 1=t 2=b 3=r 4=t1 5=t2 6=u1 7=u2 8=v1 9=v2 10=v3
/// 11=v4 12=b1 13=b2 14=u3 15=u4.
Graph figure1_graph();

/// Cycle C_k times path P_m: vertex (i, j) -> j*k + i. k >= 3, m >= 2,
/// otherwise InvalidParameter.
Graph cylinder_grid(std::size_t k, std::size_t m);

/// G(n, p) sample (seeded mt19937_64) repaired into `cls`: while a forbidden
/// witness exists, delete the lexicographically smallest edge of the witness
/// cycle that is not a triangle edge, or the smallest triangle edge if there
/// is none. Throws InvalidParameter unless n >= 1 and 0 <= p <= 1.
Graph random_valid_graph(std::size_t n, double p, GraphClass cls, std::uint64_t seed);

}  // namespace indratio
