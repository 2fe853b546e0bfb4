#pragma once

#include <cstddef>
#include <optional>

#include "indratio/constants.hpp"
#include "indratio/graph.hpp"
#include "indratio/structure.hpp"

namespace indratio {

/// Edge-density check for planar graphs of a class:
///   T4:  m <= 15/7 (n - 2)
///   T35: m <= 2 (n - 2)
/// Only asserted for n >= 4. Density failure refutes a planarity promise;
/// density success does not confirm planarity.
struct DensityReport {
  GraphClass graph_class;
  std::size_t n = 0;
  std::size_t m = 0;
  Rational bound;        // coefficient * (n - 2)
  bool asserted = false;  // n >= 4
  bool satisfied = false;  // !asserted || m <= bound
  Rational ratio_bound;  // independence ratio implied at the reference constants
  bool planarity_refuted = false;  // promised planar but the density fails
};

/// Throws PreconditionViolated (message includes the witness) if g is not in `cls`.
DensityReport check_density(const Graph& g, GraphClass cls, bool planar_promise);

/// 15/7 for T4, 2 for T35.
Rational density_coefficient(GraphClass cls);

/// 1 / (1 - a - coefficient * b). Throws InvalidConstants if the denominator is <= 0.
Rational ratio_bound_for(GraphClass cls, const ConstantsPair& c);

}  // namespace indratio
