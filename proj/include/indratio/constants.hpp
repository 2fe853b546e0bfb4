#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "indratio/rational.hpp"

namespace indratio {

/// p*a + q*b >= r, numbered 1..9 in the order the reductions need them.
struct LinearConstraint {
  int index;
  Rational p;
  Rational q;
  Rational r;
  std::string_view reduction;  // which configuration the inequality pays for
};

using ConstraintSystem = std::array<LinearConstraint, 9>;

/// The nine inequalities the reduction argument requires of (a, b).
const ConstraintSystem& reduction_constraints();

struct ConstantsPair {
  Rational a;
  Rational b;

  friend bool operator==(const ConstantsPair&, const ConstantsPair&) = default;
};

/// a = 19/34, b = 3/34.
ConstantsPair reference_constants();

struct ConstantsCheck {
  bool feasible = false;
  std::vector<int> tight;       // constraint indices with exact equality
  std::vector<int> violated;
  std::vector<Rational> slack;  // p*a + q*b - r, per constraint in order
};

/// Exact evaluation of every constraint. Throws InvalidConstants unless a, b > 0.
ConstantsCheck check_constants(const ConstantsPair& c);

/// n - (a*n + b*m + b*lambda).
Rational guarantee(std::size_t n, std::size_t m, std::size_t lambda, const ConstantsPair& c);

/// Net accounting of one reduction: A + (a - 1)N + bM - b*Lambda.
/// Nonnegative sums over a run certify the guarantee.
Rational ledger_value(long long extension, long long removed, long long edges_lost, long long lambda_change,
                      const ConstantsPair& c);

struct LpVertex {
  ConstantsPair point;
  Rational objective;
};

struct DensityOptimum {
  ConstantsPair constants;               // reported optimum, strictly positive
  Rational objective;                    // 1 - a - density*b at `constants`
  std::vector<LpVertex> optimal_vertices;  // every vertex attaining the LP maximum
  bool boundary_optimum = false;         // the maximum is only attained with a = 0 or b = 0
};

/// Maximizes 1 - a - density*b over the nine constraints with a, b > 0 by
/// enumerating the vertices of the feasible polygon.
/// Throws InvalidParameter for negative density, Infeasible if no vertex exists.
DensityOptimum optimize_for_density(const Rational& density);

}  // namespace indratio
