#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "indratio/constants.hpp"
#include "indratio/graph.hpp"

namespace indratio {

/// Reducible configurations, in the priority order they are tried.
///   R1  isolated vertex               R6  degree-2 vertex outside triangles
///   R2  degree-1 vertex               R7  vertex of degree >= 5
///   R3  triangle component            R8  degree-3 vertex with a degree-4 neighbor
///   R4  2-chain component             R9  degree-4 vertex
///   R5  degree-2 vertex in a triangle Base  3-regular component, Brooks coloring
enum class Rule { R1, R2, R3, R4, R5, R6, R7, R8, R9, Base };

std::string to_string(Rule r);
Rule parse_rule(std::string_view name);

/// One deletion G -> G' = G \ X with its accounting.
/// Vertex labels are those of the input graph.
struct ReductionStep {
  Rule rule;
  VertexSet removed;    // X
  VertexSet extension;  // vertices of X added to the independent set
  std::int64_t N = 0;   // |X|
  std::int64_t M = 0;   // |E(G)| - |E(G')|
  std::int64_t Lambda = 0;  // lambda(G') - lambda(G)
  std::int64_t A = 0;   // |extension|

  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

struct Certificate {
  std::vector<ReductionStep> steps;
  VertexSet independent_set;
  Rational guarantee_value;
  ConstantsPair constants;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Extracts an independent set of size at least ceil(n - a n - b m - b lambda)
/// from a graph with no triangle sharing an edge with a 4-cycle.
///
/// Deletions are chosen forward by re-scanning the rules from R1 after every
/// step; extensions are then chosen backward, last step first, so each step
/// extends the set already built on the smaller graph.
///
/// Throws PreconditionViolated (with the witness) if g has a triangle adjacent
/// to a 4-cycle, InvalidConstants for infeasible constants, NotSupported if a
/// merged-case total is negative, and GuaranteeViolation if the final set is
/// short (never expected).
Certificate reduce(const Graph& g, const ConstantsPair& c = reference_constants());

/// Maximum S within x, independent, with no neighbor in chosen_so_far.
/// Exhaustive over subsets of x; ties go to the lexicographically smallest S.
/// Throws InvalidParameter if |x| > 24.
VertexSet extend_local(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> chosen_so_far);

struct VerifyResult {
  bool ok = false;
  std::string diagnostic;  // first failure, empty when ok

  explicit operator bool() const noexcept { return ok; }
};

/// Replays the deletions and re-derives every count; checks independence,
/// that the removed sets partition V(g), the stored guarantee, and the final bound.
VerifyResult verify_certificate(const Graph& g, const Certificate& cert);

/// Summed ledger values of the configurations whose first step can be
/// negative and is paid for by the R3/R4 steps that consume the difficult
/// components it creates.
struct MergedCase {
  std::string_view name;
  Rational total;
};

std::vector<MergedCase> merged_case_totals(const ConstantsPair& c);

}  // namespace indratio
