#include "indratio/bounds.hpp"

#include "indratio/error.hpp"

namespace indratio {

Rational density_coefficient(GraphClass cls) { return cls == GraphClass::T4 ? Rational(15, 7) : Rational(2); }

Rational ratio_bound_for(GraphClass cls, const ConstantsPair& c) {
  const Rational denom = 1 - c.a - density_coefficient(cls) * c.b;
  if (denom <= 0)
    throw InvalidConstants("1 - a - " + to_string(density_coefficient(cls)) + " b = " + to_string(denom) +
                           " is not positive");
  return 1 / denom;
}

DensityReport check_density(const Graph& g, GraphClass cls, bool planar_promise) {
  if (auto w = find_forbidden(g, cls))
    throw PreconditionViolated("graph is not in class " + to_string(cls) + "\n" + format_witness(*w));
  DensityReport r;
  r.graph_class = cls;
  r.n = g.vertex_count();
  r.m = g.edge_count();
  r.bound = density_coefficient(cls) * (Rational(r.n) - 2);
  r.asserted = r.n >= 4;
  r.satisfied = !r.asserted || Rational(r.m) <= r.bound;
  r.ratio_bound = ratio_bound_for(cls, reference_constants());
  r.planarity_refuted = planar_promise && !r.satisfied;
  return r;
}

}  // namespace indratio
