#include "indratio/constants.hpp"

#include <algorithm>
#include <charconv>
#include <optional>

#include "indratio/error.hpp"

namespace indratio {

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view part, std::size_t offset) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i == part.size()) throw ParseError("expected an integer in '" + std::string(text) + "'", offset);
    for (std::size_t k = i; k < part.size(); ++k)
      if (part[k] < '0' || part[k] > '9')
        throw ParseError("unexpected character in rational '" + std::string(text) + "'", offset + k);
    Integer value(std::string(part.substr(i)));
    return part[0] == '-' ? Integer(-value) : value;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, 0));
  Integer num = parse_int(text.substr(0, slash), 0);
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw ParseError("denominator must be an unsigned integer", slash + 1);
  Integer den = parse_int(den_text, slash + 1);
  if (den == 0) throw ParseError("zero denominator", slash + 1);
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  const Integer& den = boost::multiprecision::denominator(r);
  if (den == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + den.str();
}

Integer floor(const Rational& r) {
  const Integer& num = boost::multiprecision::numerator(r);
  const Integer& den = boost::multiprecision::denominator(r);
  Integer q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

Integer ceil(const Rational& r) { return -floor(Rational(-r)); }

const ConstraintSystem& reduction_constraints() {
  static const ConstraintSystem system{{
      {1, 2, 1, 1, "degree-1 vertex"},
      {2, 3, 4, 2, "difficult component / degree-2 vertex"},
      {3, 9, 11, 6, "degree-2 triangle vertex leaving a 2-chain"},
      {4, 1, 5, 1, "vertex of degree at least 5"},
      {5, 4, 9, 3, "degree-3 vertex with a degree-4 neighbor"},
      {6, 10, 16, 7, "degree-3 vertex with a degree-4 neighbor, two difficult components"},
      {7, 13, 20, 8, "degree-3 vertex with a degree-4 neighbor, triangle and 2-chain"},
      {8, 5, 14, 4, "degree-4 vertex with degree-4 neighbors"},
      {9, 1, Rational(3, 2), Rational(2, 3), "3-regular remainder"},
  }};
  return system;
}

ConstantsPair reference_constants() { return {Rational(19, 34), Rational(3, 34)}; }

ConstantsCheck check_constants(const ConstantsPair& c) {
  if (c.a <= 0 || c.b <= 0) throw InvalidConstants("constants must be positive, got a=" + to_string(c.a) +
                                                   " b=" + to_string(c.b));
  ConstantsCheck out;
  for (const auto& k : reduction_constraints()) {
    Rational s = k.p * c.a + k.q * c.b - k.r;
    if (s == 0) out.tight.push_back(k.index);
    if (s < 0) out.violated.push_back(k.index);
    out.slack.push_back(std::move(s));
  }
  out.feasible = out.violated.empty();
  return out;
}

Rational guarantee(std::size_t n, std::size_t m, std::size_t lambda, const ConstantsPair& c) {
  const Rational nn(n);
  return nn - (c.a * nn + c.b * Rational(m) + c.b * Rational(lambda));
}

Rational ledger_value(long long extension, long long removed, long long edges_lost, long long lambda_change,
                      const ConstantsPair& c) {
  return Rational(extension) + (c.a - 1) * Rational(removed) + c.b * Rational(edges_lost) -
         c.b * Rational(lambda_change);
}

namespace {

// Boundary lines of the feasible region: the nine constraints plus a = 0 and b = 0.
struct Line {
  Rational p, q, r;
};

std::optional<ConstantsPair> intersect(const Line& x, const Line& y) {
  Rational det = x.p * y.q - x.q * y.p;
  if (det == 0) return std::nullopt;
  return ConstantsPair{(x.r * y.q - x.q * y.r) / det, (x.p * y.r - x.r * y.p) / det};
}

bool in_region(const ConstantsPair& pt) {
  if (pt.a < 0 || pt.b < 0) return false;
  return std::all_of(reduction_constraints().begin(), reduction_constraints().end(),
                     [&](const LinearConstraint& k) { return k.p * pt.a + k.q * pt.b >= k.r; });
}

}  // namespace

DensityOptimum optimize_for_density(const Rational& density) {
  if (density < 0) throw InvalidParameter("density must be nonnegative, got " + to_string(density));

  std::vector<Line> lines;
  for (const auto& k : reduction_constraints()) lines.push_back({k.p, k.q, k.r});
  lines.push_back({1, 0, 0});
  lines.push_back({0, 1, 0});

  std::vector<ConstantsPair> vertices;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (auto pt = intersect(lines[i], lines[j]); pt && in_region(*pt) &&
                                                 std::find(vertices.begin(), vertices.end(), *pt) == vertices.end())
        vertices.push_back(*pt);
  if (vertices.empty()) throw Infeasible("the constraint system has no feasible vertex");

  auto objective = [&](const ConstantsPair& pt) -> Rational { return 1 - pt.a - density * pt.b; };
  std::sort(vertices.begin(), vertices.end(), [](const ConstantsPair& x, const ConstantsPair& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  });

  Rational best = objective(vertices.front());
  for (const auto& v : vertices) best = std::max(best, objective(v));

  DensityOptimum out;
  for (const auto& v : vertices)
    if (objective(v) == best) out.optimal_vertices.push_back({v, best});

  auto positive = [](const ConstantsPair& v) { return v.a > 0 && v.b > 0; };
  std::optional<LpVertex> chosen;
  for (const auto& v : out.optimal_vertices)
    if (positive(v.point)) {
      chosen = v;
      break;
    }
  if (!chosen) {
    out.boundary_optimum = true;
    for (const auto& v : vertices)
      if (positive(v) && (!chosen || objective(v) > chosen->objective)) chosen = LpVertex{v, objective(v)};
    if (!chosen) throw Infeasible("no feasible vertex with a, b > 0");
  }
  out.constants = chosen->point;
  out.objective = chosen->objective;
  return out;
}

}  // namespace indratio
