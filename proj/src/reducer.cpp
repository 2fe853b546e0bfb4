#include "indratio/reducer.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "indratio/brooks.hpp"
#include "indratio/error.hpp"
#include "indratio/structure.hpp"

namespace indratio {

namespace {

constexpr std::array<std::string_view, 10> kRuleNames{"R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8", "R9", "BASE"};
constexpr std::size_t kMaxLocal = 24;

struct Selection {
  Rule rule;
  VertexSet x;          // current labels
  VertexSet extension;  // Base only: the chosen color class, current labels
};

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  VertexSet x{v};
  x.insert(x.end(), g.neighbors(v).begin(), g.neighbors(v).end());
  return normalized(std::move(x));
}

std::optional<Selection> select_r5(const Graph& g) {
  std::vector<VertexSet> triangles;
  for (std::size_t vi = 0; vi < g.vertex_count(); ++vi) {
    const auto v = static_cast<Vertex>(vi);
    if (g.degree(v) != 2) continue;
    auto nv = g.neighbors(v);
    if (g.adjacent(nv[0], nv[1])) triangles.push_back(normalized({v, nv[0], nv[1]}));
  }
  if (triangles.empty()) return std::nullopt;
  std::sort(triangles.begin(), triangles.end());
  const VertexSet* best = nullptr;
  std::size_t best_phi = 0;
  for (const auto& t : triangles) {
    const std::size_t p = phi(g, t);
    if (!best || p < best_phi) {
      best = &t;
      best_phi = p;
    }
  }
  return Selection{Rule::R5, *best, {}};
}

Selection select_base(const Graph& g) {
  const auto comp = connected_components(g).front();
  auto sub = induced_subgraph(g, comp);
  const Coloring color = brooks_three_coloring(sub.graph);
  std::array<VertexSet, 3> classes;
  for (std::size_t i = 0; i < color.size(); ++i)
    classes[static_cast<std::size_t>(color[i])].push_back(sub.to_parent[i]);
  auto largest = std::max_element(classes.begin(), classes.end(),
                                  [](const VertexSet& p, const VertexSet& q) { return p.size() < q.size(); });
  return Selection{Rule::Base, comp, *largest};
}

// Highest-priority reducible configuration of a nonempty graph.
Selection select(const Graph& g) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) == 0) return {Rule::R1, {v}, {}};
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) == 1) return {Rule::R2, normalized({v, g.neighbors(v)[0]}), {}};

  const auto difficult = difficult_components(g);
  if (!difficult.triangle_components.empty()) return {Rule::R3, difficult.triangle_components.front(), {}};
  if (!difficult.two_chain_components.empty()) return {Rule::R4, difficult.two_chain_components.front(), {}};

  if (auto r5 = select_r5(g)) return *r5;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) == 2) return {Rule::R6, closed_neighborhood(g, v), {}};
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) >= 5) return {Rule::R7, {v}, {}};
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != 3) continue;
    auto nv = g.neighbors(v);
    if (std::any_of(nv.begin(), nv.end(), [&](Vertex w) { return g.degree(w) == 4; }))
      return {Rule::R8, closed_neighborhood(g, v), {}};
  }
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) == 4) return {Rule::R9, closed_neighborhood(g, v), {}};
  return select_base(g);
}

VertexSet extend_with_mask(const Graph& g, std::span<const Vertex> x, const std::vector<char>& chosen) {
  const std::size_t k = x.size();
  if (k > kMaxLocal) throw InvalidParameter("local extension limited to " + std::to_string(kMaxLocal) + " vertices");
  std::vector<std::uint32_t> inner(k, 0);
  std::uint32_t allowed = 0;
  for (std::size_t i = 0; i < k; ++i) {
    auto nx = g.neighbors(x[i]);
    if (std::none_of(nx.begin(), nx.end(), [&](Vertex w) { return chosen[static_cast<std::size_t>(w)] != 0; }))
      allowed |= 1u << i;
    for (std::size_t j = 0; j < k; ++j)
      if (j != i && g.adjacent(x[i], x[j])) inner[i] |= 1u << j;
  }

  auto as_set = [&](std::uint32_t mask) {
    VertexSet s;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1u) s.push_back(x[i]);
    return s;
  };
  std::uint32_t best = 0;
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    if ((mask & ~allowed) != 0) continue;
    bool independent = true;
    for (std::size_t i = 0; i < k && independent; ++i)
      if ((mask >> i & 1u) && (inner[i] & mask)) independent = false;
    if (!independent) continue;
    const int pc = std::popcount(mask);
    const int pb = std::popcount(best);
    if (pc > pb || (pc == pb && as_set(mask) < as_set(best))) best = mask;
  }
  return as_set(best);
}

std::vector<char> mask_of(std::size_t n, std::span<const Vertex> vs) {
  std::vector<char> m(n, 0);
  for (Vertex v : vs) m[static_cast<std::size_t>(v)] = 1;
  return m;
}

bool independent_in(const Graph& g, std::span<const Vertex> s) {
  auto in = mask_of(g.vertex_count(), s);
  for (auto [u, v] : g.edges())
    if (in[static_cast<std::size_t>(u)] && in[static_cast<std::size_t>(v)]) return false;
  return true;
}

}  // namespace

std::string to_string(Rule r) { return std::string(kRuleNames[static_cast<std::size_t>(r)]); }

Rule parse_rule(std::string_view name) {
  for (std::size_t i = 0; i < kRuleNames.size(); ++i)
    if (kRuleNames[i] == name) return static_cast<Rule>(i);
  throw ParseError("unknown rule '" + std::string(name) + "'", 0);
}

std::vector<MergedCase> merged_case_totals(const ConstantsPair& c) {
  const Rational r3 = ledger_value(1, 3, 3, -1, c);
  const Rational r4 = ledger_value(2, 6, 7, -1, c);
  const Rational r5_phi1 = ledger_value(1, 3, 4, 1, c);
  const Rational r8_m10 = ledger_value(1, 4, 10, 2, c);
  const Rational r8_m9 = ledger_value(1, 4, 9, 1, c);
  return {
      {"R5(Phi=1) + R4", r5_phi1 + r4},
      {"R8(M=10,Lambda=2) + R3 + R3", r8_m10 + r3 + r3},
      {"R8(M=10,Lambda=2) + R3 + R4", r8_m10 + r3 + r4},
      {"R8(M=9,Lambda=1) + R4", r8_m9 + r4},
  };
}

VertexSet extend_local(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> chosen_so_far) {
  for (Vertex v : x)
    if (!g.contains(v)) throw InvalidVertex("vertex " + std::to_string(v) + " is not in the graph");
  for (Vertex v : chosen_so_far)
    if (!g.contains(v)) throw InvalidVertex("vertex " + std::to_string(v) + " is not in the graph");
  const VertexSet xs = normalized({x.begin(), x.end()});
  const auto chosen = mask_of(g.vertex_count(), chosen_so_far);
  for (Vertex v : xs)
    if (chosen[static_cast<std::size_t>(v)]) throw PreconditionViolated("x and chosen_so_far overlap");
  return extend_with_mask(g, xs, chosen);
}

Certificate reduce(const Graph& g, const ConstantsPair& c) {
  const auto check = check_constants(c);
  if (!check.feasible) throw InvalidConstants("constants a=" + to_string(c.a) + " b=" + to_string(c.b) +
                                              " violate the reduction inequalities");
  for (const auto& mc : merged_case_totals(c))
    if (mc.total < 0)
      throw NotSupported("merged configuration " + std::string(mc.name) + " has negative total " +
                         to_string(mc.total));
  if (auto w = find_forbidden(g, GraphClass::T4))
    throw PreconditionViolated("graph has a triangle adjacent to a 4-cycle\n" + format_witness(*w));

  Certificate cert;
  cert.constants = c;
  cert.guarantee_value = guarantee(g.vertex_count(), g.edge_count(), difficult_components(g).lambda, c);

  // forward: deletions
  std::vector<VertexSet> base_extensions;
  Graph cur = g;
  std::vector<Vertex> original(g.vertex_count());
  std::iota(original.begin(), original.end(), 0);
  auto lambda_cur = static_cast<std::int64_t>(difficult_components(cur).lambda);
  while (cur.vertex_count() > 0) {
    Selection sel = select(cur);
    auto next = remove_vertices(cur, sel.x);
    const auto lambda_next = static_cast<std::int64_t>(difficult_components(next.graph).lambda);

    ReductionStep step;
    step.rule = sel.rule;
    for (Vertex v : sel.x) step.removed.push_back(original[static_cast<std::size_t>(v)]);
    step.removed = normalized(std::move(step.removed));
    step.N = static_cast<std::int64_t>(sel.x.size());
    step.M = static_cast<std::int64_t>(cur.edge_count() - next.graph.edge_count());
    step.Lambda = lambda_next - lambda_cur;
    cert.steps.push_back(std::move(step));

    VertexSet base;
    for (Vertex v : sel.extension) base.push_back(original[static_cast<std::size_t>(v)]);
    base_extensions.push_back(normalized(std::move(base)));

    std::vector<Vertex> remapped(next.to_parent.size());
    for (std::size_t i = 0; i < remapped.size(); ++i)
      remapped[i] = original[static_cast<std::size_t>(next.to_parent[i])];
    original = std::move(remapped);
    cur = std::move(next.graph);
    lambda_cur = lambda_next;
  }

  // backward: each step extends the set built on the graph that remained after it
  std::vector<char> chosen(g.vertex_count(), 0);
  for (std::size_t i = cert.steps.size(); i-- > 0;) {
    auto& step = cert.steps[i];
    step.extension = step.rule == Rule::Base ? base_extensions[i] : extend_with_mask(g, step.removed, chosen);
    step.A = static_cast<std::int64_t>(step.extension.size());
    for (Vertex v : step.extension) chosen[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t v = 0; v < chosen.size(); ++v)
    if (chosen[v]) cert.independent_set.push_back(static_cast<Vertex>(v));

  if (!independent_in(g, cert.independent_set)) throw std::logic_error("reduce produced a dependent set");
  if (Integer(cert.independent_set.size()) < ceil(cert.guarantee_value))
    throw GuaranteeViolation("extracted " + std::to_string(cert.independent_set.size()) +
                             " vertices, guarantee is " + to_string(cert.guarantee_value));
  return cert;
}

VerifyResult verify_certificate(const Graph& g, const Certificate& cert) {
  auto fail = [](std::string why) { return VerifyResult{false, std::move(why)}; };
  const auto& c = cert.constants;
  if (c.a <= 0 || c.b <= 0) return fail("constants must be positive");

  const std::size_t n = g.vertex_count();
  std::vector<char> removed_already(n, 0);
  VertexSet union_of_extensions;
  Graph cur = g;
  std::vector<Vertex> current_label(n);
  std::iota(current_label.begin(), current_label.end(), 0);
  auto lambda_cur = static_cast<std::int64_t>(difficult_components(cur).lambda);
  const auto lambda_input = lambda_cur;

  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const auto& s = cert.steps[i];
    const std::string at = "step " + std::to_string(i + 1) + " (" + to_string(s.rule) + "): ";
    if (s.removed.empty()) return fail(at + "removed set is empty");
    if (normalized(s.removed) != s.removed) return fail(at + "removed set is not sorted and duplicate-free");
    for (Vertex v : s.removed) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) return fail(at + "vertex " + std::to_string(v) + " out of range");
      if (removed_already[static_cast<std::size_t>(v)])
        return fail(at + "vertex " + std::to_string(v) + " was removed by an earlier step");
    }
    if (normalized(s.extension) != s.extension) return fail(at + "extension is not sorted and duplicate-free");
    if (!std::includes(s.removed.begin(), s.removed.end(), s.extension.begin(), s.extension.end()))
      return fail(at + "extension is not contained in the removed set");
    if (s.N != static_cast<std::int64_t>(s.removed.size()))
      return fail(at + "N = " + std::to_string(s.N) + " but " + std::to_string(s.removed.size()) + " vertices removed");
    if (s.A != static_cast<std::int64_t>(s.extension.size()))
      return fail(at + "A = " + std::to_string(s.A) + " but extension has " + std::to_string(s.extension.size()));

    VertexSet x;
    for (Vertex v : s.removed) {
      removed_already[static_cast<std::size_t>(v)] = 1;
      x.push_back(current_label[static_cast<std::size_t>(v)]);
    }
    auto next = remove_vertices(cur, x);
    const auto m_lost = static_cast<std::int64_t>(cur.edge_count() - next.graph.edge_count());
    const auto lambda_next = static_cast<std::int64_t>(difficult_components(next.graph).lambda);
    if (s.M != m_lost) return fail(at + "M = " + std::to_string(s.M) + " but replay loses " + std::to_string(m_lost));
    if (s.Lambda != lambda_next - lambda_cur)
      return fail(at + "Lambda = " + std::to_string(s.Lambda) + " but replay gives " +
                  std::to_string(lambda_next - lambda_cur));

    std::vector<Vertex> relabeled(n, -1);
    for (std::size_t v = 0; v < n; ++v) {
      Vertex old = current_label[v];
      if (old >= 0) relabeled[v] = next.from_parent[static_cast<std::size_t>(old)];
    }
    current_label = std::move(relabeled);
    cur = std::move(next.graph);
    lambda_cur = lambda_next;
    union_of_extensions.insert(union_of_extensions.end(), s.extension.begin(), s.extension.end());
  }
  if (cur.vertex_count() != 0)
    return fail("removed sets do not cover the graph: " + std::to_string(cur.vertex_count()) + " vertices remain");

  union_of_extensions = normalized(std::move(union_of_extensions));
  if (union_of_extensions != cert.independent_set)
    return fail("independent set differs from the union of the step extensions");
  for (auto [u, v] : g.edges())
    if (std::binary_search(cert.independent_set.begin(), cert.independent_set.end(), u) &&
        std::binary_search(cert.independent_set.begin(), cert.independent_set.end(), v))
      return fail("independent set contains the edge (" + std::to_string(u) + "," + std::to_string(v) + ")");

  const Rational expected = guarantee(n, g.edge_count(), static_cast<std::size_t>(lambda_input), c);
  if (cert.guarantee_value != expected)
    return fail("stored guarantee " + to_string(cert.guarantee_value) + " differs from recomputed " +
                to_string(expected));
  if (Integer(cert.independent_set.size()) < ceil(expected))
    return fail("independent set has " + std::to_string(cert.independent_set.size()) + " vertices, guarantee needs " +
                ceil(expected).str());
  return {true, {}};
}

}  // namespace indratio
