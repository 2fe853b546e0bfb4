#include "indratio/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "indratio/error.hpp"

namespace indratio {

namespace {

using Word = std::uint64_t;
using Bits = std::vector<Word>;

bool test(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1u; }
void set(Bits& b, std::size_t i) { b[i / 64] |= Word{1} << (i % 64); }
void reset(Bits& b, std::size_t i) { b[i / 64] &= ~(Word{1} << (i % 64)); }

std::size_t count(const Bits& b) {
  std::size_t c = 0;
  for (Word w : b) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t count_and(const Bits& a, const Bits& b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

void subtract(Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] &= ~b[i];
}

template <class F>
void for_each_bit(const Bits& b, F&& f) {
  for (std::size_t i = 0; i < b.size(); ++i)
    for (Word w = b[i]; w; w &= w - 1) f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
}

class Search {
public:
  explicit Search(const Graph& g) : n_(g.vertex_count()), words_((n_ + 63) / 64), nbr_(n_, Bits(words_, 0)) {
    for (auto [u, v] : g.edges()) {
      set(nbr_[static_cast<std::size_t>(u)], static_cast<std::size_t>(v));
      set(nbr_[static_cast<std::size_t>(v)], static_cast<std::size_t>(u));
    }
  }

  OracleResult run() {
    Bits all(words_, 0);
    for (std::size_t v = 0; v < n_; ++v) set(all, v);
    branch(std::move(all));
    OracleResult r;
    r.witness = best_;
    std::sort(r.witness.begin(), r.witness.end());
    r.alpha = r.witness.size();
    r.nodes_explored = nodes_;
    r.soft_limit_exceeded = n_ > kOracleSoftLimit;
    return r;
  }

private:
  void take(Bits& p, std::size_t v) {
    current_.push_back(static_cast<Vertex>(v));
    subtract(p, nbr_[v]);
    reset(p, v);
  }

  std::size_t clique_cover(const Bits& p) const {
    std::vector<Bits> common;
    for_each_bit(p, [&](std::size_t v) {
      for (auto& c : common)
        if (test(c, v)) {
          for (std::size_t i = 0; i < words_; ++i) c[i] &= nbr_[v][i];
          return;
        }
      common.push_back(nbr_[v]);
    });
    return common.size();
  }

  void branch(Bits p) {
    ++nodes_;
    const std::size_t depth = current_.size();
    for (bool changed = true; changed;) {
      changed = false;
      for_each_bit(p, [&](std::size_t v) {
        if (!changed && test(p, v) && count_and(p, nbr_[v]) <= 1) {
          take(p, v);
          changed = true;
        }
      });
    }

    const std::size_t free = count(p);
    if (free == 0) {
      if (current_.size() > best_.size()) best_ = current_;
    } else if (current_.size() + free > best_.size() && current_.size() + clique_cover(p) > best_.size()) {
      std::size_t pick = 0;
      std::size_t pick_degree = 0;
      bool first = true;
      for_each_bit(p, [&](std::size_t v) {
        const std::size_t d = count_and(p, nbr_[v]);
        if (first || d > pick_degree) {
          pick = v;
          pick_degree = d;
          first = false;
        }
      });
      Bits with = p;
      take(with, pick);
      branch(std::move(with));
      current_.pop_back();
      reset(p, pick);
      branch(std::move(p));
    }
    current_.resize(depth);
  }

  std::size_t n_;
  std::size_t words_;
  std::vector<Bits> nbr_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

OracleResult max_independent_set_exact(const Graph& g) { return Search(g).run(); }

bool is_independent_set(const Graph& g, std::span<const Vertex> s) {
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : s) {
    if (!g.contains(v)) throw InvalidVertex("vertex " + std::to_string(v) + " is not in the graph");
    in[static_cast<std::size_t>(v)] = 1;
  }
  for (Vertex v : s)
    for (Vertex w : g.neighbors(v))
      if (in[static_cast<std::size_t>(w)]) return false;
  return true;
}

}  // namespace indratio
