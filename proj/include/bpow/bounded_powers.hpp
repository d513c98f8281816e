#pragma once

#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "bpow/graph.hpp"

namespace bpow {

using CapVector = std::vector<int>;       // per-vertex caps, entries >= 1
using ExponentVector = std::vector<int>;  // per-vertex nonnegative exponents

/// Minimal generators of (I(G)^delta)_c: equal-degree exponent vectors in
/// lexicographic order.
struct GeneratorSet {
  std::vector<ExponentVector> members;
  int common_degree = 0;
};

inline void check_caps(const Graph& g, const CapVector& c) {
  if ((int)c.size() != g.n()) throw std::invalid_argument("cap vector length mismatch");
  for (int v : c)
    if (v < 1) throw std::invalid_argument("cap entries must be >= 1");
}

inline void check_no_isolated(const Graph& g) {
  if (g.n() == 0 || g.has_isolated_vertex())
    throw std::invalid_argument("graph has an isolated vertex");
}

/// Exponent vector of the product of all edges: c_v = deg_G(v).
inline CapVector edge_product_cap(const Graph& g) {
  check_no_isolated(g);
  CapVector c(g.n());
  for (int v = 0; v < g.n(); ++v) c[v] = g.degree(v);
  return c;
}

namespace detail {

// Exhaustive edge-multiplicity assignment.  Edges are processed in the fixed
// sorted order; once all edges incident to a vertex are used up, its residual
// must be zero.  Memoized on (edge index, residual vector).
class RealizabilitySearch {
 public:
  RealizabilitySearch(const Graph& g) : g_(g), last_edge_(g.n(), -1) {
    for (int i = 0; i < (int)g.edges().size(); ++i) {
      last_edge_[g.edges()[i].first] = i;
      last_edge_[g.edges()[i].second] = i;
    }
  }

  bool realizable(std::vector<int> residual) {
    for (int v = 0; v < g_.n(); ++v)
      if (residual[v] > 0 && last_edge_[v] < 0) return false;
    return search(0, residual);
  }

 private:
  bool search(int idx, std::vector<int>& residual) {
    if (idx == (int)g_.edges().size())
      return std::all_of(residual.begin(), residual.end(), [](int r) { return r == 0; });
    auto key = std::make_pair(idx, residual);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    auto [a, b] = g_.edges()[idx];
    bool ok = false;
    int top = std::min(residual[a], residual[b]);
    for (int x = 0; x <= top && !ok; ++x) {
      residual[a] -= x;
      residual[b] -= x;
      bool dead = (last_edge_[a] == idx && residual[a] != 0) ||
                  (last_edge_[b] == idx && residual[b] != 0);
      if (!dead) ok = search(idx + 1, residual);
      residual[a] += x;
      residual[b] += x;
    }
    memo_[key] = ok;
    return ok;
  }

  const Graph& g_;
  std::vector<int> last_edge_;
  std::map<std::pair<int, std::vector<int>>, bool> memo_;
};

}  // namespace detail

/// True iff `a` is the degree sequence of a multigraph supported on E(G),
/// i.e. nonnegative edge multiplicities x_e with sum_{e at v} x_e = a_v exist.
inline bool realizable_degree_sequence(const Graph& g, const ExponentVector& a) {
  if ((int)a.size() != g.n()) throw std::invalid_argument("exponent vector length mismatch");
  for (int v : a)
    if (v < 0) throw std::invalid_argument("exponents must be nonnegative");
  if (std::accumulate(a.begin(), a.end(), 0) % 2 != 0) return false;
  detail::RealizabilitySearch search(g);
  return search.realizable(a);
}

namespace detail {

// Branch and bound for the capacitated b-matching value: max sum of edge
// multiplicities subject to sum_{e at v} x_e <= c_v.
inline void delta_search(const Graph& g, int idx, std::vector<int>& residual, int current,
                         int* best) {
  int slack = std::accumulate(residual.begin(), residual.end(), 0);
  if (current + slack / 2 <= *best) return;
  if (idx == (int)g.edges().size()) {
    if (current > *best) *best = current;
    return;
  }
  auto [a, b] = g.edges()[idx];
  for (int x = std::min(residual[a], residual[b]); x >= 0; --x) {
    residual[a] -= x;
    residual[b] -= x;
    delta_search(g, idx + 1, residual, current + x, best);
    residual[a] += x;
    residual[b] += x;
  }
}

}  // namespace detail

/// delta_c(I(G)): the largest q with (I(G)^q)_c nonzero.
inline int delta(const Graph& g, const CapVector& c) {
  check_no_isolated(g);
  check_caps(g, c);
  int best = 0;
  std::vector<int> residual = c;
  detail::delta_search(g, 0, residual, 0, &best);
  return best;
}

/// All c-bounded realizable exponent vectors of degree 2*delta(G,c), in
/// lexicographic order.
inline GeneratorSet top_bounded_generators(const Graph& g, const CapVector& c) {
  int d = delta(g, c);
  int target = 2 * d;
  GeneratorSet out;
  out.common_degree = target;
  detail::RealizabilitySearch search(g);
  ExponentVector a(g.n(), 0);
  std::vector<int> tail_cap(g.n() + 1, 0);  // max achievable sum from position i on
  for (int i = g.n() - 1; i >= 0; --i) tail_cap[i] = tail_cap[i + 1] + c[i];
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (remaining > tail_cap[i]) return;
    if (i == g.n()) {
      if (remaining == 0 && search.realizable(a)) out.members.push_back(a);
      return;
    }
    for (int v = 0; v <= std::min(c[i], remaining); ++v) {
      a[i] = v;
      self(self, i + 1, remaining - v);
    }
    a[i] = 0;
  };
  rec(rec, 0, target);
  return out;
}

}  // namespace bpow
