#pragma once

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bpow/bounded_powers.hpp"
#include "bpow/graph.hpp"
#include "bpow/toric_oracle.hpp"

namespace bpow {

/// Algebra of Veronese type A(d; a): all monomials of degree d with exponents
/// capped by a.
struct VeroneseSpec {
  int d = 0;
  std::vector<int> caps;
};

inline GeneratorSet veronese_generators(const VeroneseSpec& spec) {
  if (spec.d < 1) throw std::invalid_argument("Veronese degree must be >= 1");
  long long total = 0;
  for (int a : spec.caps) {
    if (a < 1) throw std::invalid_argument("Veronese caps must be >= 1");
    total += a;
  }
  if (total < spec.d) throw std::invalid_argument("Veronese degree exceeds cap sum");
  GeneratorSet out;
  out.common_degree = spec.d;
  const int n = (int)spec.caps.size();
  ExponentVector q(n, 0);
  auto rec = [&](auto&& self, int i, int remaining, long long tail) -> void {
    if (remaining > tail) return;
    if (i == n) {
      if (remaining == 0) out.members.push_back(q);
      return;
    }
    long long next_tail = tail - spec.caps[i];
    for (int v = 0; v <= std::min(spec.caps[i], remaining); ++v) {
      q[i] = v;
      self(self, i + 1, remaining - v, next_tail);
    }
    q[i] = 0;
  };
  long long tail = total;
  rec(rec, 0, spec.d, tail);
  return out;
}

/// Output of the complete-graph classification: always a polynomial ring, of
/// dimension either 1 or n.
struct CompleteGraphClassification {
  bool dim_one = false;
  GeneratorSet generators;
};

inline CompleteGraphClassification classify_complete_graph(int n, const CapVector& c) {
  if (n < 2) throw std::invalid_argument("complete graph classification needs n >= 2");
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.push_back({a, b});
  Graph kn = Graph::from_edges(n, edges);
  check_caps(kn, c);
  int d = delta(kn, c);
  long long sum = std::accumulate(c.begin(), c.end(), 0LL);
  CompleteGraphClassification out;
  out.generators.common_degree = 2 * d;
  if (2 * d == sum) {
    out.generators.members.push_back(c);
  } else if (2 * d == sum - 1) {
    for (int i = 0; i < n; ++i) {
      ExponentVector a = c;
      --a[i];
      if (realizable_degree_sequence(kn, a)) out.generators.members.push_back(a);
    }
  } else {
    // All edges of a top generator are incident to the vertex of largest cap.
    int k = (int)(std::max_element(c.begin(), c.end()) - c.begin());
    ExponentVector a = c;
    a[k] = d;
    out.generators.members.push_back(a);
  }
  std::sort(out.generators.members.begin(), out.generators.members.end());
  out.dim_one = out.generators.members.size() == 1;
  return out;
}

/// Segre product of polynomial rings of the given dimensions is Gorenstein
/// iff every dimension lies in {1, a} for a single a > 0.
inline bool segre_gorenstein(const std::vector<int>& dims) {
  if (dims.empty()) throw std::invalid_argument("empty dimension list");
  int a = 0;
  for (int d : dims) {
    if (d <= 1) continue;
    if (a == 0) a = d;
    if (d != a) return false;
  }
  return true;
}

/// True iff B(c,G) is Gorenstein for every cap vector: there is t >= 3 such
/// that each connected component is K_2 or K_t.
inline bool gorenstein_universal(const Graph& g) {
  check_no_isolated(g);
  int t = 0;
  for (const auto& [comp, map] : connected_components(g)) {
    if (!is_complete(comp)) return false;
    if (comp.n() == 2) continue;
    if (t == 0) t = comp.n();
    if (comp.n() != t) return false;
  }
  return true;
}

/// The cap construction of the non-Gorenstein witness for graphs with a
/// non-complete component: non-adjacent pair with a common neighbor, sets
/// A and B, caps 2a_i+2 / 2b_i / f_i, and the predicted Veronese type
/// A(2*sum a_i; (2a_i+2)).
struct NocompWitness {
  std::pair<int, int> pair;
  std::vector<int> A, B;         // sorted vertex lists
  CapVector cap;
  ExponentVector fixed_part;     // exponents of w' (zero on A)
  VeroneseSpec predicted;
};

inline NocompWitness nocomp_witness(const Graph& g) {
  int best_x = -1, best_y = -1, best_size = g.n() + 1;
  for (int x = 0; x < g.n(); ++x)
    for (int y = x + 1; y < g.n(); ++y) {
      if (g.has_edge(x, y) || (g.adj(x) & g.adj(y)) == 0) continue;
      int size = std::popcount(g.adj(x) | g.adj(y));
      if (size < best_size) {
        best_size = size;
        best_x = x;
        best_y = y;
      }
    }
  if (best_x < 0)
    throw std::invalid_argument("every connected component is complete");
  std::uint32_t bmask = g.adj(best_x) | g.adj(best_y);
  std::uint32_t amask = 0;
  for (int v = 0; v < g.n(); ++v)
    if (!((bmask >> v) & 1u) && (g.adj(v) & ~bmask) == 0) amask |= 1u << v;
  NocompWitness w;
  w.pair = {best_x, best_y};
  w.cap.assign(g.n(), 0);
  w.fixed_part.assign(g.n(), 0);
  long long asum = 0;
  for (int v = 0; v < g.n(); ++v) {
    if ((amask >> v) & 1u) {
      w.A.push_back(v);
      int a = g.degree(v);
      asum += a;
      w.cap[v] = 2 * a + 2;
      w.predicted.caps.push_back(2 * a + 2);
    } else if ((bmask >> v) & 1u) {
      w.B.push_back(v);
      int b = std::popcount(g.adj(v) & amask);
      w.cap[v] = 2 * b;
      w.fixed_part[v] = 2 * b;
    } else {
      int f = std::popcount(g.adj(v) & ~amask & ~bmask);
      w.cap[v] = f;
      w.fixed_part[v] = f;
    }
  }
  w.predicted.d = (int)(2 * asum);
  return w;
}

enum class MultipartiteCase { alpha, beta_i, beta_ii };

/// Result of the complete-multipartite-minus-matching classification.  When a
/// VeroneseSpec is produced, `embedding` lists the original vertices carrying
/// the spec's coordinates and `fixed` the exponents common to all generators.
struct MultipartiteClassification {
  MultipartiteCase kind = MultipartiteCase::beta_i;
  std::optional<Edge> witness_edge;      // case alpha
  std::optional<int> part_index;         // case beta(ii), 0-based
  std::optional<VeroneseSpec> spec;
  std::vector<long long> ell;            // per-part cap sums
  std::vector<long long> dvec;           // d_k = min(c_k, sum of neighbor caps)
  std::vector<int> embedding;
  ExponentVector fixed;
};

inline MultipartiteClassification classify_multipartite_minus_matching(
    const Graph& g, const MultipartiteSpec& spec, const CapVector& c) {
  check_no_isolated(g);
  check_caps(g, c);
  if (reconstruct_multipartite(g.n(), spec).edges() != g.edges())
    throw std::invalid_argument("spec does not reconstruct the graph");
  const int n = g.n();
  MultipartiteClassification out;
  out.ell.resize(spec.parts.size(), 0);
  for (int i = 0; i < (int)spec.parts.size(); ++i)
    for (int v : spec.parts[i]) out.ell[i] += c[v];
  long long total = std::accumulate(c.begin(), c.end(), 0LL);
  for (int v = 0; v < n; ++v) {
    long long nbr = 0;
    for (std::uint32_t m = g.adj(v); m; m &= m - 1) nbr += c[std::countr_zero(m)];
    out.dvec.push_back(std::min<long long>(c[v], nbr));
  }
  auto exclusive_sum = [&](int k, int kp) {
    long long s = 0;
    for (std::uint32_t m = g.adj(k) & ~g.adj(kp); m; m &= m - 1) {
      int t = std::countr_zero(m);
      if (t != kp) s += c[t];
    }
    return s;
  };
  for (const auto& [k, kp] : spec.removed) {
    long long s1 = exclusive_sum(k, kp), s2 = exclusive_sum(kp, k);
    if (c[k] > s1 && c[kp] > s2 && c[k] + c[kp] >= total - c[k] - c[kp] + 2) {
      long long d = total - c[k] - c[kp] - s1 - s2;
      out.kind = MultipartiteCase::alpha;
      out.witness_edge = Edge{k, kp};
      out.spec = VeroneseSpec{(int)d, {(int)std::min<long long>(c[k] - s1, d),
                                       (int)std::min<long long>(c[kp] - s2, d)}};
      out.embedding = {k, kp};
      out.fixed.assign(n, 0);
      for (int t = 0; t < n; ++t)
        if (t != k && t != kp) out.fixed[t] = c[t];
      out.fixed[k] = (int)s1;
      out.fixed[kp] = (int)s2;
      return out;
    }
  }
  int big = -1;
  for (int i = 0; i < (int)spec.parts.size(); ++i)
    if (out.ell[i] - 2 >= total - out.ell[i]) {
      if (big >= 0) throw std::runtime_error("beta(ii) part index is not unique");
      big = i;
    }
  if (big < 0) {
    out.kind = MultipartiteCase::beta_i;
    return out;
  }
  out.kind = MultipartiteCase::beta_ii;
  out.part_index = big;
  long long d = total - out.ell[big];
  VeroneseSpec vs;
  vs.d = (int)d;
  for (int v : spec.parts[big]) {
    vs.caps.push_back((int)out.dvec[v]);
    out.embedding.push_back(v);
  }
  out.spec = std::move(vs);
  out.fixed.assign(n, 0);
  for (int v = 0; v < n; ++v) out.fixed[v] = c[v];
  for (int v : spec.parts[big]) out.fixed[v] = 0;
  return out;
}

enum class TreeCase { match_big, i, ii, iii, iv, v, vi, vii, viii };

inline const char* tree_case_name(TreeCase c) {
  switch (c) {
    case TreeCase::match_big: return "match_big";
    case TreeCase::i: return "i";
    case TreeCase::ii: return "ii";
    case TreeCase::iii: return "iii";
    case TreeCase::iv: return "iv";
    case TreeCase::v: return "v";
    case TreeCase::vi: return "vi";
    case TreeCase::vii: return "vii";
    default: return "viii";
  }
}

struct TreeClassification {
  TreeCase kind = TreeCase::viii;
  bool gorenstein = false;
  std::vector<int> witness;  // case-dependent vertex list
};

namespace detail {

inline std::vector<int> leaf_neighbors(const Graph& t, int v) {
  std::vector<int> out;
  for (std::uint32_t m = t.adj(v); m; m &= m - 1) {
    int u = std::countr_zero(m);
    if (t.is_leaf(u)) out.push_back(u);
  }
  return out;
}

// Pattern (iii)/(iv): path through a center x4 with degree-2 inner vertices
// and prescribed leaves.  Returns the vertex list x1..x8 (or x1..x10).
inline std::optional<std::vector<int>> tree_pattern_iii(const Graph& t) {
  for (int x4 = 0; x4 < t.n(); ++x4)
    for (int x8 : leaf_neighbors(t, x4))
      for (int x3 : t.neighbors(x4)) {
        if (x3 == x8 || t.degree(x3) != 2) continue;
        int x2 = std::countr_zero(t.adj(x3) & ~(1u << x4));
        for (int x1 : leaf_neighbors(t, x2)) {
          if (x1 == x3) continue;
          for (int x5 : t.neighbors(x4)) {
            if (x5 == x3 || x5 == x8 || t.degree(x5) != 2) continue;
            int x6 = std::countr_zero(t.adj(x5) & ~(1u << x4));
            for (int x7 : leaf_neighbors(t, x6)) {
              if (x7 == x5) continue;
              std::vector<int> xs{x1, x2, x3, x4, x5, x6, x7, x8};
              std::vector<int> s = xs;
              std::sort(s.begin(), s.end());
              if (std::unique(s.begin(), s.end()) == s.end()) return xs;
            }
          }
        }
      }
  return std::nullopt;
}

inline std::optional<std::vector<int>> tree_pattern_iv(const Graph& t) {
  for (int x4 = 0; x4 < t.n(); ++x4)
    for (int x8 : t.neighbors(x4)) {
      if (t.degree(x8) != 2) continue;
      int x9 = std::countr_zero(t.adj(x8) & ~(1u << x4));
      for (int x10 : leaf_neighbors(t, x9)) {
        if (x10 == x8) continue;
        for (int x3 : t.neighbors(x4)) {
          if (x3 == x8 || t.degree(x3) != 2) continue;
          int x2 = std::countr_zero(t.adj(x3) & ~(1u << x4));
          for (int x1 : leaf_neighbors(t, x2)) {
            if (x1 == x3) continue;
            for (int x5 : t.neighbors(x4)) {
              if (x5 == x3 || x5 == x8 || t.degree(x5) != 2) continue;
              int x6 = std::countr_zero(t.adj(x5) & ~(1u << x4));
              for (int x7 : leaf_neighbors(t, x6)) {
                if (x7 == x5) continue;
                std::vector<int> xs{x1, x2, x3, x4, x5, x6, x7, x8, x9, x10};
                std::vector<int> s = xs;
                std::sort(s.begin(), s.end());
                if (std::unique(s.begin(), s.end()) == s.end()) return xs;
              }
            }
          }
        }
      }
    }
  return std::nullopt;
}

inline std::optional<std::vector<int>> tree_pattern_v(const Graph& t) {
  for (int x3 = 0; x3 < t.n(); ++x3) {
    auto leaves = leaf_neighbors(t, x3);
    if (leaves.size() < 2) continue;
    int x1 = leaves[0], x2 = leaves[1];
    for (int x4 : t.neighbors(x3)) {
      if (x4 == x1 || x4 == x2 || t.degree(x4) != 2) continue;
      int x5 = std::countr_zero(t.adj(x4) & ~(1u << x3));
      for (int x6 : leaf_neighbors(t, x5)) {
        if (x6 == x4) continue;
        std::vector<int> xs{x1, x2, x3, x4, x5, x6};
        std::vector<int> s = xs;
        std::sort(s.begin(), s.end());
        if (std::unique(s.begin(), s.end()) == s.end()) return xs;
      }
    }
  }
  return std::nullopt;
}

struct OddComponent {
  std::vector<int> vertices;  // original labels
  int attach;                 // z_i, original label
  bool minus_z_perfect;
  int rho_value;
};

// Decomposition at x: exactly three odd components with match = (|V|-1)/2,
// every even component with a perfect matching.
inline std::optional<std::vector<OddComponent>> decompose_at(const Graph& t, int x) {
  if (t.degree(x) < 3) return std::nullopt;
  std::vector<int> map;
  Graph rest = induced_subgraph(t, t.vertex_mask() & ~(1u << x), &map);
  std::vector<OddComponent> odd;
  for (const auto& [comp, cmap] : connected_components(rest)) {
    std::vector<int> orig;
    for (int v : cmap) orig.push_back(map[v]);
    int m = maximum_matching_number(comp);
    if (comp.n() % 2 == 0) {
      if (2 * m != comp.n()) return std::nullopt;
      continue;
    }
    if (2 * m != comp.n() - 1) return std::nullopt;
    OddComponent oc;
    oc.vertices = orig;
    oc.attach = -1;
    int local_attach = -1;
    for (int i = 0; i < (int)orig.size(); ++i)
      if (t.has_edge(orig[i], x)) {
        oc.attach = orig[i];
        local_attach = i;
      }
    if (oc.attach < 0) return std::nullopt;  // unreachable for connected t
    oc.minus_z_perfect =
        2 * maximum_matching_number(
                induced_subgraph(comp, comp.vertex_mask() & ~(1u << local_attach))) ==
        comp.n() - 1;
    oc.rho_value = rho(comp);
    odd.push_back(std::move(oc));
  }
  if (odd.size() != 3) return std::nullopt;
  return odd;
}

}  // namespace detail

/// The tree classification for unit caps: match_big when match >= (n-1)/2,
/// otherwise the pattern cases of the match = (n-2)/2 classification.
inline TreeClassification classify_tree_unit_caps(const Graph& t) {
  if (!is_tree(t)) throw std::invalid_argument("input is not a tree");
  if (t.n() < 2) throw std::invalid_argument("tree must have >= 2 vertices");
  int m = maximum_matching_number(t);
  TreeClassification out;
  if (2 * m >= t.n() - 1) {
    out.kind = TreeCase::match_big;
    out.gorenstein = true;
    return out;
  }
  if (2 * m != t.n() - 2)
    throw std::invalid_argument("tree has match < (n-2)/2, outside the classification");
  out.gorenstein = true;
  for (int v = 0; v < t.n(); ++v)
    if (detail::leaf_neighbors(t, v).size() >= 3) {
      out.kind = TreeCase::i;
      out.witness = {v};
      return out;
    }
  {
    std::vector<int> two;
    for (int v = 0; v < t.n(); ++v)
      if (detail::leaf_neighbors(t, v).size() >= 2) two.push_back(v);
    if (two.size() >= 2) {
      out.kind = TreeCase::ii;
      out.witness = {two[0], two[1]};
      return out;
    }
  }
  if (auto xs = detail::tree_pattern_iii(t)) {
    out.kind = TreeCase::iii;
    out.witness = *xs;
    return out;
  }
  if (auto xs = detail::tree_pattern_iv(t)) {
    out.kind = TreeCase::iv;
    out.witness = *xs;
    return out;
  }
  if (auto xs = detail::tree_pattern_v(t)) {
    out.kind = TreeCase::v;
    out.witness = *xs;
    return out;
  }
  for (int x = 0; x < t.n(); ++x) {
    auto odd = detail::decompose_at(t, x);
    if (!odd) continue;
    std::vector<int> without, with;
    for (int i = 0; i < 3; ++i)
      ((*odd)[i].minus_z_perfect ? with : without).push_back(i);
    if (without.size() == 2 &&
        (*odd)[without[0]].rho_value == (*odd)[without[1]].rho_value) {
      out.kind = TreeCase::vi;
      out.witness = {x};
      return out;
    }
  }
  for (int x = 0; x < t.n(); ++x) {
    auto odd = detail::decompose_at(t, x);
    if (!odd) continue;
    std::vector<int> without, with;
    for (int i = 0; i < 3; ++i)
      ((*odd)[i].minus_z_perfect ? with : without).push_back(i);
    if (without.size() == 1 &&
        (*odd)[without[0]].rho_value ==
            (*odd)[with[0]].rho_value + (*odd)[with[1]].rho_value) {
      out.kind = TreeCase::vii;
      out.witness = {x};
      return out;
    }
  }
  out.kind = TreeCase::viii;
  out.gorenstein = false;
  return out;
}

/// Raised when the classification and oracle routes disagree; never expected.
class RouteDisagreement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline GorensteinVerdict classify_route(const Graph& g, const CapVector& c,
                                        std::size_t budget) {
  GorensteinVerdict v;
  v.method = Method::classification;
  long long sum = std::accumulate(c.begin(), c.end(), 0LL);
  int d = delta(g, c);
  if (2 * d >= sum - 1) {
    v.gorenstein = true;
    v.case_label = "polynomial_ring";
    return v;
  }
  auto comps = connected_components(g);
  bool all_complete = true;
  for (const auto& [comp, map] : comps)
    if (!is_complete(comp)) all_complete = false;
  if (all_complete) {
    std::vector<int> dims;
    for (const auto& [comp, map] : comps) {
      CapVector cc;
      for (int orig : map) cc.push_back(c[orig]);
      dims.push_back((int)classify_complete_graph(comp.n(), cc).generators.members.size());
    }
    v.gorenstein = segre_gorenstein(dims);
    v.case_label = "segre_complete";
    return v;
  }
  if (comps.size() == 1) {
    if (auto spec = recognize_multipartite_minus_matching(g)) {
      auto mc = classify_multipartite_minus_matching(g, *spec, c);
      if (mc.kind == MultipartiteCase::beta_i) {
        v.gorenstein = true;
        v.case_label = "multipartite_beta_i";
        return v;
      }
      v.case_label = mc.kind == MultipartiteCase::alpha ? "multipartite_alpha"
                                                        : "multipartite_beta_ii";
      if (mc.spec->d == 0) {
        // Degenerate Veronese factor: B is generated by the fixed monomial
        // alone, hence a one-variable polynomial ring.
        v.gorenstein = true;
        return v;
      }
      auto oracle = gorenstein_oracle(veronese_generators(*mc.spec), budget);
      v.gorenstein = oracle.gorenstein;
      v.hvector = oracle.hvector;
      return v;
    }
  }
  if (is_tree(g) && std::all_of(c.begin(), c.end(), [](int x) { return x == 1; }) &&
      2 * maximum_matching_number(g) == g.n() - 2) {
    auto tc = classify_tree_unit_caps(g);
    v.gorenstein = tc.gorenstein;
    v.case_label = std::string("tree_") + tree_case_name(tc.kind);
    return v;
  }
  auto oracle = gorenstein_oracle(top_bounded_generators(g, c), budget);
  oracle.case_label = "fallback";
  return oracle;
}

}  // namespace detail

/// Per-instance Gorenstein decision.  The classification route applies the
/// structure theorems in priority order and falls back to the oracle; method
/// `both` runs both routes and raises RouteDisagreement on mismatch.
inline GorensteinVerdict gorenstein(const Graph& g, const CapVector& c, Method method,
                                    std::size_t budget = kDefaultSumsetBudget) {
  check_no_isolated(g);
  check_caps(g, c);
  if (method == Method::oracle)
    return gorenstein_oracle(top_bounded_generators(g, c), budget);
  if (method == Method::classification) return detail::classify_route(g, c, budget);
  GorensteinVerdict cl = detail::classify_route(g, c, budget);
  GorensteinVerdict orc = gorenstein_oracle(top_bounded_generators(g, c), budget);
  if (cl.gorenstein != orc.gorenstein)
    throw RouteDisagreement("classification and oracle verdicts disagree (case " +
                            cl.case_label + ")");
  GorensteinVerdict v = orc;
  v.method = Method::both;
  v.case_label = cl.case_label;
  return v;
}

}  // namespace bpow
