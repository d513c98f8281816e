#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bpow {

using Edge = std::pair<int, int>;  // endpoints 0-based, first < second

/// Finite simple loopless graph on vertices 0..n-1.  Immutable after
/// construction; edges are stored sorted and adjacency as bitmasks.
class Graph {
 public:
  static constexpr int kMaxVertices = 31;

  Graph() : n_(0) {}

  static Graph from_edges(int n, std::vector<Edge> edges) {
    if (n < 0 || n > kMaxVertices)
      throw std::invalid_argument("vertex count out of supported range 0..31");
    for (auto& e : edges) {
      if (e.first == e.second) throw std::invalid_argument("loop edge");
      if (e.first > e.second) std::swap(e.first, e.second);
      if (e.first < 0 || e.second >= n)
        throw std::invalid_argument("edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw std::invalid_argument("duplicate edge");
    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.adj_.assign(n, 0u);
    for (const auto& [a, b] : g.edges_) {
      g.adj_[a] |= 1u << b;
      g.adj_[b] |= 1u << a;
    }
    return g;
  }

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::uint32_t adj(int v) const { return adj_[v]; }
  bool has_edge(int a, int b) const { return (adj_[a] >> b) & 1u; }
  int degree(int v) const { return std::popcount(adj_[v]); }
  bool is_leaf(int v) const { return degree(v) == 1; }
  std::uint32_t vertex_mask() const { return n_ == 31 ? 0x7fffffffu : (1u << n_) - 1; }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (std::uint32_t m = adj_[v]; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  bool has_isolated_vertex() const {
    for (int v = 0; v < n_; ++v)
      if (adj_[v] == 0) return true;
    return false;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> adj_;
};

/// Induced subgraph on the vertices of `mask`; `index_map[i]` is the original
/// label of the subgraph's vertex i.
inline Graph induced_subgraph(const Graph& g, std::uint32_t mask,
                              std::vector<int>* index_map = nullptr) {
  std::vector<int> verts;
  for (std::uint32_t m = mask; m; m &= m - 1) verts.push_back(std::countr_zero(m));
  std::vector<int> pos(g.n(), -1);
  for (int i = 0; i < (int)verts.size(); ++i) pos[verts[i]] = i;
  std::vector<Edge> edges;
  for (const auto& [a, b] : g.edges())
    if (pos[a] >= 0 && pos[b] >= 0) edges.push_back({pos[a], pos[b]});
  if (index_map) *index_map = verts;
  return Graph::from_edges((int)verts.size(), std::move(edges));
}

inline std::vector<std::pair<Graph, std::vector<int>>> connected_components(const Graph& g) {
  std::vector<std::pair<Graph, std::vector<int>>> out;
  std::uint32_t seen = 0;
  for (int v = 0; v < g.n(); ++v) {
    if ((seen >> v) & 1u) continue;
    std::uint32_t comp = 1u << v;
    for (;;) {
      std::uint32_t grown = comp;
      for (std::uint32_t m = comp; m; m &= m - 1) grown |= g.adj(std::countr_zero(m));
      if (grown == comp) break;
      comp = grown;
    }
    seen |= comp;
    std::vector<int> map;
    Graph sub = induced_subgraph(g, comp, &map);
    out.emplace_back(std::move(sub), std::move(map));
  }
  return out;
}

inline bool is_connected(const Graph& g) {
  return connected_components(g).size() <= 1;
}

inline bool is_complete(const Graph& g) {
  return (int)g.edges().size() == g.n() * (g.n() - 1) / 2;
}

/// Partition of the vertices witnessing G as a complete multipartite graph
/// (parts independent, all cross-part pairs adjacent), or absent.  Parts are
/// ordered by smallest member.  Works because non-adjacency must be an
/// equivalence relation: parts are the components of the complement.
inline std::optional<std::vector<std::vector<int>>> complete_multipartite_parts(const Graph& g) {
  if (g.n() == 0) return std::nullopt;
  std::vector<std::vector<int>> parts;
  std::vector<int> part_of(g.n(), -1);
  for (int v = 0; v < g.n(); ++v) {
    if (part_of[v] >= 0) continue;
    parts.push_back({v});
    part_of[v] = (int)parts.size() - 1;
    for (int w = v + 1; w < g.n(); ++w)
      if (part_of[w] < 0 && !g.has_edge(v, w)) {
        parts.back().push_back(w);
        part_of[w] = part_of[v];
      }
  }
  // Verify: within-part pairs non-adjacent, cross-part pairs adjacent.
  for (int a = 0; a < g.n(); ++a)
    for (int b = a + 1; b < g.n(); ++b)
      if (g.has_edge(a, b) == (part_of[a] == part_of[b])) return std::nullopt;
  if (parts.size() < 2) return std::nullopt;
  return parts;
}

/// Ordered partition (V_1,...,V_m) plus a removed matching whose edges join
/// distinct parts; reconstructs the source graph as K_{n_1,...,n_m} minus the
/// matching.
struct MultipartiteSpec {
  std::vector<std::vector<int>> parts;
  std::vector<Edge> removed;
};

inline Graph reconstruct_multipartite(int n, const MultipartiteSpec& spec) {
  std::vector<int> part_of(n, -1);
  for (int i = 0; i < (int)spec.parts.size(); ++i)
    for (int v : spec.parts[i]) part_of[v] = i;
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (part_of[a] != part_of[b] &&
          !std::count(spec.removed.begin(), spec.removed.end(), Edge{a, b}))
        edges.push_back({a, b});
  return Graph::from_edges(n, std::move(edges));
}

namespace detail {

// Backtracking over assignments of vertices to parts.  In the complement of
// G, parts must be cliques and leftover cross-part edges must form a matching.
inline bool mmm_search(const Graph& g, int v, std::vector<std::vector<int>>& parts,
                       std::vector<int>& part_of, std::vector<int>& cross_partner) {
  const int n = g.n();
  if (v == n) {
    return parts.size() >= 2;
  }
  auto try_place = [&](int p) -> bool {
    for (int w : parts[p])
      if (g.has_edge(w, v)) return false;  // part must be independent in G
    // Complement edges from v to earlier vertices in other parts are removed-
    // matching edges; each endpoint may carry at most one.
    std::vector<int> partners;
    for (int w = 0; w < v; ++w)
      if (part_of[w] >= 0 && part_of[w] != p && !g.has_edge(w, v)) partners.push_back(w);
    if (partners.size() > 1) return false;
    for (int w : partners)
      if (cross_partner[w] >= 0) return false;
    parts[p].push_back(v);
    part_of[v] = p;
    for (int w : partners) {
      cross_partner[w] = v;
      cross_partner[v] = w;
    }
    if (mmm_search(g, v + 1, parts, part_of, cross_partner)) return true;
    for (int w : partners) {
      cross_partner[w] = -1;
      cross_partner[v] = -1;
    }
    parts[p].pop_back();
    part_of[v] = -1;
    return false;
  };
  for (int p = 0; p < (int)parts.size(); ++p)
    if (try_place(p)) return true;
  parts.emplace_back();
  if (try_place((int)parts.size() - 1)) return true;
  parts.pop_back();
  return false;
}

}  // namespace detail

/// First MultipartiteSpec (in the deterministic index-order search) whose
/// reconstruction equals G, or absent.
inline std::optional<MultipartiteSpec> recognize_multipartite_minus_matching(const Graph& g) {
  if (g.has_isolated_vertex()) throw std::invalid_argument("graph has an isolated vertex");
  if (g.n() < 2) return std::nullopt;
  std::vector<std::vector<int>> parts;
  std::vector<int> part_of(g.n(), -1);
  std::vector<int> cross_partner(g.n(), -1);
  if (!detail::mmm_search(g, 0, parts, part_of, cross_partner)) return std::nullopt;
  MultipartiteSpec spec;
  spec.parts = parts;
  for (int v = 0; v < g.n(); ++v)
    if (cross_partner[v] > v) spec.removed.push_back({v, cross_partner[v]});
  return spec;
}

/// Exact maximum-matching search over vertex bitmasks with memoization.
class MatchingSolver {
 public:
  explicit MatchingSolver(const Graph& g) : g_(g) {}

  int match(std::uint32_t mask) {
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    int v = -1;
    for (std::uint32_t m = mask; m; m &= m - 1) {
      int u = std::countr_zero(m);
      if (g_.adj(u) & mask) {
        v = u;
        break;
      }
    }
    int best = 0;
    if (v >= 0) {
      best = match(mask & ~(1u << v));  // leave v uncovered
      for (std::uint32_t m = g_.adj(v) & mask; m; m &= m - 1) {
        int u = std::countr_zero(m);
        best = std::max(best, 1 + match(mask & ~(1u << v) & ~(1u << u)));
      }
    }
    memo_[mask] = best;
    return best;
  }

 private:
  const Graph& g_;
  std::map<std::uint32_t, int> memo_;
};

inline int maximum_matching_number(const Graph& g) {
  MatchingSolver solver(g);
  return solver.match(g.vertex_mask());
}

inline bool has_perfect_matching(const Graph& g) {
  return 2 * maximum_matching_number(g) == g.n();
}

/// The set {v : G - v has a perfect matching}; its size is rho(G).
inline std::vector<int> deficiency_vertices(const Graph& g) {
  std::vector<int> out;
  if (g.n() % 2 == 0) return out;
  MatchingSolver solver(g);
  for (int v = 0; v < g.n(); ++v)
    if (2 * solver.match(g.vertex_mask() & ~(1u << v)) == g.n() - 1) out.push_back(v);
  return out;
}

inline int rho(const Graph& g) { return (int)deficiency_vertices(g).size(); }

inline bool covered_by_some_maximum_matching(const Graph& g, int v) {
  MatchingSolver solver(g);
  int best = solver.match(g.vertex_mask());
  for (std::uint32_t m = g.adj(v); m; m &= m - 1) {
    int u = std::countr_zero(m);
    if (1 + solver.match(g.vertex_mask() & ~(1u << v) & ~(1u << u)) == best) return true;
  }
  return false;
}

/// Graph on the vertices missed by maximum matchings of a graph with
/// match = (n-2)/2; {u,w} is an edge iff some maximum matching misses exactly
/// {u,w}.  Each edge carries a witness maximum matching.
struct DeficiencyGraph {
  Graph graph;                   // on local indices 0..k-1
  std::vector<int> vertex_map;   // local index -> original vertex
  std::vector<std::vector<Edge>> witnesses;  // per edge of `graph`, in original labels
};

namespace detail {

// Any perfect matching of the induced subgraph on `mask`, or empty if none.
inline std::optional<std::vector<Edge>> find_perfect_matching(const Graph& g,
                                                              std::uint32_t mask) {
  if (mask == 0) return std::vector<Edge>{};
  int v = std::countr_zero(mask);
  for (std::uint32_t m = g.adj(v) & mask; m; m &= m - 1) {
    int u = std::countr_zero(m);
    auto rest = find_perfect_matching(g, mask & ~(1u << v) & ~(1u << u));
    if (rest) {
      rest->push_back({v, u});
      return rest;
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline DeficiencyGraph deficiency_graph(const Graph& g) {
  if (2 * maximum_matching_number(g) != g.n() - 2)
    throw std::invalid_argument("deficiency_graph requires match(G) = (n-2)/2");
  std::vector<int> verts;
  std::vector<Edge> local_edges;
  std::vector<std::vector<Edge>> witnesses;
  std::vector<int> pos(g.n(), -1);
  // A maximum matching misses exactly {u,w} iff G - {u,w} has a perfect matching.
  std::vector<std::tuple<int, int, std::vector<Edge>>> found;
  for (int u = 0; u < g.n(); ++u)
    for (int w = u + 1; w < g.n(); ++w) {
      auto pm = detail::find_perfect_matching(g, g.vertex_mask() & ~(1u << u) & ~(1u << w));
      if (pm) found.emplace_back(u, w, std::move(*pm));
    }
  for (const auto& [u, w, pm] : found) {
    for (int v : {u, w})
      if (pos[v] < 0) {
        pos[v] = (int)verts.size();
        verts.push_back(v);
      }
    local_edges.push_back({std::min(pos[u], pos[w]), std::max(pos[u], pos[w])});
    witnesses.push_back(pm);
  }
  // Relabel so vertex_map is sorted by original index.
  std::vector<int> order(verts.size());
  for (int i = 0; i < (int)order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return verts[a] < verts[b]; });
  std::vector<int> rank(verts.size());
  for (int i = 0; i < (int)order.size(); ++i) rank[order[i]] = i;
  std::vector<int> sorted_verts(verts.size());
  for (int i = 0; i < (int)verts.size(); ++i) sorted_verts[rank[i]] = verts[i];
  for (auto& [a, b] : local_edges) {
    a = rank[a];
    b = rank[b];
    if (a > b) std::swap(a, b);
  }
  DeficiencyGraph out;
  out.graph = Graph::from_edges((int)verts.size(), local_edges);
  out.vertex_map = sorted_verts;
  // Witness order follows the sorted edge order of the graph.
  std::vector<int> idx(local_edges.size());
  for (int i = 0; i < (int)idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return local_edges[a] < local_edges[b]; });
  out.witnesses.resize(witnesses.size());
  for (int i = 0; i < (int)idx.size(); ++i) out.witnesses[i] = witnesses[idx[i]];
  return out;
}

inline bool is_tree(const Graph& g) {
  return g.n() >= 1 && (int)g.edges().size() == g.n() - 1 && is_connected(g);
}

}  // namespace bpow
