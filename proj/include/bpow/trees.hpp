#pragma once

#include <map>
#include <string>
#include <vector>

#include "bpow/graph.hpp"

namespace bpow {

namespace detail {

inline std::string rooted_canon(const Graph& t, int v, int parent) {
  std::vector<std::string> kids;
  for (int u : t.neighbors(v))
    if (u != parent) kids.push_back(rooted_canon(t, u, v));
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  out += ")";
  return out;
}

inline std::vector<int> tree_centers(const Graph& t) {
  int remaining = t.n();
  std::vector<int> deg(t.n());
  std::vector<bool> removed(t.n(), false);
  for (int v = 0; v < t.n(); ++v) deg[v] = t.degree(v);
  std::vector<int> layer;
  for (int v = 0; v < t.n(); ++v)
    if (deg[v] <= 1) layer.push_back(v);
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      removed[v] = true;
      --remaining;
      for (int u : t.neighbors(v))
        if (!removed[u] && --deg[u] == 1) next.push_back(u);
    }
    layer = std::move(next);
  }
  std::vector<int> centers;
  for (int v = 0; v < t.n(); ++v)
    if (!removed[v]) centers.push_back(v);
  return centers;
}

}  // namespace detail

/// Isomorphism-invariant encoding of a free tree (center-rooted AHU form).
inline std::string tree_canonical_form(const Graph& t) {
  if (t.n() == 0) return "";
  if (!is_tree(t)) throw std::invalid_argument("input is not a tree");
  auto centers = detail::tree_centers(t);
  if (centers.size() == 1) return detail::rooted_canon(t, centers[0], -1);
  std::string a = detail::rooted_canon(t, centers[0], centers[1]);
  std::string b = detail::rooted_canon(t, centers[1], centers[0]);
  if (b < a) std::swap(a, b);
  return a + "|" + b;
}

/// All unlabeled trees on exactly n vertices, grown by leaf attachment with
/// canonical-form deduplication.  Deterministic order: by canonical form.
inline std::vector<Graph> free_trees(int n) {
  if (n <= 0) return {};
  std::map<std::string, Graph> current;
  current.emplace("()", Graph::from_edges(1, {}));
  for (int k = 2; k <= n; ++k) {
    std::map<std::string, Graph> next;
    for (const auto& [form, t] : current)
      for (int v = 0; v < t.n(); ++v) {
        auto edges = t.edges();
        edges.push_back({v, t.n()});
        Graph grown = Graph::from_edges(t.n() + 1, edges);
        next.emplace(tree_canonical_form(grown), grown);
      }
    current = std::move(next);
  }
  std::vector<Graph> out;
  for (auto& [form, t] : current) out.push_back(std::move(t));
  return out;
}

}  // namespace bpow
