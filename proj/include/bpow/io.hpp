#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "bpow/bounded_powers.hpp"
#include "bpow/graph.hpp"

namespace bpow {

/// A graph plus caps plus an optional declared multipartite spec.  All I/O is
/// 1-indexed; internal vertices are 0-indexed.
struct ProblemInstance {
  Graph graph;
  CapVector caps;
  std::optional<MultipartiteSpec> declared_spec;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline int to_internal(int v, int n, const char* field) {
  if (v < 1 || v > n)
    throw ParseError(std::string(field) + ": vertex index " + std::to_string(v) +
                     " out of range 1.." + std::to_string(n));
  return v - 1;
}

}  // namespace detail

/// Parses the instance document: {"n": int, "edges": [[i,j],...],
/// "caps": [c_1..c_n] (default all 1), "parts": [[...],...] (optional),
/// "removed_matching": [[i,j],...] (optional)}.  All indices 1-based.
inline ProblemInstance parse_instance(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("parse error: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("instance document must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw ParseError("field 'n' (integer) is required");
  int n = doc["n"].get<int>();
  if (n < 1) throw ParseError("field 'n' must be >= 1");
  std::vector<Edge> edges;
  if (doc.contains("edges"))
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2)
        throw ParseError("field 'edges': each entry must be a pair");
      int a = detail::to_internal(e[0].get<int>(), n, "edges");
      int b = detail::to_internal(e[1].get<int>(), n, "edges");
      if (a == b) throw ParseError("field 'edges': loop at vertex " +
                                   std::to_string(a + 1));
      edges.push_back({std::min(a, b), std::max(a, b)});
    }
  {
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError("field 'edges': duplicate edge");
  }
  ProblemInstance inst;
  inst.graph = Graph::from_edges(n, edges);
  if (doc.contains("caps")) {
    if (!doc["caps"].is_array() || (int)doc["caps"].size() != n)
      throw ParseError("field 'caps' must list exactly n integers");
    for (const auto& v : doc["caps"]) {
      int c = v.get<int>();
      if (c < 1) throw ParseError("field 'caps': entries must be >= 1");
      inst.caps.push_back(c);
    }
  } else {
    inst.caps.assign(n, 1);
  }
  if (doc.contains("parts")) {
    MultipartiteSpec spec;
    for (const auto& part : doc["parts"]) {
      std::vector<int> p;
      for (const auto& v : part) p.push_back(detail::to_internal(v.get<int>(), n, "parts"));
      spec.parts.push_back(std::move(p));
    }
    if (doc.contains("removed_matching"))
      for (const auto& e : doc["removed_matching"]) {
        int a = detail::to_internal(e[0].get<int>(), n, "removed_matching");
        int b = detail::to_internal(e[1].get<int>(), n, "removed_matching");
        spec.removed.push_back({std::min(a, b), std::max(a, b)});
      }
    std::vector<bool> seen(n, false);
    for (const auto& p : spec.parts) {
      if (p.empty()) throw ParseError("field 'parts': empty part");
      for (int v : p) {
        if (seen[v]) throw ParseError("field 'parts': vertex listed twice");
        seen[v] = true;
      }
    }
    if (std::count(seen.begin(), seen.end(), true) != n)
      throw ParseError("field 'parts' must cover all vertices");
    if (reconstruct_multipartite(n, spec).edges() != inst.graph.edges())
      throw ParseError("declared parts/removed_matching do not reconstruct the graph");
    inst.declared_spec = std::move(spec);
  } else if (doc.contains("removed_matching")) {
    throw ParseError("'removed_matching' requires 'parts'");
  }
  return inst;
}

inline std::string serialize_instance(const ProblemInstance& inst) {
  nlohmann::json doc;
  doc["n"] = inst.graph.n();
  doc["edges"] = nlohmann::json::array();
  for (const auto& [a, b] : inst.graph.edges())
    doc["edges"].push_back({a + 1, b + 1});
  doc["caps"] = inst.caps;
  if (inst.declared_spec) {
    doc["parts"] = nlohmann::json::array();
    for (const auto& p : inst.declared_spec->parts) {
      nlohmann::json part = nlohmann::json::array();
      for (int v : p) part.push_back(v + 1);
      doc["parts"].push_back(part);
    }
    if (!inst.declared_spec->removed.empty()) {
      doc["removed_matching"] = nlohmann::json::array();
      for (const auto& [a, b] : inst.declared_spec->removed)
        doc["removed_matching"].push_back({a + 1, b + 1});
    }
  }
  return doc.dump();
}

}  // namespace bpow
