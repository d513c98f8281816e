// Command-line front end.  Single-instance subcommands read a JSON instance
// (file path or "-" for stdin) and print one JSON record; census subcommands
// print tab-separated rows.  Exit codes: 0 success, 1 input error, 2 route
// disagreement or resource budget exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bpow/classification.hpp"
#include "bpow/io.hpp"
#include "bpow/polymatroid.hpp"
#include "bpow/trees.hpp"

using namespace bpow;
using nlohmann::json;

namespace {

struct Budget {
  std::size_t max_sumset = kDefaultSumsetBudget;
  double timeout_seconds = 0;  // 0 = no limit
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  bool expired() const {
    if (timeout_seconds <= 0) return false;
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
               .count() > timeout_seconds;
  }
};

class TimeoutExceeded : public std::runtime_error {
 public:
  TimeoutExceeded() : std::runtime_error("time budget exceeded") {}
};

ProblemInstance load_instance(const std::string& path) {
  std::ostringstream text;
  if (path == "-") {
    text << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open instance file: " + path);
    text << in.rdbuf();
  }
  return parse_instance(text.str());
}

std::string instance_id(const ProblemInstance& inst) {
  std::string s = "n" + std::to_string(inst.graph.n()) + ";e";
  for (auto [a, b] : inst.graph.edges())
    s += std::to_string(a + 1) + "-" + std::to_string(b + 1) + ",";
  if (!inst.graph.edges().empty()) s.pop_back();
  s += ";c";
  for (std::size_t i = 0; i < inst.caps.size(); ++i)
    s += (i ? "," : "") + std::to_string(inst.caps[i]);
  return s;
}

json base_record(const ProblemInstance& inst) {
  json rec;
  rec["id"] = instance_id(inst);
  return rec;
}

void emit(const json& rec) { std::cout << rec.dump() << "\n"; }

std::string caps_string(const CapVector& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i)
    s += (i ? "," : "") + std::to_string(c[i]);
  return s;
}

std::string edges_string(const Graph& g) {
  std::string s;
  for (auto [a, b] : g.edges()) {
    if (!s.empty()) s += ",";
    s += std::to_string(a + 1) + "-" + std::to_string(b + 1);
  }
  return s;
}

std::string hvector_string(const std::vector<long long>& h) {
  std::string s;
  for (std::size_t i = 0; i < h.size(); ++i)
    s += (i ? "," : "") + std::to_string(h[i]);
  return s;
}

bool next_caps(CapVector& c, int max_cap) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < max_cap) {
      ++c[i];
      return true;
    }
    c[i] = 1;
  }
  return false;
}

void cmd_delta(const std::string& file) {
  auto inst = load_instance(file);
  json rec = base_record(inst);
  rec["delta"] = delta(inst.graph, inst.caps);
  emit(rec);
}

void cmd_gens(const std::string& file) {
  auto inst = load_instance(file);
  auto gs = top_bounded_generators(inst.graph, inst.caps);
  json rec = base_record(inst);
  rec["delta"] = gs.common_degree / 2;
  rec["generator_count"] = gs.members.size();
  rec["degree"] = gs.common_degree;
  rec["generators"] = gs.members;
  emit(rec);
}

void cmd_hvector(const std::string& file, const Budget& budget) {
  auto inst = load_instance(file);
  auto gs = top_bounded_generators(inst.graph, inst.caps);
  auto data = h_vector(gs, budget.max_sumset);
  json rec = base_record(inst);
  rec["generator_count"] = gs.members.size();
  rec["dimension"] = data.dim;
  rec["hilbert_values"] = data.values;
  rec["hvector"] = data.hvector;
  emit(rec);
}

void cmd_check_polymatroid(const std::string& file) {
  auto inst = load_instance(file);
  auto gs = top_bounded_generators(inst.graph, inst.caps);
  json rec = base_record(inst);
  rec["generator_count"] = gs.members.size();
  auto cx = check_exchange(gs);
  rec["polymatroidal"] = !cx.has_value();
  if (cx) {
    rec["counterexample"]["u"] = cx->u;
    rec["counterexample"]["v"] = cx->v;
    rec["counterexample"]["index"] = cx->index + 1;
  }
  emit(rec);
}

void cmd_gorenstein(const std::string& file, const std::string& method_flag,
                    const Budget& budget) {
  Method method = Method::both;
  if (method_flag == "classify") method = Method::classification;
  else if (method_flag == "oracle") method = Method::oracle;
  auto inst = load_instance(file);
  auto v = gorenstein(inst.graph, inst.caps, method, budget.max_sumset);
  json rec = base_record(inst);
  rec["gorenstein"] = v.gorenstein;
  rec["method"] = method_name(v.method);
  if (!v.hvector.empty()) rec["hvector"] = v.hvector;
  if (!v.case_label.empty()) rec["case"] = v.case_label;
  emit(rec);
}

void cmd_deficiency_graph(const std::string& file) {
  auto inst = load_instance(file);
  auto dg = deficiency_graph(inst.graph);
  json rec = base_record(inst);
  json verts = json::array();
  for (int v : dg.vertex_map) verts.push_back(v + 1);
  rec["vertices"] = verts;
  json edges = json::array();
  for (auto [a, b] : dg.graph.edges())
    edges.push_back({dg.vertex_map[a] + 1, dg.vertex_map[b] + 1});
  rec["edges"] = edges;
  emit(rec);
}

void cmd_witness(const std::string& file) {
  auto inst = load_instance(file);
  auto w = nocomp_witness(inst.graph);
  json rec = base_record(inst);
  rec["pair"] = {w.pair.first + 1, w.pair.second + 1};
  json A = json::array(), B = json::array();
  for (int v : w.A) A.push_back(v + 1);
  for (int v : w.B) B.push_back(v + 1);
  rec["A"] = A;
  rec["B"] = B;
  rec["cap"] = w.cap;
  rec["veronese_degree"] = w.predicted.d;
  rec["veronese_caps"] = w.predicted.caps;
  emit(rec);
}

void census_trees(int max_n) {
  std::cout << "id\tn\tedges\tcase\tverdict_classify\tverdict_oracle\n";
  for (int n = 2; n <= max_n; ++n) {
    int idx = 0;
    for (const Graph& t : free_trees(n)) {
      if (2 * maximum_matching_number(t) != n - 2) continue;
      auto cls = classify_tree_unit_caps(t);
      auto orc = gorenstein_oracle(top_bounded_generators(t, CapVector(n, 1)));
      if (cls.gorenstein != orc.gorenstein)
        throw RouteDisagreement("tree census verdict mismatch at n=" +
                                std::to_string(n));
      std::cout << "t" << n << "_" << idx++ << "\t" << n << "\t"
                << edges_string(t) << "\t" << tree_case_name(cls.kind) << "\t"
                << (cls.gorenstein ? "true" : "false") << "\t"
                << (orc.gorenstein ? "true" : "false") << "\n";
    }
  }
}

void census_caps(const std::string& file, int max_cap, const Budget& budget) {
  auto inst = load_instance(file);
  std::cout << "caps\tdelta\tgens\tdim\thvector\tcase\tgorenstein\n";
  CapVector caps(inst.graph.n(), 1);
  do {
    if (budget.expired()) throw TimeoutExceeded();
    auto gs = top_bounded_generators(inst.graph, caps);
    auto data = h_vector(gs, budget.max_sumset);
    auto v = gorenstein(inst.graph, caps, Method::both, budget.max_sumset);
    std::cout << caps_string(caps) << "\t" << gs.common_degree / 2 << "\t"
              << gs.members.size() << "\t" << data.dim << "\t"
              << hvector_string(data.hvector) << "\t" << v.case_label << "\t"
              << (v.gorenstein ? "true" : "false") << "\n";
  } while (next_caps(caps, max_cap));
}

Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph::from_edges(n, e);
}

void census_complete(int max_n, int max_cap, const Budget& budget) {
  std::cout << "n\tcaps\tdelta\tgens\tdim\tgorenstein\n";
  for (int n = 2; n <= max_n; ++n) {
    CapVector caps(n, 1);
    do {
      if (budget.expired()) throw TimeoutExceeded();
      auto gs = top_bounded_generators(complete(n), caps);
      auto cls = classify_complete_graph(n, caps);
      if (cls.generators.members != gs.members)
        throw RouteDisagreement("complete census generator mismatch at n=" +
                                std::to_string(n));
      std::cout << n << "\t" << caps_string(caps) << "\t"
                << gs.common_degree / 2 << "\t" << gs.members.size() << "\t"
                << krull_dim(gs) << "\t"
                << (gorenstein_oracle(gs, budget.max_sumset).gorenstein ? "true"
                                                                        : "false")
                << "\n";
    } while (next_caps(caps, max_cap));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bounded powers of edge ideals: delta, generators, h-vectors, "
               "and Gorenstein classification"};
  app.require_subcommand(1);

  Budget budget;
  app.add_option("--max-sumset", budget.max_sumset,
                 "abort Hilbert computations whose graded layer exceeds this size");
  app.add_option("--timeout-seconds", budget.timeout_seconds,
                 "stop census runs after this many seconds (partial output, exit 2)");

  std::string file, method_flag = "both";
  int max_n = 8, max_cap = 2;

  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("instance", file, "instance file (JSON; - for stdin)")
        ->required();
  };

  add_instance(app.add_subcommand("delta", "maximum bounded matching value"));
  add_instance(app.add_subcommand("gens", "generators of the top bounded power"));
  add_instance(app.add_subcommand("hvector", "dimension, Hilbert values, h-vector"));
  add_instance(
      app.add_subcommand("check-polymatroid", "verify the exchange property"));
  auto* gor = app.add_subcommand("gorenstein", "decide Gorensteinness");
  add_instance(gor);
  gor->add_option("--method", method_flag, "classify | oracle | both")
      ->check(CLI::IsMember({"classify", "oracle", "both"}))
      ->default_val("both");
  add_instance(app.add_subcommand("deficiency-graph",
                                  "vertices missed by maximum matchings"));
  add_instance(app.add_subcommand("witness",
                                  "non-Gorenstein cap construction for "
                                  "non-complete graphs"));

  auto* census = app.add_subcommand("census", "exhaustive sweeps (TSV output)");
  census->require_subcommand(1);
  auto* ct = census->add_subcommand("trees", "unlabeled trees with match=(n-2)/2");
  ct->add_option("--max-n", max_n, "largest tree size")->default_val(8);
  auto* cc = census->add_subcommand("caps", "all cap vectors on one graph");
  cc->add_option("-g,--graph", file, "instance file")->required();
  cc->add_option("--max-cap", max_cap, "largest cap entry")->default_val(2);
  auto* ck = census->add_subcommand("complete", "complete graphs");
  ck->add_option("--max-n", max_n, "largest n")->default_val(5);
  ck->add_option("--max-cap", max_cap, "largest cap entry")->default_val(2);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("delta")) cmd_delta(file);
    else if (app.got_subcommand("gens")) cmd_gens(file);
    else if (app.got_subcommand("hvector")) cmd_hvector(file, budget);
    else if (app.got_subcommand("check-polymatroid")) cmd_check_polymatroid(file);
    else if (app.got_subcommand("gorenstein")) cmd_gorenstein(file, method_flag, budget);
    else if (app.got_subcommand("deficiency-graph")) cmd_deficiency_graph(file);
    else if (app.got_subcommand("witness")) cmd_witness(file);
    else if (census->got_subcommand("trees")) census_trees(max_n);
    else if (census->got_subcommand("caps")) census_caps(file, max_cap, budget);
    else if (census->got_subcommand("complete")) census_complete(max_n, max_cap, budget);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const RouteDisagreement& e) {
    std::cerr << "internal disagreement: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const TimeoutExceeded& e) {
    std::cerr << "time budget exceeded; output above is partial\n";
    return 2;
  }
  return 0;
}
