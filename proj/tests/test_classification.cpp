#include <doctest.h>

#include <numeric>

#include "bpow/classification.hpp"
#include "test_util.hpp"

using namespace bpow;
using namespace bpow::testutil;

TEST_CASE("veronese generators") {
  CHECK(veronese_generators(VeroneseSpec{1, {1, 1}}).members ==
        std::vector<ExponentVector>{{0, 1}, {1, 0}});
  CHECK(veronese_generators(VeroneseSpec{4, {4, 4}}).members ==
        std::vector<ExponentVector>{{0, 4}, {1, 3}, {2, 2}, {3, 1}, {4, 0}});
  // A(2;(1,1,1)) is the star's generator set with the center dropped.
  auto v = veronese_generators(VeroneseSpec{2, {1, 1, 1}});
  CHECK(v.members == std::vector<ExponentVector>{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  auto gs = top_bounded_generators(star(3), {1, 1, 1, 2});
  REQUIRE(gs.members.size() == v.members.size());
  for (std::size_t i = 0; i < v.members.size(); ++i) {
    ExponentVector shifted = v.members[i];
    shifted.push_back(2);
    CHECK(gs.members[i] == shifted);
  }
}

TEST_CASE("complete graph classification") {
  auto a = classify_complete_graph(3, {1, 1, 1});
  CHECK_FALSE(a.dim_one);
  CHECK(a.generators.members ==
        std::vector<ExponentVector>{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});

  auto b = classify_complete_graph(3, {2, 1, 1});
  CHECK(b.dim_one);
  CHECK(b.generators.members == std::vector<ExponentVector>{{2, 1, 1}});

  auto c = classify_complete_graph(4, {2, 2, 2, 1});
  CHECK(c.generators.members.size() == 4);

  CHECK_THROWS(classify_complete_graph(1, {1}));
}

TEST_CASE("complete graph classification equals the generator enumeration") {
  for (int n = 2; n <= 4; ++n) {
    CapVector c(n, 1);
    for (;;) {
      auto cls = classify_complete_graph(n, c);
      auto gs = top_bounded_generators(complete(n), c);
      CHECK(cls.generators.members == gs.members);
      int i = 0;
      while (i < n && c[i] == 3) c[i++] = 1;
      if (i == n) break;
      ++c[i];
    }
  }
}

TEST_CASE("segre gorenstein rule") {
  CHECK(segre_gorenstein({1, 5, 5, 1}));
  CHECK_FALSE(segre_gorenstein({3, 5}));
  CHECK(segre_gorenstein({1}));
  CHECK(segre_gorenstein({1, 1, 1}));
  CHECK_THROWS(segre_gorenstein({}));
}

TEST_CASE("universal gorenstein graphs") {
  CHECK(gorenstein_universal(
      disjoint_union(complete(2), disjoint_union(complete(3), complete(3)))));
  CHECK_FALSE(gorenstein_universal(disjoint_union(complete(3), complete(4))));
  CHECK_FALSE(gorenstein_universal(path(3)));
  CHECK(gorenstein_universal(complete(5)));
  CHECK_THROWS(gorenstein_universal(Graph::from_edges(3, {{0, 1}})));
}

TEST_CASE("nocomp witness construction") {
  SUBCASE("P3") {
    auto w = nocomp_witness(path(3));
    CHECK(w.pair == std::pair<int, int>{0, 2});
    CHECK(w.A == std::vector<int>{0, 2});
    CHECK(w.B == std::vector<int>{1});
    CHECK(w.cap == CapVector{4, 4, 4});
    CHECK(w.predicted.d == 4);
    CHECK(w.predicted.caps == std::vector<int>{4, 4});
  }
  SUBCASE("star K_{1,3}") {
    auto w = nocomp_witness(star(3));
    CHECK(w.A == std::vector<int>{0, 1, 2});
    CHECK(w.B == std::vector<int>{3});
    CHECK(w.cap == CapVector{4, 4, 4, 6});
    CHECK(w.predicted.d == 6);
    CHECK(w.predicted.caps == std::vector<int>{4, 4, 4});
  }
  SUBCASE("C4") {
    auto w = nocomp_witness(cycle(4));
    CHECK(w.A == std::vector<int>{0, 2});
    CHECK(w.cap == CapVector{6, 4, 6, 4});
    CHECK(w.predicted.d == 8);
    CHECK(w.predicted.caps == std::vector<int>{6, 6});
  }
  SUBCASE("complete graphs rejected") {
    CHECK_THROWS(nocomp_witness(complete(4)));
    CHECK_THROWS(nocomp_witness(disjoint_union(complete(2), complete(3))));
  }
  SUBCASE("claim 1 identity and shifted Veronese generators on P3") {
    auto w = nocomp_witness(path(3));
    long long capsum = std::accumulate(w.cap.begin(), w.cap.end(), 0LL);
    CHECK(2 * delta(path(3), w.cap) == capsum - 2 * (long long)w.A.size());
    auto gs = top_bounded_generators(path(3), w.cap);
    std::vector<ExponentVector> expected;
    for (const auto& q : veronese_generators(w.predicted).members) {
      ExponentVector v = w.fixed_part;
      for (std::size_t i = 0; i < w.A.size(); ++i) v[w.A[i]] += q[i];
      expected.push_back(v);
    }
    std::sort(expected.begin(), expected.end());
    CHECK(gs.members == expected);
  }
}

TEST_CASE("multipartite minus matching classification") {
  SUBCASE("paper example: K_{3,2} minus one edge, beta(ii)") {
    Graph g = Graph::from_edges(5, {{0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    MultipartiteSpec spec{{{0, 1, 2}, {3, 4}}, {{0, 3}}};
    auto mc = classify_multipartite_minus_matching(g, spec, {4, 6, 6, 4, 6});
    CHECK(mc.kind == MultipartiteCase::beta_ii);
    CHECK(mc.part_index == 0);
    CHECK(mc.ell == std::vector<long long>{16, 10});
    REQUIRE(mc.spec.has_value());
    CHECK(mc.spec->d == 10);
    CHECK(mc.spec->caps == std::vector<int>{4, 6, 6});
  }
  SUBCASE("K_{2,2} with unit caps is beta(i)") {
    MultipartiteSpec spec{{{0, 1}, {2, 3}}, {}};
    Graph g = reconstruct_multipartite(4, spec);
    auto mc = classify_multipartite_minus_matching(g, spec, {1, 1, 1, 1});
    CHECK(mc.kind == MultipartiteCase::beta_i);
  }
  SUBCASE("triangle minus an edge is alpha") {
    MultipartiteSpec spec{{{0}, {1}, {2}}, {{0, 1}}};
    Graph g = reconstruct_multipartite(3, spec);
    auto mc = classify_multipartite_minus_matching(g, spec, {3, 3, 1});
    CHECK(mc.kind == MultipartiteCase::alpha);
    CHECK(mc.witness_edge == Edge{0, 1});
    REQUIRE(mc.spec.has_value());
    CHECK(mc.spec->d == 1);
    CHECK(mc.spec->caps == std::vector<int>{1, 1});
  }
  SUBCASE("spec must reconstruct the graph") {
    MultipartiteSpec spec{{{0, 1}, {2}}, {}};
    CHECK_THROWS(classify_multipartite_minus_matching(path(3), spec, {1, 1, 1}));
  }
}

TEST_CASE("veronese isomorphism of the multipartite classification") {
  // The generator set of B(c,G) is the predicted Veronese set shifted by the
  // fixed part, for both produced cases.
  auto check_iso = [](const Graph& g, const MultipartiteSpec& spec, const CapVector& c) {
    auto mc = classify_multipartite_minus_matching(g, spec, c);
    REQUIRE(mc.spec.has_value());
    std::vector<ExponentVector> expected;
    for (const auto& q : veronese_generators(*mc.spec).members) {
      ExponentVector v = mc.fixed;
      for (std::size_t i = 0; i < mc.embedding.size(); ++i) v[mc.embedding[i]] += q[i];
      expected.push_back(v);
    }
    std::sort(expected.begin(), expected.end());
    CHECK(top_bounded_generators(g, c).members == expected);
  };
  Graph k32m = Graph::from_edges(5, {{0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  check_iso(k32m, {{{0, 1, 2}, {3, 4}}, {{0, 3}}}, {4, 6, 6, 4, 6});
  check_iso(reconstruct_multipartite(3, {{{0}, {1}, {2}}, {{0, 1}}}),
            {{{0}, {1}, {2}}, {{0, 1}}}, {3, 3, 1});
}

namespace {

Graph tree_case_iii_example() {
  auto e = path(7).edges();
  e.push_back({3, 7});
  return Graph::from_edges(8, e);
}

Graph tree_case_iv_example() {
  auto e = path(7).edges();
  e.push_back({3, 7});
  e.push_back({7, 8});
  e.push_back({8, 9});
  return Graph::from_edges(10, e);
}

Graph tree_case_v_example() {
  return Graph::from_edges(6, {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
}

Graph tree_case_vi_example() {
  return Graph::from_edges(12, {{0, 1},
                                {1, 2},
                                {2, 3},
                                {3, 4},
                                {5, 6},
                                {6, 7},
                                {7, 8},
                                {8, 9},
                                {10, 11},
                                {1, 11},
                                {6, 11}});
}

Graph tree_case_vii_example() {
  return Graph::from_edges(
      10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {5, 9}, {1, 9}, {6, 9}, {6, 7}, {7, 8}});
}

}  // namespace

TEST_CASE("tree classification cases") {
  CHECK(classify_tree_unit_caps(path(4)).kind == TreeCase::match_big);
  CHECK(classify_tree_unit_caps(path(5)).kind == TreeCase::match_big);

  CHECK(classify_tree_unit_caps(star(3)).kind == TreeCase::i);

  Graph broom = Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}});
  CHECK(classify_tree_unit_caps(broom).kind == TreeCase::ii);

  CHECK(classify_tree_unit_caps(tree_case_iii_example()).kind == TreeCase::iii);
  CHECK(classify_tree_unit_caps(tree_case_iv_example()).kind == TreeCase::iv);
  CHECK(classify_tree_unit_caps(tree_case_v_example()).kind == TreeCase::v);
  CHECK(classify_tree_unit_caps(tree_case_vi_example()).kind == TreeCase::vi);
  CHECK(classify_tree_unit_caps(tree_case_vii_example()).kind == TreeCase::vii);

  auto cat = classify_tree_unit_caps([] {
    auto e = path(7).edges();
    e.push_back({1, 7});
    return Graph::from_edges(8, e);
  }());
  CHECK(cat.kind == TreeCase::viii);
  CHECK_FALSE(cat.gorenstein);

  CHECK_THROWS(classify_tree_unit_caps(cycle(4)));
  CHECK_THROWS(classify_tree_unit_caps(star(4)));  // match < (n-2)/2
}

TEST_CASE("tree verdicts agree with the oracle") {
  for (const Graph& t :
       {tree_case_iii_example(), tree_case_v_example(), tree_case_vii_example()}) {
    CapVector ones(t.n(), 1);
    auto cls = classify_tree_unit_caps(t);
    auto orc = gorenstein_oracle(top_bounded_generators(t, ones));
    CHECK(cls.gorenstein == orc.gorenstein);
  }
}

TEST_CASE("gorenstein dispatcher") {
  auto a = gorenstein(path(3), {1, 1, 1}, Method::both);
  CHECK(a.gorenstein);
  CHECK(a.method == Method::both);

  auto b = gorenstein(path(3), {3, 3, 3}, Method::both);
  CHECK_FALSE(b.gorenstein);
  CHECK(b.hvector == std::vector<long long>{1, 2});

  auto c = gorenstein(disjoint_union(complete(2), complete(2)), {1, 1, 1, 1},
                      Method::both);
  CHECK(c.gorenstein);
  CHECK(c.case_label == "polynomial_ring");

  CHECK_THROWS(gorenstein(Graph::from_edges(2, {}), {1, 1}, Method::both));
}

TEST_CASE("dispatcher routes agree on a mixed small sweep") {
  std::vector<Graph> graphs{path(3),  path(4),      cycle(4),
                            star(3),  complete(4),  disjoint_union(path(3), complete(2)),
                            cycle(5), disjoint_union(complete(3), complete(3))};
  for (const auto& g : graphs) {
    CapVector c(g.n(), 1);
    for (;;) {
      CHECK_NOTHROW(gorenstein(g, c, Method::both));
      int i = 0;
      while (i < g.n() && c[i] == 2) c[i++] = 1;
      if (i == g.n()) break;
      ++c[i];
    }
  }
}
