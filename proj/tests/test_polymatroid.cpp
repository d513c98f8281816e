#include <doctest.h>

#include "bpow/polymatroid.hpp"
#include "test_util.hpp"

using namespace bpow;
using namespace bpow::testutil;

TEST_CASE("exchange property") {
  GeneratorSet ok{{{1, 1, 0}, {0, 1, 1}}, 2};
  CHECK_FALSE(check_exchange(ok).has_value());

  GeneratorSet bad{{{2, 0, 0}, {0, 1, 1}}, 2};
  auto cex = check_exchange(bad);
  REQUIRE(cex.has_value());
  // Members are scanned in sorted order, so the failing pair is reported
  // with u = (0,1,1) first.
  CHECK(cex->u == ExponentVector{0, 1, 1});
  CHECK(cex->v == ExponentVector{2, 0, 0});
  CHECK(cex->index == 1);

  CHECK_FALSE(check_exchange(top_bounded_generators(path(3), {3, 3, 3})).has_value());
}

TEST_CASE("dual matroidal") {
  GeneratorSet b{{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}, 2};
  auto d = dual_matroidal(b);
  CHECK(d.members == std::vector<ExponentVector>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  CHECK(dual_matroidal(GeneratorSet{{{1, 1, 0, 0}}, 2}).members ==
        std::vector<ExponentVector>{{0, 0, 1, 1}});
  CHECK_THROWS(dual_matroidal(GeneratorSet{{{2, 0}}, 2}));

  auto c4 = top_bounded_generators(cycle(4), {1, 1, 1, 1});
  auto twice = dual_matroidal(dual_matroidal(c4));
  CHECK(twice.members == c4.members);
}

// The full n <= 5 sweep is an acceptance criterion; keep the unit run small.
TEST_CASE("generator sets of small graphs are polymatroid bases") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& g : connected_graphs(n)) {
      CapVector c(n, 1);
      for (;;) {
        auto gs = top_bounded_generators(g, c);
        CHECK_FALSE(check_exchange(gs).has_value());
        bool squarefree = true;
        for (const auto& a : gs.members)
          for (int x : a)
            if (x > 1) squarefree = false;
        if (squarefree) CHECK_FALSE(check_exchange(dual_matroidal(gs)).has_value());
        int i = 0;
        while (i < n && c[i] == 2) c[i++] = 1;
        if (i == n) break;
        ++c[i];
      }
    }
}
