#include <gtest/gtest.h>

#include "nfree/corpus.hpp"
#include "nfree/counting.hpp"
#include "nfree/errors.hpp"
#include "nfree/params.hpp"
#include "support/oracles.hpp"

namespace nfree {
namespace {

using testing::antichain;
using testing::chain;
using testing::k22;
using testing::two_chains;

TEST(Bounds, K22IsSharpOnBothSides) {
  const BoundsReport b = bounds(k22());
  EXPECT_EQ(b.e_arc, Count(1));
  EXPECT_EQ(b.lower, Count(4));
  EXPECT_EQ(b.dual_lower, Count(4));
  EXPECT_EQ(b.upper_exact, ExactFraction(4));
  EXPECT_EQ(b.upper_floor, Count(4));
  EXPECT_EQ(brute_count(k22()), Count(4));
}

TEST(Bounds, TwoChains) {
  const BoundsReport b = bounds(two_chains());
  EXPECT_EQ(b.e_arc, Count(2));
  EXPECT_EQ(b.lower, Count(4));
  EXPECT_EQ(b.upper_exact, ExactFraction(6));
  EXPECT_EQ(brute_count(two_chains()), Count(6));
}

TEST(Bounds, ChainUpperIsNotIntegral) {
  const BoundsReport b = bounds(chain(3));
  EXPECT_EQ(b.lower, Count(1));
  EXPECT_EQ(b.upper_exact, ExactFraction(3, 2));
  EXPECT_EQ(b.upper_floor, Count(1));
  EXPECT_FALSE(b.separated_lower.has_value());
  EXPECT_EQ(*bounds(chain(3), true).separated_lower, Count(2));
}

TEST(Bounds, RequiresNFree) { EXPECT_THROW(bounds(testing::n_poset()), NotNFreeError); }

TEST(Bounds, DualSwapsLowerBounds) {
  for (const auto& e : random_nfree_corpus(40, 77)) {
    EXPECT_EQ(bounds(dual(e.poset)).lower, bounds(e.poset).dual_lower);
  }
}

TEST(GoodVertex, Examples) {
  EXPECT_EQ(good_vertex_count(k22(), 1), Count(4));
  EXPECT_EQ(good_vertex_count(k22(), 0), Count(24));  // source: vacuous
  // chain of 3: 0^ -> v1 -> v2 -> 1^, the middle vertex v1 has i = o = 1.
  EXPECT_EQ(good_vertex_count(chain(3), 1), Count(3));
  EXPECT_EQ(good_vertex_formula(3, 1, 1), Count(3));
  EXPECT_THROW(good_vertex_count(antichain(11), 0), TooLargeError);
}

TEST(RankAndCanonical, Examples) {
  ArcDiagram path{4, 0, 3, {{0, 1}, {1, 2}, {2, 3}}};
  auto r = rank_and_canonical(path);
  EXPECT_EQ(r.rank, (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ(r.extension, (LinearExtension{0, 1, 2}));

  auto k = rank_and_canonical(arc_diagram(k22()));
  EXPECT_EQ(k.rank, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(k.extension, (LinearExtension{0, 1, 2, 3}));
  EXPECT_TRUE(is_linear_extension(k22(), k.extension));

  const ArcDiagram hs = gen_high_spread(2);
  auto h = rank_and_canonical(hs);
  for (std::size_t v = 0; v < hs.vertex_count; ++v) EXPECT_EQ(h.rank[v], v);
  EXPECT_TRUE(is_linear_extension(line_digraph(hs), h.extension));
}

TEST(ActivityOfExtension, Examples) {
  EXPECT_EQ(activity_of_extension(chain(4), LinearExtension{0, 1, 2, 3}), 1u);
  EXPECT_EQ(activity_of_extension(chain(1), LinearExtension{0}), 0u);
  EXPECT_EQ(activity_of_extension(antichain(4), LinearExtension{3, 1, 0, 2}), 0u);
  const auto trace = activity_trace(arc_diagram(k22()), LinearExtension{0, 1, 2, 3});
  EXPECT_EQ(trace, (std::vector<std::vector<VertexId>>{{1}, {1}, {1}, {}}));
  EXPECT_THROW(activity_of_extension(chain(3), LinearExtension{1, 0, 2}), NotExtensionError);
}

TEST(ExactActivity, Examples) {
  EXPECT_EQ(exact_activity(k22()).activity, 1u);
  EXPECT_EQ(exact_activity(antichain(5)).activity, 0u);
  EXPECT_THROW(exact_activity(antichain(20), 1000), BudgetExceededError);
}

TEST(ExactActivity, HighSpreadFamily) {
  // Frozen from an independent downset-lattice search (min over extensions).
  const std::size_t expected[] = {2, 3, 4, 5};
  for (std::size_t ell = 1; ell <= 4; ++ell) {
    const Poset p = line_digraph(gen_high_spread(ell));
    const auto r = exact_activity(p);
    EXPECT_EQ(r.activity, expected[ell - 1]);
    EXPECT_GE(r.activity, ell);
    EXPECT_EQ(activity_of_extension(p, r.witness), r.activity);
  }
}

TEST(ExactActivity, MatchesMinimumOverAllExtensions) {
  for (const auto& e : random_nfree_corpus(40, 500, 6, 8)) {
    const ArcDiagram d = arc_diagram(e.poset);
    const auto r = exact_activity(e.poset);
    EXPECT_EQ(r.activity, testing::brute_exact_activity(e.poset, d));
    // Witness is the lexicographically smallest optimal extension.
    for (const auto& ext : testing::brute_extensions(e.poset)) {
      if (testing::brute_activity_of(d, ext) == r.activity) {
        EXPECT_EQ(ext, r.witness);
        break;
      }
    }
  }
}

TEST(Spread, Examples) {
  ArcDiagram path{4, 0, 3, {{0, 1}, {1, 2}, {2, 3}}};
  auto s = spread(path);
  EXPECT_EQ(s.exact.value(), 0u);
  EXPECT_EQ(s.upper, 0u);

  // Routes 0 -> 3 directly and 0 -> 1 -> 2 -> 3.
  ArcDiagram diamond{4, 0, 3, {{0, 3}, {0, 1}, {1, 2}, {2, 3}}};
  s = spread(diamond);
  EXPECT_EQ(s.exact.value(), 2u);
  EXPECT_EQ(s.upper, 2u);

  // Frozen from independent path-pair enumeration: 2l - 1.
  for (std::size_t ell = 1; ell <= 4; ++ell) {
    auto h = spread(gen_high_spread(ell));
    EXPECT_EQ(h.exact.value(), 2 * ell - 1);
    EXPECT_GE(h.upper, *h.exact);
  }
}

TEST(Spread, BudgetDegradesToUpper) {
  auto s = spread(gen_high_spread(4), 1);
  EXPECT_FALSE(s.exact.has_value());
  EXPECT_EQ(s.upper, 7u);
}

TEST(Spread, FlagsDisagreementWithLongestMinusShortest) {
  // 0->1->3, 0->2->3 and a chord 1->2. Between 0 and 3 the longest route
  // 0->1->2->3 meets both short routes in an interior vertex, so the
  // enumerated value there is 0 while longest - shortest is 1.
  ArcDiagram d{4, 0, 3, {{0, 1}, {1, 3}, {0, 2}, {2, 3}, {1, 2}}};
  auto s = spread(d);
  EXPECT_EQ(s.exact.value(), 1u);  // from (0,2) and (1,3)
  EXPECT_EQ(s.upper, 1u);
  ASSERT_EQ(s.disagreements.size(), 1u);
  EXPECT_EQ(s.disagreements[0], (std::pair<VertexId, VertexId>{0, 3}));
}

TEST(LemmaBound, Examples) {
  auto k = activity_lemma_bound(k22());
  EXPECT_EQ(k.width, 1u);
  EXPECT_EQ(k.spread, 0u);
  EXPECT_EQ(k.bound, 2u);
  EXPECT_EQ(activity_lemma_bound(chain(4)).bound, 2u);
  const Poset h = line_digraph(gen_high_spread(3));
  auto hb = activity_lemma_bound(h);
  EXPECT_EQ(hb.bound, 7u);
  EXPECT_GE(hb.bound, exact_activity(h).activity);
}

TEST(LemmaChain, CorpusAndFamilies) {
  auto check = [](const Poset& p) {
    const ArcDiagram d = arc_diagram(p);
    const auto lt = rank_and_canonical(d).extension;
    const auto lemma = activity_lemma_bound(p);
    const std::size_t alpha_lt = activity_of_extension(p, lt);
    EXPECT_LE(exact_activity(p).activity, alpha_lt);
    if (lemma.spread_exact) EXPECT_LE(alpha_lt, lemma.bound);
  };
  for (const auto& e : random_nfree_corpus(80, 4242)) check(e.poset);
  for (std::size_t ell = 1; ell <= 4; ++ell) check(line_digraph(gen_high_spread(ell)));
  const std::vector<std::size_t> blocks{3, 1, 2, 4};
  check(gen_weak_order(blocks));
}

}  // namespace
}  // namespace nfree
