#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "coalition/canonical.hpp"
#include "coalition/chains.hpp"
#include "coalition/coalition_graph.hpp"
#include "coalition/domination.hpp"

using namespace coalition;

namespace {

LsccValue finite(int k) { return {LsccValue::Kind::kFinite, k, false}; }
LsccValue infinite() { return {LsccValue::Kind::kInfinite, 0, false}; }

}  // namespace

TEST(ScChain, FourCycleTerminates) {
  const ChainResult r = sc_chain(cycle_graph(4));
  ASSERT_EQ(r.sequence.size(), 3u);
  EXPECT_TRUE(are_isomorphic(r.sequence[0], cycle_graph(4)));
  EXPECT_TRUE(are_isomorphic(r.sequence[1], complete_graph(4)));
  EXPECT_TRUE(are_isomorphic(r.sequence[2], empty_graph(4)));
  ASSERT_TRUE(std::holds_alternative<TerminatedNonSp>(r.outcome));
  EXPECT_EQ(std::get<TerminatedNonSp>(r.outcome).last_index, 2);
  EXPECT_EQ(l_scc(r), finite(2));
}

TEST(ScChain, FiveCycleIsFixed) {
  const ChainResult r = sc_chain(cycle_graph(5));
  ASSERT_EQ(r.sequence.size(), 2u);
  EXPECT_TRUE(are_isomorphic(r.sequence[1], cycle_graph(5)));
  ASSERT_TRUE(std::holds_alternative<Cycle>(r.outcome));
  EXPECT_EQ(std::get<Cycle>(r.outcome).entry_index, 0);
  EXPECT_EQ(std::get<Cycle>(r.outcome).period, 1);
  EXPECT_EQ(l_scc(r), finite(0));
}

TEST(ScChain, PathAlternatesThroughK1UnionK2) {
  const ChainResult r = sc_chain(path_graph(3));
  ASSERT_TRUE(std::holds_alternative<Cycle>(r.outcome));
  EXPECT_EQ(std::get<Cycle>(r.outcome).entry_index, 0);
  EXPECT_EQ(std::get<Cycle>(r.outcome).period, 2);
  EXPECT_TRUE(are_isomorphic(r.sequence[1], build_named("union(K(1),K(2))")));
  EXPECT_EQ(l_scc(r), infinite());
  EXPECT_EQ(l_scc(r).to_string(), "inf");
}

TEST(ScChain, SmallExamples) {
  EXPECT_EQ(l_scc(complete_graph(2)), infinite());
  EXPECT_EQ(l_scc(build_named("union(K(1),K(5))")), finite(1));
  EXPECT_EQ(l_scc(complete_graph(4)), finite(1));  // K4 → K̄4
  const LsccValue c7 = l_scc(cycle_graph(7));
  EXPECT_EQ(c7.kind, LsccValue::Kind::kFinite);
  EXPECT_EQ(c7.value, 0);
  EXPECT_TRUE(c7.start_not_sp);
}

TEST(ScChain, StepCapAndErrors) {
  const ChainResult r = sc_chain(path_graph(3), 1);
  ASSERT_TRUE(std::holds_alternative<StepCap>(r.outcome));
  EXPECT_EQ(std::get<StepCap>(r.outcome).cap, 1);
  EXPECT_EQ(l_scc(r).kind, LsccValue::Kind::kUnknown);
  EXPECT_EQ(l_scc(r).to_string(), "unknown(1)");
  EXPECT_THROW(sc_chain(cycle_graph(4), 0), GraphError);
  EXPECT_THROW(sc_chain(cycle_graph(kMaxCanonicalOrder + 1)), GraphError);
}

TEST(ScChain, InvariantsHoldThroughOrderSeven) {
  std::mt19937_64 rng(99);
  for (int n = 1; n <= kMaxEnumerationOrder; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      const ChainResult r = sc_chain(g);
      ASSERT_FALSE(std::holds_alternative<StepCap>(r.outcome)) << emit_graph6(g);
      ASSERT_EQ(r.codes.size(), r.sequence.size());
      for (std::size_t i = 0; i + 1 < r.sequence.size(); ++i) {
        ASSERT_TRUE(is_sp_graph(r.sequence[i]));
        ASSERT_EQ(r.sequence[i + 1], sc_graph(r.sequence[i]));
        ASSERT_EQ(r.codes[i], canonical_form(r.sequence[i]));
      }
      if (const auto* t = std::get_if<TerminatedNonSp>(&r.outcome)) {
        ASSERT_EQ(t->last_index + 1, static_cast<int>(r.sequence.size()));
        ASSERT_FALSE(is_sp_graph(r.sequence.back()));
      }
      if (const auto* c = std::get_if<Cycle>(&r.outcome)) {
        ASSERT_EQ(r.codes[c->entry_index + c->period], r.codes[c->entry_index]);
        for (int i = 0; i < c->entry_index + c->period; ++i)
          for (int j = i + 1; j < c->entry_index + c->period; ++j) ASSERT_NE(r.codes[i], r.codes[j]);
      }
      // Well-definedness under relabeling.
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      ASSERT_EQ(sc_chain(relabel(g, perm)).codes, r.codes) << emit_graph6(g);
    }
  }
}

TEST(Classify, KnownExamples) {
  EXPECT_EQ(classify_chain(build_named("union(K(1),K(5))")).label, "Thm14(c)");
  EXPECT_EQ(classify_chain(cycle_graph(4)).label, "Lem18(a)");
  EXPECT_EQ(classify_chain(complete_graph(2)).label, "Thm15(a)");
  EXPECT_EQ(classify_chain(path_graph(3)).label, "Thm15(c)");
  EXPECT_EQ(classify_chain(empty_graph(1)).label, "Thm14(a)");
  EXPECT_EQ(classify_chain(build_named("union(K(1),K(2))")).label, "Thm14(d)");
}

TEST(Classify, StarPlusIsolateCaseNeedsOrderAboveThree) {
  // Theorem 15(b): an F1 graph of order 5 whose chain is G → K1 ∪ K(1,3).
  for (int n = 4; n <= kMaxEnumerationOrder; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      const auto s = degree_stats(g);
      if (s.min_degree != 1 || !is_sp_graph(g)) continue;
      const ChainResult r = sc_chain(g);
      if (r.sequence.size() == 2 &&
          are_isomorphic(r.sequence[1], disjoint_union(empty_graph(1), complete_bipartite(1, n - 2)))) {
        const auto labels = matching_templates(g);
        EXPECT_NE(std::find(labels.begin(), labels.end(), "Thm15(b)"), labels.end()) << emit_graph6(g);
      }
    }
  }
}

TEST(Classify, Errors) {
  try {
    classify_chain(complete_bipartite(3, 3));
    FAIL();
  } catch (const ClassificationError& e) {
    EXPECT_EQ(e.kind(), ClassificationError::Kind::kOutOfRange);
  }
  try {
    classify_chain(cycle_graph(7));
    FAIL();
  } catch (const ClassificationError& e) {
    EXPECT_EQ(e.kind(), ClassificationError::Kind::kNotSp);
  }
}

TEST(AuxiliaryGraphs, Shapes) {
  const Graph m1 = m1_graph(), m2 = m2_graph();
  EXPECT_EQ(m1.order(), 5);
  EXPECT_EQ(m1.edge_count(), 6);
  EXPECT_EQ(m2.edge_count(), 7);
  EXPECT_TRUE(m2.adjacent(2, 3));
  const Graph h = h22_one_missing(2, 2);
  EXPECT_EQ(h.order(), 7);
  EXPECT_FALSE(h.adjacent(0, 5));  // first r vertex misses x'
  EXPECT_TRUE(h.adjacent(0, 6));
}

TEST(Theorem17, FullVertexMinDegreeTwoGivesLengthOne) {
  DegreeFilter filter;
  filter.min_degree = 2;
  filter.full_vertices_at_least = 1;
  for (int n = 3; n <= kMaxEnumerationOrder; ++n) {
    for (const Graph& g : enumerate_graphs(n, filter)) {
      if (!is_sp_graph(g)) continue;
      EXPECT_EQ(l_scc(g), finite(1)) << emit_graph6(g);
    }
  }
}

TEST(Theorem20, LengthIsInfiniteOrAtMostFive) {
  DegreeFilter filter;
  filter.min_degree = 2;
  filter.full_vertices = 0;
  for (int n = 4; n <= kMaxEnumerationOrder; ++n) {
    for (const Graph& g : enumerate_graphs(n, filter)) {
      if (!is_sp_graph(g)) continue;
      const LsccValue v = l_scc(g);
      EXPECT_TRUE(v.kind == LsccValue::Kind::kInfinite || (v.kind == LsccValue::Kind::kFinite && v.value <= 5))
          << emit_graph6(g) << ' ' << v.to_string();
    }
  }
}
