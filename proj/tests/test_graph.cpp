#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "coalition/canonical.hpp"
#include "coalition/coalition_graph.hpp"
#include "coalition/graph.hpp"
#include "oracles.hpp"

using namespace coalition;

namespace {

Graph random_graph(int n, std::mt19937_64& rng, double p = 0.5) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

std::vector<int> random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d;
  for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST(Graph6, DecodesStandardExamples) {
  EXPECT_EQ(parse_graph6("C~"), complete_graph(4));
  EXPECT_EQ(parse_graph6("C?"), empty_graph(4));
  EXPECT_EQ(parse_graph6("@"), empty_graph(1));
}

TEST(Graph6, EncodesStandardExamples) {
  EXPECT_EQ(emit_graph6(empty_graph(1)), "@");
  EXPECT_EQ(emit_graph6(empty_graph(2)), "A?");
  EXPECT_EQ(emit_graph6(complete_graph(4)), "C~");
}

TEST(Graph6, AgreesWithIndependentEncoder) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const Graph g = random_graph(1 + i % kMaxOrder, rng, (i % 7) / 6.0);
    EXPECT_EQ(emit_graph6(g), oracle::graph6(oracle::matrix(g)));
  }
}

TEST(Graph6, RoundTripsAllOrdersUpToMax) {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= kMaxOrder; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      const Graph g = random_graph(n, rng);
      const std::string s = emit_graph6(g);
      EXPECT_EQ(parse_graph6(s), g);
      EXPECT_EQ(emit_graph6(parse_graph6(s)), s);
    }
  }
}

TEST(Graph6, RejectsMalformedInput) {
  auto kind_of = [](const std::string& s) {
    try {
      parse_graph6(s);
    } catch (const Graph6Error& e) {
      return static_cast<int>(e.kind());
    }
    return -1;
  };
  EXPECT_EQ(kind_of(""), static_cast<int>(Graph6Error::Kind::kEmpty));
  EXPECT_EQ(kind_of("!"), static_cast<int>(Graph6Error::Kind::kByteOutOfRange));
  EXPECT_EQ(kind_of("C"), static_cast<int>(Graph6Error::Kind::kTruncated));
  EXPECT_EQ(kind_of("C~~"), static_cast<int>(Graph6Error::Kind::kTrailingData));
  EXPECT_EQ(kind_of("B@"), static_cast<int>(Graph6Error::Kind::kPaddingBits));
  EXPECT_EQ(kind_of(std::string(1, static_cast<char>(63 + 40))), static_cast<int>(Graph6Error::Kind::kOrderOutOfRange));
}

TEST(BuildNamed, KnownExamples) {
  const Graph a = build_named("join(Kbar(2), K(3))");
  EXPECT_EQ(a.order(), 5);
  EXPECT_EQ(degree_sequence(a), (std::vector<int>{3, 3, 4, 4, 4}));

  const Graph b = build_named("union(K(1), K(5))");
  EXPECT_EQ(b.order(), 6);
  EXPECT_EQ(b.degree(0), 0);
  EXPECT_EQ(b.edge_count(), 10);

  const Graph c = build_named("corona_k3_k1");
  EXPECT_EQ(c.order(), 6);
  EXPECT_EQ(c.edge_count(), 6);
  EXPECT_EQ(degree_sequence(c), (std::vector<int>{1, 1, 1, 3, 3, 3}));
}

TEST(BuildNamed, StockGraphs) {
  EXPECT_EQ(build_named("C(5)"), cycle_graph(5));
  EXPECT_EQ(build_named("P(3)").edge_count(), 2);
  EXPECT_EQ(build_named("Kbip(2,3)").edge_count(), 6);
  EXPECT_EQ(build_named(" K ( 4 ) "), complete_graph(4));
}

TEST(BuildNamed, RejectsBadExpressions) {
  EXPECT_THROW(build_named("C(2)"), GraphError);
  EXPECT_THROW(build_named("K(0)"), GraphError);
  EXPECT_THROW(build_named("K(-1)"), GraphError);
  EXPECT_THROW(build_named("Q(3)"), GraphError);
  EXPECT_THROW(build_named("union(K(1))"), GraphError);
  EXPECT_THROW(build_named("K(3)x"), GraphError);
  EXPECT_THROW(build_named("K(40)"), GraphError);
}

TEST(Canonical, KnownExamples) {
  const Graph c4a = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const Graph c4b = Graph::from_edges(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
  EXPECT_EQ(canonical_form(c4a), canonical_form(c4b));
  EXPECT_NE(canonical_form(path_graph(4)), canonical_form(complete_bipartite(1, 3)));
  EXPECT_EQ(canonical_form(sc_graph(path_graph(4))), canonical_form(cycle_graph(4)));

  std::vector<int> perm = {3, 1, 4, 0, 2};
  EXPECT_TRUE(are_isomorphic(cycle_graph(5), relabel(cycle_graph(5), perm)));
  EXPECT_FALSE(are_isomorphic(complete_graph(4), cycle_graph(4)));
  EXPECT_TRUE(are_isomorphic(sc_graph(cycle_graph(4)), complete_graph(4)));
  EXPECT_THROW(canonical_form(empty_graph(kMaxCanonicalOrder + 1)), GraphError);
}

TEST(Canonical, CodeDecodesToIsomorphicGraph) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const Graph g = random_graph(1 + i % 10, rng);
    const CanonicalCode c = canonical_form(g);
    EXPECT_EQ(c.order(), g.order());
    EXPECT_TRUE(oracle::isomorphic(oracle::matrix(c.graph()), oracle::matrix(g))) << emit_graph6(g);
  }
}

TEST(Canonical, RelabelingInvariance) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 10000; ++i) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Graph g = random_graph(n, rng, 0.2 + 0.6 * (i % 5) / 4.0);
    const auto perm = random_perm(n, rng);
    ASSERT_EQ(canonical_form(g), canonical_form(relabel(g, perm))) << emit_graph6(g);
  }
}

TEST(Canonical, InvarianceOnRegularGraphs) {
  // Vertex-transitive inputs exercise the refinement's tie breaking hardest.
  std::mt19937_64 rng(23);
  const std::vector<Graph> hard = {cycle_graph(12), complete_bipartite(5, 5), build_named("union(C(5),C(5))"),
                                   build_named("union(K(3),union(K(3),K(3)))"), complement(cycle_graph(11)),
                                   build_named("join(C(5),C(5))")};
  for (const Graph& g : hard) {
    for (int i = 0; i < 200; ++i) {
      const auto perm = random_perm(g.order(), rng);
      ASSERT_EQ(canonical_form(g), canonical_form(relabel(g, perm))) << describe(g);
    }
  }
  EXPECT_FALSE(are_isomorphic(cycle_graph(12), build_named("union(C(6),C(6))")));
  EXPECT_FALSE(are_isomorphic(cycle_graph(10), build_named("union(C(5),C(5))")));
}

TEST(Canonical, AgreesWithBruteForceIsomorphism) {
  std::mt19937_64 rng(29);
  int agree_true = 0;
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph g = random_graph(n, rng);
    // Half the pairs are relabelings with one edge possibly toggled, so both
    // answers occur often.
    Graph h = relabel(g, random_perm(n, rng));
    if (n >= 2 && rng() % 2) {
      const int u = static_cast<int>(rng() % n), v = static_cast<int>((u + 1 + rng() % (n - 1)) % n);
      if (h.adjacent(u, v)) h.remove_edge(u, v); else h.add_edge(u, v);
    }
    const bool expected = oracle::isomorphic(oracle::matrix(g), oracle::matrix(h));
    ASSERT_EQ(are_isomorphic(g, h), expected) << emit_graph6(g) << " vs " << emit_graph6(h);
    agree_true += expected;
  }
  EXPECT_GT(agree_true, 100);
  EXPECT_LT(agree_true, 900);
}

TEST(Enumeration, MatchesBurnsideCensus) {
  for (int n = 1; n <= kMaxEnumerationOrder; ++n) {
    EXPECT_EQ(enumerate_graphs(n).size(), oracle::burnside_count(n)) << "n=" << n;
  }
  EXPECT_EQ(enumerate_graphs(1).size(), 1u);
  EXPECT_EQ(enumerate_graphs(4).size(), 11u);
  EXPECT_EQ(enumerate_graphs(7).size(), 1044u);
}

TEST(Enumeration, MatchesNaiveMatrixSweep) {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::uint64_t> naive;
    for (const auto& m : oracle::naive_enumeration(n)) naive.insert(oracle::brute_canonical(m));
    std::set<std::uint64_t> ours;
    for (const Graph& g : enumerate_graphs(n)) ours.insert(oracle::brute_canonical(oracle::matrix(g)));
    EXPECT_EQ(ours, naive) << "n=" << n;
    EXPECT_EQ(ours.size(), enumerate_graphs(n).size()) << "duplicate classes at n=" << n;
  }
}

TEST(Enumeration, FiltersAndRoundTrips) {
  for (int n = 1; n <= kMaxEnumerationOrder; ++n) {
    DegreeFilter two;
    two.min_degree = 2;
    two.full_vertices = 0;
    const auto some = enumerate_graphs(n, two);
    for (const Graph& g : some) {
      const auto s = degree_stats(g);
      EXPECT_EQ(s.min_degree, 2);
      EXPECT_TRUE(s.full_vertices.empty());
    }
    std::size_t direct = 0;
    for (const Graph& g : enumerate_graphs(n)) {
      direct += two(g);
      ASSERT_EQ(parse_graph6(emit_graph6(g)), g);
    }
    EXPECT_EQ(some.size(), direct);
  }
  EXPECT_THROW(enumerate_graphs(kMaxEnumerationOrder + 1), GraphError);
}
