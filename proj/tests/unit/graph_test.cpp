#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "generators.hpp"
#include "hampower/calculus.hpp"
#include "hampower/errors.hpp"
#include "hampower/graph.hpp"
#include "hampower/oracle.hpp"

namespace hampower {
namespace {

std::uint64_t brute_cliques(const Graph& g, int s) {
  const int n = g.vertex_count();
  std::uint64_t count = 0;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(pick.size()) == s) {
      ++count;
      return;
    }
    for (int v = from; v < n; ++v) {
      bool ok = true;
      for (int u : pick) ok = ok && g.has_edge(u, v);
      if (!ok) continue;
      pick.push_back(v);
      self(self, v + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return count;
}

TEST(Graph, RejectsLoopsDuplicatesAndRange) {
  std::vector<Edge> loop{{1, 1}};
  std::vector<Edge> dup{{0, 1}, {1, 0}};
  std::vector<Edge> range{{0, 3}};
  EXPECT_THROW(Graph::from_edges(3, loop), DomainError);
  EXPECT_THROW(Graph::from_edges(3, dup), DomainError);
  EXPECT_THROW(Graph::from_edges(3, range), DomainError);
  EXPECT_EQ(Graph::from_edge_union(3, dup).edge_count(), 1);
}

TEST(Graph, EdgeListRoundTrip) {
  testing::Gen gen(21);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = gen.graph(gen.uniform(1, 30), 0.3);
    std::stringstream ss;
    write_edge_list(ss, g);
    Graph h = read_edge_list(ss);
    EXPECT_EQ(g.edges(), h.edges());
    EXPECT_EQ(g.vertex_count(), h.vertex_count());
  }
  std::stringstream bad("3 2\n0 1\n1 0\n");
  EXPECT_THROW(read_edge_list(bad), DomainError);
  std::stringstream loop("3 1\n2 2\n");
  EXPECT_THROW(read_edge_list(loop), DomainError);
}

TEST(PowerGraphs, EdgeCounts) {
  EXPECT_EQ(power_path(12, 3).edge_count(), 30);
  for (int n = 1; n <= 30; ++n) EXPECT_EQ(power_path(n, 1).edge_count(), n - 1);
  for (int m = 1; m <= 8; ++m) EXPECT_EQ(power_path(m + 1, m).edges(), complete_graph(m + 1).edges());
  for (int m = 1; m <= 5; ++m) {
    for (int n = m + 1; n <= 30; ++n) EXPECT_EQ(power_path(n, m).edge_count(), m * n - m * (m + 1) / 2);
    for (int n = 2 * m + 1; n <= 30; ++n) EXPECT_EQ(power_cycle(n, m).edge_count(), m * n);
  }
  EXPECT_THROW(power_cycle(6, 3), DomainError);
}

TEST(Braid, Examples) {
  Graph b = braid({3, 2, 2});
  EXPECT_EQ(b.vertex_count(), 6);
  EXPECT_EQ(b.edge_count(), 9);
  EXPECT_EQ(braid({5, 3, 1}).edges(), complete_graph(5).edges());
  Graph c = braid({4, 1, 3});
  EXPECT_EQ(c.vertex_count(), 12);
  EXPECT_EQ(c.edge_count(), 20);
  EXPECT_THROW(braid({3, 4, 2}), DomainError);
}

TEST(Braid, EdgeCountFormula) {
  for (int ell = 2; ell <= 6; ++ell) {
    for (int r = 0; r <= ell; ++r) {
      for (int t = 1; t <= 5; ++t) {
        BraidSpec spec{ell, r, t};
        const std::int64_t expected = t * ell * (ell - 1) / 2 + (t - 1) * r * (r + 1) / 2;
        EXPECT_EQ(braid(spec).edge_count(), expected);
        EXPECT_EQ(braid_edge_count(spec), expected);
      }
    }
  }
}

TEST(Braid, BridgeStructure) {
  // the a-th of the last r vertices of one clique sees the first a vertices of the next
  const int ell = 5, r = 3;
  Graph b = braid({ell, r, 2});
  for (int a = 1; a <= r; ++a) {
    const int v = ell - r + a - 1;
    for (int c = 1; c <= ell; ++c) EXPECT_EQ(b.has_edge(v, ell + c - 1), c <= a) << a << "," << c;
  }
  for (int u = 0; u < ell - r; ++u) {
    for (int c = 0; c < ell; ++c) EXPECT_FALSE(b.has_edge(u, ell + c));
  }
}

TEST(BlowUp, Examples) {
  for (int ell = 1; ell <= 5; ++ell) {
    Graph g = blow_up(complete_graph(2), ell);
    EXPECT_EQ(g.edge_count(), ell * ell);
    EXPECT_EQ(g.edges(), complete_multipartite(2, ell).edges());
  }
  Graph p = power_path(7, 2);
  EXPECT_EQ(blow_up(p, 1).edges(), p.edges());
  EXPECT_EQ(blow_up(power_path(6, 2), 3).edge_count(), 81);
}

TEST(BlowUp, SizesAndIndependentClasses) {
  testing::Gen gen(22);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = gen.graph(gen.uniform(1, 8), 0.5);
    const int ell = gen.uniform(1, 4);
    Graph b = blow_up(g, ell);
    EXPECT_EQ(b.vertex_count(), ell * g.vertex_count());
    EXPECT_EQ(b.edge_count(), ell * ell * g.edge_count());
  }
}

TEST(Decomposition, NamedInstances) {
  Decomposition d = decompose_power_path(2, 3, 2, 2);
  EXPECT_TRUE(d.verified);
  EXPECT_EQ(d.n, 18);
  EXPECT_EQ(d.m, 8);
  EXPECT_EQ(d.blowup_edges.size(), 81u);
  ASSERT_EQ(d.braid_edges.size(), 3u);
  for (const auto& b : d.braid_edges) EXPECT_EQ(b.size(), 9u);
  EXPECT_EQ(power_path(18, 8).edge_count(), 108);
  EXPECT_TRUE(decompose_power_path(1, 2, 1, 2).verified);
  Decomposition t1 = decompose_power_path(2, 3, 2, 1);
  EXPECT_TRUE(t1.verified);
  for (const auto& b : t1.braid_edges) EXPECT_EQ(b.size(), 3u);
  EXPECT_THROW(decompose_power_path(2, 3, 4, 2), DomainError);
  EXPECT_THROW(decompose_power_path(2, 3, 0, 2), DomainError);
}

TEST(Decomposition, PartitionExactlyWhenRIsNearEll) {
  for (int k = 1; k <= 3; ++k) {
    for (int ell = 1; ell <= 4; ++ell) {
      for (int r = 1; r <= ell; ++r) {
        for (int t = 1; t <= 4; ++t) {
          Decomposition d = decompose_power_path(k, ell, r, t);
          EXPECT_TRUE(d.disjoint || r <= ell - 2);
          EXPECT_EQ(d.verified, r >= ell - 1) << k << "," << ell << "," << r << "," << t;
          // block pairs at block distance k hold C(ell-r, 2) pairs at distance > m each
          std::int64_t total = static_cast<std::int64_t>(d.blowup_edges.size());
          for (const auto& b : d.braid_edges) total += static_cast<std::int64_t>(b.size());
          const std::int64_t excess = ((k + 1) * t - k) * (ell - r) * (ell - r - 1) / 2;
          EXPECT_TRUE(d.covers);
          EXPECT_EQ(total, power_path(d.n, d.m).edge_count() + excess);
        }
      }
    }
  }
}

TEST(Density, Examples) {
  for (int ell = 2; ell <= 8; ++ell) EXPECT_EQ(max_density(complete_graph(ell)), Rational(ell, 2));
  EXPECT_EQ(max_density(braid({4, 1, 3})), Rational(2));
  EXPECT_EQ(max_density(braid({3, 2, 3})), Rational(15, 8));
  EXPECT_EQ(max_density(braid({3, 2, 2})), Rational(9, 5));
  EXPECT_THROW(max_density(Graph(4)), DomainError);
}

Rational braid_formula(int ell, int r, int t) {
  if (ell >= r * (r + 1)) return Rational(ell, 2);
  return Rational(t * ell * (ell - 1) / 2 + (t - 1) * r * (r + 1) / 2, t * ell - 1);
}

TEST(Density, BraidCaseFormulaAgainstOracle) {
  for (int ell = 2; ell <= 6; ++ell) {
    for (int r = 0; r <= ell; ++r) {
      for (int t = 1; t <= 5; ++t) {
        Graph b = braid({ell, r, t});
        Rational d = max_density(b);
        EXPECT_EQ(d, braid_formula(ell, r, t)) << ell << "," << r << "," << t;
        if (b.vertex_count() <= 14) EXPECT_EQ(d, exhaustive_density(b).density);
      }
    }
  }
}

TEST(Density, BraidDensityIncreasesTowardF) {
  for (int ell = 2; ell <= 6; ++ell) {
    for (int r = 1; r <= ell; ++r) {
      if (ell >= r * (r + 1)) continue;
      for (int k = 1; k <= 3; ++k) {
        const int m = k * ell + r;
        const Rational f = f_value(k, m, Rational(ell));
        Rational prev = -1;
        for (int t = 1; t <= 30; ++t) {
          Rational d = Rational(t * ell * (ell - 1) / 2 + (t - 1) * r * (r + 1) / 2, t * ell - 1);
          EXPECT_GT(d, prev);
          EXPECT_LT(d, f) << ell << "," << r << "," << t << "," << k;
          prev = d;
        }
      }
    }
  }
}

TEST(Density, MaxDensityMatchesExhaustiveOnRandomGraphs) {
  testing::Gen gen(23);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = gen.graph(gen.uniform(2, 14), 0.1 + 0.8 * gen.uniform(0, 100) / 100.0);
    if (g.edge_count() == 0) continue;
    ++checked;
    ASSERT_EQ(max_density(g), exhaustive_density(g).density) << trial;
  }
  EXPECT_GT(checked, 250);
}

TEST(Density, DisjointUnionTakesTheMax) {
  testing::Gen gen(24);
  for (int trial = 0; trial < 50; ++trial) {
    Graph a = gen.graph(gen.uniform(2, 9), 0.5);
    Graph b = gen.graph(gen.uniform(2, 9), 0.5);
    if (a.edge_count() == 0 || b.edge_count() == 0) continue;
    EXPECT_EQ(max_density(disjoint_union(a, b)), std::max(max_density(a), max_density(b)));
  }
  EXPECT_EQ(max_density(disjoint_union(complete_graph(3), complete_graph(4))), Rational(2));
}

TEST(Density, ExceedsIsTheStrictDecision) {
  Graph b = braid({3, 2, 3});
  EXPECT_TRUE(density_exceeds(b, Rational(15, 8) - Rational(1, 1000)));
  EXPECT_FALSE(density_exceeds(b, Rational(15, 8)));
}

TEST(Cliques, Examples) {
  EXPECT_EQ(clique_count(complete_graph(6), 3), 20u);
  EXPECT_EQ(clique_count(power_cycle(9, 2), 3), 9u);
  EXPECT_EQ(clique_count(complete_multipartite(3, 3), 3), 27u);
  EXPECT_EQ(clique_count(complete_graph(6), 1), 6u);
  EXPECT_EQ(clique_count(complete_graph(6), 7), 0u);
}

TEST(Cliques, MatchBruteForce) {
  testing::Gen gen(25);
  for (int trial = 0; trial < 120; ++trial) {
    Graph g = gen.graph(gen.uniform(1, 18), 0.2 + 0.6 * gen.uniform(0, 10) / 10.0);
    for (int s = 1; s <= 6; ++s) ASSERT_EQ(clique_count(g, s), brute_cliques(g, s)) << trial << "," << s;
  }
}

TEST(Subgraphs, InducedAndUnion) {
  Graph g = complete_graph(5);
  std::vector<int> keep{0, 2, 4};
  EXPECT_EQ(induced_subgraph(g, keep).edge_count(), 3);
  Graph p = power_path(6, 1);
  Graph u = graph_union(p, power_path(6, 2));
  EXPECT_EQ(u.edges(), power_path(6, 2).edges());
  EXPECT_EQ(disjoint_union(p, p).vertex_count(), 12);
}

}  // namespace
}  // namespace hampower
