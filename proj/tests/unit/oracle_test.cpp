#include <gtest/gtest.h>

#include "generators.hpp"
#include "hampower/calculus.hpp"
#include "hampower/errors.hpp"
#include "hampower/oracle.hpp"

namespace hampower {
namespace {

std::int64_t labelling_edges(int m, const std::vector<int>& labels) {
  std::int64_t total = 0;
  const int L = static_cast<int>(labels.size());
  for (int a = 0; a < L; ++a) {
    for (int b = a + 1; b <= std::min(L - 1, a + m); ++b) total += labels[a] == labels[b];
  }
  return total;
}

// Plain (k+1)^L enumeration, no symmetry pruning.
template <typename F>
void every_labelling(int L, int k, F&& visit) {
  std::vector<int> labels(static_cast<std::size_t>(L), 0);
  for (;;) {
    visit(labels);
    int p = 0;
    while (p < L && labels[p] == k) labels[p++] = 0;
    if (p == L) return;
    ++labels[p];
  }
}

TEST(MinPartition, Examples) {
  EXPECT_EQ(min_partition_edges(4, 3, 1).minimum, 2);
  for (int k = 1; k <= 3; ++k) {
    for (int L = 1; L <= k + 1; ++L) EXPECT_EQ(min_partition_edges(L, 3, k).minimum, 0);
    EXPECT_EQ(min_partition_edges(k + 2, k + 1, k).minimum, 1);
  }
  PartitionResult r = min_partition_edges(10, 3, 1);
  EXPECT_EQ(r.minimum, 8);
  EXPECT_GT(Rational(r.minimum), f_value(1, 3, Rational(ell_argmin(1, 3))) * Rational(10) - Rational(18));
}

TEST(MinPartition, MatchesPlainEnumeration) {
  for (int k = 1; k <= 2; ++k) {
    for (int m = 1; m <= 5; ++m) {
      for (int L = 1; L <= (k == 1 ? 11 : 7); ++L) {
        std::int64_t best = -1;
        every_labelling(L, k, [&](const std::vector<int>& labels) {
          std::int64_t v = labelling_edges(m, labels);
          if (best < 0 || v < best) best = v;
        });
        PartitionResult r = min_partition_edges(L, m, k);
        ASSERT_EQ(r.minimum, best) << k << "," << m << "," << L;
        ASSERT_EQ(labelling_edges(m, r.witness), r.minimum);
        // canonical witness: first occurrences of labels increase
        int next = 0;
        for (int c : r.witness) {
          ASSERT_LE(c, next);
          if (c == next) ++next;
        }
      }
    }
  }
}

TEST(MinPartition, ReversedWitnessAttainsTheMinimum) {
  for (int k = 1; k <= 3; ++k) {
    for (int m = 2; m <= 5; ++m) {
      for (int L = 2; L <= 10; ++L) {
        PartitionResult r = min_partition_edges(L, m, k);
        std::vector<int> rev(r.witness.rbegin(), r.witness.rend());
        ASSERT_EQ(labelling_edges(m, rev), r.minimum);
      }
    }
  }
}

TEST(MinPartition, PathEdgesBoundForTwoClasses) {
  for (int m = 2; m <= 5; ++m) {
    const Rational f = f_value(1, m, Rational(ell_argmin(1, m)));
    for (int L = 1; L <= 16; ++L) {
      PartitionResult r = min_partition_edges(L, m, 1);
      ASSERT_GE(Rational(r.minimum), f * Rational(L) - Rational(2 * m * m)) << m << "," << L;
    }
  }
}

TEST(MinPartition, Limits) {
  EXPECT_THROW(min_partition_edges(19, 3, 1), ResourceError);
  EXPECT_THROW(min_partition_edges(14, 3, 2), ResourceError);
  EnumerationLimits lim;
  lim.k1 = 4;
  EXPECT_THROW(min_partition_edges(5, 2, 1, lim), ResourceError);
  lim.override_limits = true;
  EXPECT_EQ(min_partition_edges(5, 2, 1, lim).minimum, min_partition_edges(5, 2, 1).minimum);
  EXPECT_EQ(EnumerationLimits{}.limit(1), 18);
  EXPECT_EQ(EnumerationLimits{}.limit(2), 13);
}

TEST(Deficit, Examples) {
  for (int k = 1; k <= 3; ++k) {
    const int m = k + 2;
    const Rational f = f_value(k, m, Rational(ell_argmin(k, m)));
    for (int L = 1; L <= k + 1; ++L) {
      DeficitResult d = conjecture_deficit(L, m, k);
      EXPECT_LE(d.deficit, Rational(0));
      if (L == k + 1) EXPECT_EQ(d.deficit, -f);
    }
  }
  EXPECT_EQ(conjecture_deficit(12, 4, 2).deficit, Rational(0));
  EXPECT_THROW(conjecture_deficit(5, 2, 2), DomainError);
}

TEST(Deficit, MatchesPlainEnumeration) {
  for (int k = 1; k <= 2; ++k) {
    for (int m = k + 1; m <= 5; ++m) {
      const Rational f = f_value(k, m, Rational(ell_argmin(k, m)));
      for (int L = 1; L <= (k == 1 ? 10 : 7); ++L) {
        std::optional<Rational> best;
        every_labelling(L, k, [&](const std::vector<int>& labels) {
          std::optional<Rational> worst;
          for (int c = 0; c <= k; ++c) {
            std::vector<int> mine;
            for (int p = 0; p < L; ++p) {
              if (labels[p] == c) mine.push_back(p);
            }
            std::int64_t e = 0;
            for (std::size_t a = 0; a < mine.size(); ++a) {
              for (std::size_t b = a + 1; b < mine.size(); ++b) e += mine[b] - mine[a] <= m;
            }
            Rational v = Rational(static_cast<long long>(e)) - f * Rational(static_cast<long long>(mine.size()));
            if (!worst || v > *worst) worst = v;
          }
          if (!best || *worst < *best) best = worst;
        });
        DeficitResult d = conjecture_deficit(L, m, k);
        ASSERT_EQ(d.deficit, *best) << k << "," << m << "," << L;
      }
    }
  }
}

TEST(Deficit, GrowsBoundedlyInL) {
  for (int k = 1; k <= 2; ++k) {
    for (int m = k + 1; m <= 5; ++m) {
      const Rational f = f_value(k, m, Rational(ell_argmin(k, m)));
      Rational prev = conjecture_deficit(1, m, k).deficit;
      for (int L = 2; L <= (k == 1 ? 14 : 11); ++L) {
        Rational cur = conjecture_deficit(L, m, k).deficit;
        EXPECT_LE(cur, prev + f) << k << "," << m << "," << L;
        EXPECT_GE(cur, prev - f) << k << "," << m << "," << L;
        prev = cur;
      }
    }
  }
}

TEST(ExhaustiveDensity, Examples) {
  EXPECT_EQ(exhaustive_density(complete_graph(4)).density, Rational(2));
  EXPECT_EQ(exhaustive_density(braid({3, 2, 2})).density, Rational(9, 5));
  EXPECT_EQ(exhaustive_density(disjoint_union(complete_graph(3), complete_graph(4))).density, Rational(2));
  EXPECT_THROW(exhaustive_density(complete_graph(21)), ResourceError);
  EXPECT_THROW(exhaustive_density(Graph(1)), DomainError);
}

TEST(ExhaustiveDensity, WitnessAttainsTheValue) {
  testing::Gen gen(61);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = gen.graph(gen.uniform(2, 12), 0.4);
    DensityResult d = exhaustive_density(g);
    ASSERT_GE(d.vertices.size(), 2u);
    Graph h = induced_subgraph(g, d.vertices);
    EXPECT_EQ(Rational(static_cast<long long>(h.edge_count())) / Rational(static_cast<long long>(d.vertices.size() - 1)),
              d.density);
  }
}

TEST(PowerHamilton, Examples) {
  HamiltonSearch a = find_power_hamilton(complete_graph(8), 3, 100000);
  ASSERT_EQ(a.verdict, SearchVerdict::found);
  EXPECT_TRUE(is_power_hamilton(complete_graph(8), 3, a.order));
  Graph c = power_cycle(9, 2);
  HamiltonSearch b = find_power_hamilton(c, 2, 100000);
  ASSERT_EQ(b.verdict, SearchVerdict::found);
  EXPECT_TRUE(is_power_hamilton(c, 2, b.order));
  Graph k222 = complete_multipartite(3, 2);
  HamiltonSearch d = find_power_hamilton(k222, 2, 100000);
  ASSERT_EQ(d.verdict, SearchVerdict::found);
  EXPECT_TRUE(is_power_hamilton(k222, 2, d.order));
}

TEST(PowerHamilton, AbsentAndUnknownAreDistinct) {
  Graph k333 = complete_multipartite(3, 3);  // no K_4, so no cube of a Hamilton cycle
  EXPECT_EQ(find_power_hamilton(k333, 3, 1000000).verdict, SearchVerdict::absent);
  EXPECT_EQ(find_power_hamilton(k333, 3, 1).verdict, SearchVerdict::unknown);
  EXPECT_EQ(find_power_hamilton(power_path(6, 1), 1, 1000).verdict, SearchVerdict::absent);
}

TEST(PowerHamilton, CompleteGraphs) {
  for (int n = 3; n <= 12; ++n) {
    for (int m = 1; 2 * m <= n; ++m) {
      HamiltonSearch s = find_power_hamilton(complete_graph(n), m, 1000000);
      ASSERT_EQ(s.verdict, SearchVerdict::found) << n << "," << m;
      ASSERT_TRUE(is_power_hamilton(complete_graph(n), m, s.order));
    }
  }
}

TEST(PowerHamilton, FoundOrdersVerifyOnRandomGraphs) {
  testing::Gen gen(62);
  int found = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const int n = gen.uniform(5, 12);
    Graph g = gen.graph(n, 0.75);
    const int m = gen.uniform(1, 2);
    HamiltonSearch s = find_power_hamilton(g, m, 200000);
    if (s.verdict != SearchVerdict::found) continue;
    ++found;
    ASSERT_TRUE(is_power_hamilton(g, m, s.order));
    std::vector<int> sorted = s.order;
    std::sort(sorted.begin(), sorted.end());
    for (int v = 0; v < n; ++v) ASSERT_EQ(sorted[v], v);
  }
  EXPECT_GT(found, 10);
}

}  // namespace
}  // namespace hampower
