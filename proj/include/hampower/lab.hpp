#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hampower/exact.hpp"
#include "hampower/graph.hpp"
#include "hampower/oracle.hpp"

namespace hampower {

// Counter-based generator: the draw for (seed, counter) does not depend on any other draw.
std::uint64_t counter_draw(std::uint64_t seed, std::uint64_t counter);

// Each pair {u,v} is kept iff its draw U satisfies U < p * 2^64 (compared exactly), so the same
// seed couples G(n,p1) inside G(n,p2) whenever p1 <= p2.
Graph gnp(int n, const Rational& p, std::uint64_t seed);

// base^exponent rounded to a multiple of 10^-digits (digits <= 15); for probabilities such
// as n^(-9/10) that have no exact rational value.
Rational power_approximation(long base, const Rational& exponent, int digits);

struct GadgetSpec {
  int n = 0;
  int k = 1;
  Rational eps;
};

struct Gadget {
  GadgetSpec spec;
  int w_size = 0;
  std::vector<std::vector<int>> classes;  // U_1..U_{k+1}
  std::vector<std::vector<int>> w;        // W_i, the first w_size members of U_i
  Graph graph;
  int min_degree = 0;
  int required_degree = 0;  // ceil((k/(k+1) + eps) n) - 1
};

// Complete balanced (k+1)-partite graph plus W_i x (U_i \ W_i) for every class.
Gadget posa_gadget(const GadgetSpec& spec);

struct SampleReport {
  std::uint64_t seed = 0;
  int n = 0;
  int s = 0;
  Rational p;
  int trials = 0;
  std::vector<std::uint64_t> counts;  // X_s per trial
  Rational mean;
  Rational variance;                  // unbiased sample variance
  Rational expectation;               // C(n,s) p^C(s,2)
  Rational exact_variance;
  // (mean - E)^2 <= 9 variance / trials, i.e. within three standard errors
  bool within_band = false;
};

SampleReport clique_experiment(int n, int s, const Rational& p, int trials, std::uint64_t seed,
                               int threads = 1);

struct ZeroReport {
  int k = 0;
  int m = 0;
  int n = 0;
  int s = 0;
  Rational p;
  Rational eps;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::int64_t edges = 0;
  // "found" / "absent" / "unknown" from the exact search, or "proxy" above 16 vertices
  std::string verdict;
  std::vector<int> order;
  std::uint64_t nodes = 0;
  // proxy metric
  std::vector<int> removed;                  // W plus one vertex per K_s copy found greedily
  std::vector<int> segment;                  // longest m-path found greedily in what remains
  std::vector<std::int64_t> class_edges;     // |E(P[V_j])| of that segment per gadget class
};

ZeroReport zero_statement_experiment(int k, int m, int n, const Rational& p, const Rational& eps,
                                     std::uint64_t seed, std::uint64_t budget,
                                     std::optional<int> s = std::nullopt);

}  // namespace hampower
