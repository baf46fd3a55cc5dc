#pragma once

#include <cstdint>
#include <vector>

#include "hampower/exact.hpp"
#include "hampower/graph.hpp"

namespace hampower {

// Largest path length L accepted by the labelling enumerations, per k.
struct EnumerationLimits {
  int k1 = 18;
  int k2 = 13;
  int k3 = 11;
  int other = 9;
  bool override_limits = false;

  int limit(int k) const;
  // Throws ResourceError with an advisory when L exceeds the limit and no override is set.
  void check(int L, int k) const;
};

struct PartitionResult {
  std::int64_t minimum = 0;
  std::vector<int> witness;  // class of each path position, canonical (first occurrences increasing)
  std::uint64_t enumerated = 0;
};

// min over (k+1)-labellings of the positions of P_L^m of sum_j |E(P[V_j])|.
PartitionResult min_partition_edges(int L, int m, int k, const EnumerationLimits& limits = {});

struct DeficitResult {
  Rational deficit;
  std::vector<int> witness;
  std::uint64_t enumerated = 0;
};

// min over labellings of max_j (|E(P[V_j])| - f(ell_{k,m}) |V_j|).
DeficitResult conjecture_deficit(int L, int m, int k, const EnumerationLimits& limits = {});

struct DensityResult {
  Rational density;
  std::vector<int> vertices;  // a maximizing vertex set
};

// Max e_H/(v_H - 1) over all vertex subsets with at least two vertices; n <= 20.
DensityResult exhaustive_density(const Graph& g);

enum class SearchVerdict { found, absent, unknown };

struct HamiltonSearch {
  SearchVerdict verdict = SearchVerdict::unknown;
  std::vector<int> order;
  std::uint64_t nodes = 0;
};

// Cyclic order in which every pair at cyclic distance <= m is an edge of g.
HamiltonSearch find_power_hamilton(const Graph& g, int m, std::uint64_t budget);

// True iff every pair of `order` at cyclic distance <= m is an edge of g.
bool is_power_hamilton(const Graph& g, int m, const std::vector<int>& order);

std::string to_string(SearchVerdict v);

}  // namespace hampower
