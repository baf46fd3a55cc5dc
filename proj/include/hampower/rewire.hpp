#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "hampower/exact.hpp"

namespace hampower {

// An m-path given by its traversal order; edges are exactly the pairs at order-distance <= m.
// labels[p] is the class (0..k) of the vertex at position p; it may be left empty when only
// a V_0 subset matters.
struct LabeledPowerPath {
  int m = 1;
  int k = 1;
  std::vector<int> order;
  std::vector<int> labels;

  int length() const { return static_cast<int>(order.size()); }
  // Positions (0-based, increasing) whose label is t.
  std::vector<int> class_positions(int t) const;
};

// Identity order 0..L-1, no labels.
LabeledPowerPath plain_path(int L, int m);
// Throws DomainError on repeated vertex ids, m < 1, or labels outside 0..k.
void validate(const LabeledPowerPath& path);

// T_0 S_1 T_1 ... S_q T_q. Segments hold vertex ids; s[i-1] is S_i, t[i] is T_i.
// Names follow the run/gap convention: run_size x_i = |S_i|, gap_size y_i = |T_i|.
struct RunPartition {
  std::vector<std::vector<int>> s;
  std::vector<std::vector<int>> t;

  int q() const { return static_cast<int>(s.size()); }
  std::vector<int> run_sizes() const;  // x_1..x_q
  std::vector<int> gap_sizes() const;  // y_0..y_q
  std::vector<int> flatten() const;
};

// Maximal runs of V_0 (given as 0-based positions) along the path order.
RunPartition v0_runs(const LabeledPowerPath& path, std::span<const int> v0_positions);

// Pairs of the given positions at distance <= m.
std::int64_t induced_edges(int m, std::span<const int> positions);
std::int64_t induced_edges(const LabeledPowerPath& path, std::span<const int> positions);

// Half-open range of 0-based positions.
struct Segment {
  int begin = 0;
  int end = 0;
  int size() const { return end - begin; }
};

enum class ShiftDirection { left, right };

// right: the last min(h,|a|) entries of a move to the front of b.
// left:  the first min(h,|b|) entries of b move to the end of a.
std::vector<int> shift(ShiftDirection dir, Segment a, Segment b, int h, std::span<const int> order);

struct RewireCertificate {
  std::int64_t edge_count_before = 0;
  std::int64_t edge_count_after = 0;
  // (i) 1 <= x_i <= m, (ii) 0 <= y_i <= m for i < q, (iii) x_i + y_i >= m for i < q,
  // (iv) y_i + x_{i+1} >= m for i < q - 1
  std::array<bool, 4> conditions{};
  bool permutation = false;     // output order is a permutation of the input order
  bool partition_valid = false; // S_i inside V_0, T_i outside, concatenation equals the order
  std::int64_t iterations = 0;
  Rational max_gap_ratio;       // max_{i<q} y_i / x_i, exploratory only

  bool valid() const;
};

struct RewireResult {
  std::vector<int> order;
  RunPartition partition;
  RewireCertificate certificate;
};

RewireResult rewire(const LabeledPowerPath& path, std::span<const int> v0_positions);

struct BoundCheck {
  bool holds = false;
  Rational lhs;
  Surd rhs;
};

// |E(P[V_0])| >= f(lambda_{k,m}) |V_0| - m(m+1), requires (k+1)|V_0| >= L.
BoundCheck weak_bound_check(const LabeledPowerPath& path, std::span<const int> v0_positions, int k);
// k = 1: |E(P[A])| + |E(P[B])| >= f(ell_{1,m}) L - 2m^2 with B the complement of A.
BoundCheck path_edges_check(const LabeledPowerPath& path, std::span<const int> a_positions);

// True iff no class has s members inside any window of m+1 consecutive positions.
bool classes_clique_free(const LabeledPowerPath& path, int s);

enum class HPathVerdict { holds, fails, inapplicable };

// Whether the class-t vertices, in path order, form a spanning h-path of P[V_t]: each vertex is
// within distance m of the h class-t vertices that follow it. Inapplicable unless
// m >= k(s-1)+h and every class is K_s-free.
HPathVerdict spanning_h_path_check(const LabeledPowerPath& path, int t, int s, int h);

// Class-t pairs separated by exactly q-1 class-t vertices that are also edges (the far_count).
std::int64_t q_far_count(const LabeledPowerPath& path, int t, int q);

// min over (c_0..c_k) with sum m+1 and 0 <= c_t <= s-1 of sum max(0, c_t - i).
int segment_far_minimum(int k, int m, int s, int i);

// z (L - m) / (m + 1 - i)
Rational ob_bound(int z, std::int64_t L, int m, int i);

struct FarCheck {
  bool holds = false;
  Rational lhs;
  Rational rhs;
};

// L - x_i <= (k+1) i + i/(s+h-i-j) x_j with x_q summed over all classes; needs m = k(s-1)+h,
// i > h, j > h, s+h-i-j > 0 and K_s-free classes.
FarCheck ob2_check(const LabeledPowerPath& path, int s, int h, int i, int j);

}  // namespace hampower
