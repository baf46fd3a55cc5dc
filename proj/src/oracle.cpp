#include "hampower/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "hampower/calculus.hpp"
#include "hampower/errors.hpp"

namespace hampower {

int EnumerationLimits::limit(int k) const {
  switch (k) {
    case 1: return k1;
    case 2: return k2;
    case 3: return k3;
    default: return other;
  }
}

void EnumerationLimits::check(int L, int k) const {
  if (override_limits || L <= limit(k)) return;
  throw ResourceError("L = " + std::to_string(L) + " exceeds the enumeration limit " +
                      std::to_string(limit(k)) + " for k = " + std::to_string(k) +
                      "; pass --override-limits to run anyway");
}

namespace {

void check_labelling_args(int L, int m, int k) {
  if (L < 1) throw DomainError("L must be at least 1");
  if (m < 1) throw DomainError("m must be at least 1");
  if (k < 1) throw DomainError("k must be at least 1");
}

// Restricted-growth labelling search over the positions of P_L^m. `placed(c, p)` returns the
// number of class-c positions among p-m..p-1, maintained through a per-position label array.
class LabelSearch {
 public:
  LabelSearch(int L, int m, int k) : L_(L), m_(m), classes_(k + 1), labels_(L, -1) {}

  int same_class_back(int p, int c) const {
    int count = 0;
    for (int q = std::max(0, p - m_); q < p; ++q) count += labels_[q] == c;
    return count;
  }

 protected:
  int L_;
  int m_;
  int classes_;
  std::vector<int> labels_;
};

class MinPartition : LabelSearch {
 public:
  MinPartition(int L, int m, int k, const std::vector<std::int64_t>& suffix_opt)
      : LabelSearch(L, m, k), suffix_(suffix_opt) {}

  PartitionResult run() {
    go(0, 0, 0);
    return std::move(result_);
  }

 private:
  void go(int p, int used, std::int64_t cost) {
    if (cost + suffix_[L_ - p] >= best_) return;
    if (p == L_) {
      best_ = cost;
      result_.minimum = cost;
      result_.witness = labels_;
      ++result_.enumerated;
      return;
    }
    int top = std::min(classes_ - 1, used);
    for (int c = 0; c <= top; ++c) {
      labels_[p] = c;
      go(p + 1, std::max(used, c + 1), cost + same_class_back(p, c));
    }
    labels_[p] = -1;
  }

  const std::vector<std::int64_t>& suffix_;
  std::int64_t best_ = std::numeric_limits<std::int64_t>::max();
  PartitionResult result_;
};

}  // namespace

PartitionResult min_partition_edges(int L, int m, int k, const EnumerationLimits& limits) {
  check_labelling_args(L, m, k);
  limits.check(L, k);
  // opt[R] for shorter paths bounds the cost still to come on the last R positions.
  std::vector<std::int64_t> opt(static_cast<std::size_t>(L) + 1, 0);
  PartitionResult last;
  for (int R = 1; R <= L; ++R) {
    std::vector<std::int64_t> bound(opt.begin(), opt.begin() + R + 1);
    bound[R] = 0;
    last = MinPartition(R, m, k, bound).run();
    opt[R] = last.minimum;
  }
  return last;
}

namespace {

class MinDeficit : LabelSearch {
 public:
  // f = fa / fb; values are kept scaled by fb.
  MinDeficit(int L, int m, int k, std::int64_t fa, std::int64_t fb)
      : LabelSearch(L, m, k), fa_(fa), fb_(fb), edges_(k + 1, 0), sizes_(k + 1, 0) {}

  DeficitResult run() {
    go(0, 0);
    DeficitResult out;
    out.deficit = Rational(static_cast<long long>(best_)) / Rational(static_cast<long long>(fb_));
    out.witness = std::move(witness_);
    out.enumerated = enumerated_;
    return out;
  }

 private:
  std::int64_t scaled(int c) const { return fb_ * edges_[c] - fa_ * sizes_[c]; }

  void go(int p, int used) {
    // every further vertex lowers a class value by at most f
    std::int64_t lower = std::numeric_limits<std::int64_t>::min();
    for (int c = 0; c < classes_; ++c) lower = std::max(lower, scaled(c));
    lower -= fa_ * (L_ - p);
    if (has_best_ && lower >= best_) return;
    if (p == L_) {
      std::int64_t value = lower;
      ++enumerated_;
      if (!has_best_ || value < best_) {
        has_best_ = true;
        best_ = value;
        witness_ = labels_;
      }
      return;
    }
    int top = std::min(classes_ - 1, used);
    for (int c = 0; c <= top; ++c) {
      int added = same_class_back(p, c);
      labels_[p] = c;
      edges_[c] += added;
      ++sizes_[c];
      go(p + 1, std::max(used, c + 1));
      --sizes_[c];
      edges_[c] -= added;
    }
    labels_[p] = -1;
  }

  std::int64_t fa_;
  std::int64_t fb_;
  std::vector<std::int64_t> edges_;
  std::vector<std::int64_t> sizes_;
  bool has_best_ = false;
  std::int64_t best_ = 0;
  std::vector<int> witness_;
  std::uint64_t enumerated_ = 0;
};

}  // namespace

DeficitResult conjecture_deficit(int L, int m, int k, const EnumerationLimits& limits) {
  check_labelling_args(L, m, k);
  if (m <= k) throw DomainError("conjecture_deficit needs m > k");
  limits.check(L, k);
  Rational f = f_value(k, m, Rational(ell_argmin(k, m)));
  return MinDeficit(L, m, k, f.numerator().get_si(), f.denominator().get_si()).run();
}

DensityResult exhaustive_density(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw DomainError("density needs at least two vertices");
  if (n > 20) throw ResourceError("exhaustive density is limited to 20 vertices");
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    for (int u : g.neighbors(v)) adj[v] |= 1u << u;
  }
  const std::uint32_t full = 1u << n;
  std::vector<std::uint16_t> edges(full, 0);
  DensityResult out;
  out.density = -1;
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    int v = std::countr_zero(mask);
    std::uint32_t rest = mask & (mask - 1);
    edges[mask] = static_cast<std::uint16_t>(edges[rest] + std::popcount(adj[v] & rest));
    int size = std::popcount(mask);
    if (size < 2) continue;
    Rational d(static_cast<long long>(edges[mask]));
    d /= Rational(size - 1);
    if (d > out.density) {
      out.density = d;
      best_mask = mask;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (best_mask >> v & 1u) out.vertices.push_back(v);
  }
  return out;
}

bool is_power_hamilton(const Graph& g, int m, const std::vector<int>& order) {
  const int n = static_cast<int>(order.size());
  if (n != g.vertex_count()) return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (int i = 0; i < n; ++i) {
    for (int d = 1; d <= m && d < n; ++d) {
      if (!g.has_edge(order[i], order[(i + d) % n])) return false;
    }
  }
  return true;
}

namespace {

class PowerSearch {
 public:
  PowerSearch(const Graph& g, int m, std::uint64_t budget)
      : n_(g.vertex_count()), m_(m), budget_(budget), adj_(static_cast<std::size_t>(n_), 0) {
    for (int v = 0; v < n_; ++v) {
      for (int u : g.neighbors(v)) adj_[v] |= std::uint64_t{1} << u;
    }
  }

  HamiltonSearch run() {
    HamiltonSearch out;
    order_.assign(1, 0);
    bool hit = go(std::uint64_t{1});
    out.nodes = nodes_;
    if (hit) {
      out.verdict = SearchVerdict::found;
      out.order = order_;
    } else {
      out.verdict = exhausted_ ? SearchVerdict::unknown : SearchVerdict::absent;
    }
    return out;
  }

 private:
  bool go(std::uint64_t used) {
    const int p = static_cast<int>(order_.size());
    if (p == n_) return true;
    // the new vertex must see the last m placed and, near the end, the first ones cyclically
    std::uint64_t cand = ~used & (n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1);
    for (int q = std::max(0, p - m_); q < p; ++q) cand &= adj_[order_[q]];
    for (int q = 0; q <= p + m_ - n_ && q < p; ++q) cand &= adj_[order_[q]];
    while (cand) {
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return false;
      }
      order_.push_back(v);
      if (go(used | std::uint64_t{1} << v)) return true;
      order_.pop_back();
      if (exhausted_) return false;
    }
    return false;
  }

  int n_;
  int m_;
  std::uint64_t budget_;
  std::vector<std::uint64_t> adj_;
  std::vector<int> order_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

HamiltonSearch find_power_hamilton(const Graph& g, int m, std::uint64_t budget) {
  const int n = g.vertex_count();
  if (m < 1) throw DomainError("m must be at least 1");
  if (n < 1) throw DomainError("graph must have at least one vertex");
  if (n > 64) throw ResourceError("power-Hamilton search is limited to 64 vertices");
  const int need = std::min(2 * m, n - 1);
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) < need) return {SearchVerdict::absent, {}, 0};
  }
  return PowerSearch(g, m, budget).run();
}

std::string to_string(SearchVerdict v) {
  switch (v) {
    case SearchVerdict::found: return "found";
    case SearchVerdict::absent: return "absent";
    case SearchVerdict::unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace hampower
