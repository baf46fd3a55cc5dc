#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>

#include "hampower/errors.hpp"
#include "hampower/graph.hpp"

namespace hampower {

namespace {

using u128 = unsigned __int128;
constexpr u128 kSaturated = ~static_cast<u128>(0);

u128 sat_add(u128 x, u128 y) { return x > kSaturated - y ? kSaturated : x + y; }

class Bits {
 public:
  explicit Bits(int n = 0) : w_((n + 63) / 64, 0) {}
  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  bool empty() const {
    return std::all_of(w_.begin(), w_.end(), [](std::uint64_t x) { return x == 0; });
  }
  int count() const {
    int c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
  }
  int and_count(const Bits& o) const {
    int c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
    return c;
  }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
    return r;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      for (std::uint64_t x = w_[i]; x; x &= x - 1) f(static_cast<int>(i * 64 + std::countr_zero(x)));
    }
  }

 private:
  std::vector<std::uint64_t> w_;
};

// Succinct clique tree: every clique inside `cand` is counted once as
// held vertices plus any subset of the pivots collected on the way to a leaf.
class PivotCounter {
 public:
  PivotCounter(const Graph& g, int s) : s_(s), adj_(g.vertex_count(), Bits(g.vertex_count())) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      for (int w : g.neighbors(v)) adj_[v].set(w);
    }
    int n = g.vertex_count();
    choose_.assign(n + 2, std::vector<u128>(s + 1, 0));
    for (int i = 0; i <= n + 1; ++i) {
      choose_[i][0] = 1;
      for (int j = 1; j <= std::min(i, s); ++j) {
        choose_[i][j] = sat_add(choose_[i - 1][j - 1], j <= i - 1 ? choose_[i - 1][j] : 0);
      }
    }
  }

  u128 run(const Graph& g) {
    // degeneracy order; each vertex only sees its later neighbours
    int n = g.vertex_count();
    std::vector<int> deg(n), order;
    std::vector<char> gone(n, 0);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    for (int step = 0; step < n; ++step) {
      int best = -1;
      for (int v = 0; v < n; ++v) {
        if (!gone[v] && (best < 0 || deg[v] < deg[best])) best = v;
      }
      gone[best] = 1;
      order.push_back(best);
      for (int w : g.neighbors(best)) --deg[w];
    }
    Bits later(n);
    for (int v = 0; v < n; ++v) later.set(v);
    u128 total = 0;
    for (int v : order) {
      later.reset(v);
      total = sat_add(total, descend(adj_[v] & later, 1, 0));
    }
    return total;
  }

 private:
  u128 descend(const Bits& cand, int held, int pivots) {
    if (held > s_) return 0;
    if (held + pivots + cand.count() < s_) return 0;
    if (cand.empty()) return choose_[pivots][s_ - held];
    int pivot = -1, best = -1;
    cand.for_each([&](int v) {
      int c = adj_[v].and_count(cand);
      if (c > best) {
        best = c;
        pivot = v;
      }
    });
    u128 total = descend(cand & adj_[pivot], held, pivots + 1);
    Bits rest = cand;
    rest.reset(pivot);
    std::vector<int> others;
    cand.for_each([&](int v) {
      if (v != pivot && !adj_[pivot].test(v)) others.push_back(v);
    });
    for (int v : others) {
      total = sat_add(total, descend(rest & adj_[v], held + 1, pivots));
      rest.reset(v);
    }
    return total;
  }

  int s_;
  std::vector<Bits> adj_;
  std::vector<std::vector<u128>> choose_;
};

}  // namespace

std::uint64_t clique_count(const Graph& g, int s) {
  if (s < 1) throw DomainError("clique size must be at least 1");
  int n = g.vertex_count();
  if (s > n) return 0;
  if (s == 1) return static_cast<std::uint64_t>(n);
  if (s == 2) return static_cast<std::uint64_t>(g.edge_count());
  PivotCounter counter(g, s);
  u128 total = counter.run(g);
  if (total > std::numeric_limits<std::uint64_t>::max()) {
    throw ResourceError("clique count exceeds 64-bit range");
  }
  return static_cast<std::uint64_t>(total);
}

}  // namespace hampower
