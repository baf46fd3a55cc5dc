#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>

#include "hampower/errors.hpp"
#include "hampower/graph.hpp"

namespace hampower {

namespace {

class Dinic {
 public:
  explicit Dinic(int n) : head_(n, -1), level_(n), it_(n) {}

  void add_edge(int u, int v, std::int64_t cap) {
    arcs_.push_back({v, head_[u], cap});
    head_[u] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({u, head_[v], 0});
    head_[v] = static_cast<int>(arcs_.size()) - 1;
  }

  std::int64_t max_flow(int s, int t) {
    std::int64_t flow = 0;
    while (bfs(s, t)) {
      it_ = head_;
      while (std::int64_t f = dfs(s, t, std::numeric_limits<std::int64_t>::max())) flow += f;
    }
    return flow;
  }

 private:
  struct Arc {
    int to;
    int next;
    std::int64_t cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int a = head_[u]; a != -1; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[u] + 1;
          q.push(arcs_[a].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  std::int64_t dfs(int u, int t, std::int64_t limit) {
    if (u == t) return limit;
    for (int& a = it_[u]; a != -1; a = arcs_[a].next) {
      Arc& arc = arcs_[a];
      if (arc.cap <= 0 || level_[arc.to] != level_[u] + 1) continue;
      std::int64_t pushed = dfs(arc.to, t, std::min(limit, arc.cap));
      if (pushed > 0) {
        arc.cap -= pushed;
        arcs_[a ^ 1].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> it_;
  std::vector<Arc> arcs_;
};

std::int64_t to_i64(const BigInt& x) {
  if (!x.fits_slong_p()) throw ResourceError("density: capacity exceeds 64-bit range");
  return x.get_si();
}

void require_edges(const Graph& g) {
  if (g.vertex_count() < 2 || g.edge_count() == 0) {
    throw DomainError("density needs at least two vertices and one edge");
  }
}

}  // namespace

Rational density(const Graph& g) {
  if (g.vertex_count() < 2) throw DomainError("density needs at least two vertices");
  return Rational(BigInt(static_cast<long>(g.edge_count())), BigInt(g.vertex_count() - 1));
}

// max_{H nonempty, u in H} (e_H - gamma*v_H) = |E| - mincut in the network
//   s -> edge node (cap 1), edge node -> both endpoints (inf), vertex -> t (gamma), s -> u (inf).
// A set H with >= 2 vertices beats gamma iff e_H - gamma*v_H > -gamma; a singleton gives exactly
// -gamma, so the strict test never needs to exclude singletons. Capacities are scaled by den(gamma).
bool density_exceeds(const Graph& g, const Rational& gamma) {
  require_edges(g);
  if (gamma.sign() < 0) return true;
  const int n = g.vertex_count();
  const std::vector<Edge> edges = g.edges();
  const auto e = static_cast<std::int64_t>(edges.size());
  const std::int64_t Q = to_i64(gamma.denominator());
  const std::int64_t P = to_i64(gamma.numerator());
  if (P > std::numeric_limits<std::int64_t>::max() / 4 ||
      Q > std::numeric_limits<std::int64_t>::max() / (4 * (e + 1))) {
    throw ResourceError("density: scaled capacities exceed 64-bit range");
  }
  const std::int64_t threshold = Q * e + P;
  const std::int64_t inf = threshold + 1;
  const int s = static_cast<int>(e) + n;
  const int t = s + 1;

  for (int u = 0; u < n; ++u) {
    if (g.degree(u) == 0) continue;  // an isolated forced vertex only lowers the objective
    Dinic net(t + 1);
    for (std::int64_t i = 0; i < e; ++i) {
      int node = static_cast<int>(i);
      net.add_edge(s, node, Q);
      net.add_edge(node, static_cast<int>(e) + edges[i].u, inf);
      net.add_edge(node, static_cast<int>(e) + edges[i].v, inf);
    }
    for (int v = 0; v < n; ++v) net.add_edge(static_cast<int>(e) + v, t, P);
    net.add_edge(s, static_cast<int>(e) + u, inf);
    if (net.max_flow(s, t) < threshold) return true;
  }
  return false;
}

// Stern-Brocot search: the optimum e_H/(v_H-1) has denominator <= n-1, and once the bracketing
// neighbours lo < opt <= hi have mediant denominator > n-1 no candidate is left but hi.
Rational max_density(const Graph& g) {
  require_edges(g);
  const BigInt N = g.vertex_count() - 1;
  BigInt a = 0, b = 1;  // lo = a/b, predicate true
  BigInt c = 1, d = 0;  // hi = c/d, predicate false (d = 0 is +infinity)
  auto exceeds = [&](const BigInt& num, const BigInt& den) {
    return density_exceeds(g, Rational(num, den));
  };
  while (b + d <= N) {
    if (exceeds(a + c, b + d)) {
      // gallop lo = (a + j c)/(b + j d) upward while the predicate stays true
      BigInt good = 1, bad = 0;
      auto in_range = [&](const BigInt& j) { return d == 0 || b + j * d <= N; };
      BigInt j = 2;
      while (in_range(j) && exceeds(a + j * c, b + j * d)) {
        good = j;
        j *= 2;
      }
      bad = j;
      while (bad - good > 1) {
        BigInt mid = (good + bad) / 2;
        if (in_range(mid) && exceeds(a + mid * c, b + mid * d)) {
          good = mid;
        } else {
          bad = mid;
        }
      }
      BigInt na = a + good * c, nb = b + good * d;
      if (in_range(good + 1)) {
        c = a + (good + 1) * c;
        d = b + (good + 1) * d;
      }
      a = na;
      b = nb;
    } else {
      // gallop hi = (c + j a)/(d + j b) downward while the predicate stays false
      BigInt good = 1, bad = 0;
      auto in_range = [&](const BigInt& j) { return d + j * b <= N; };
      BigInt j = 2;
      while (in_range(j) && !exceeds(c + j * a, d + j * b)) {
        good = j;
        j *= 2;
      }
      bad = j;
      while (bad - good > 1) {
        BigInt mid = (good + bad) / 2;
        if (in_range(mid) && !exceeds(c + mid * a, d + mid * b)) {
          good = mid;
        } else {
          bad = mid;
        }
      }
      BigInt nc = c + good * a, nd = d + good * b;
      if (in_range(good + 1)) {
        a = c + (good + 1) * a;
        b = d + (good + 1) * b;
      }
      c = nc;
      d = nd;
    }
  }
  if (d == 0) throw InternalError("max_density: search never bounded the optimum");
  return Rational(c, d);
}

}  // namespace hampower
