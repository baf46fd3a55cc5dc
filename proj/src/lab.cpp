#include "hampower/lab.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <thread>

#include "hampower/errors.hpp"
#include "hampower/rewire.hpp"

namespace hampower {

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

using u128 = unsigned __int128;

// ceil(p * 2^64); lies in [0, 2^64].
u128 draw_threshold(const Rational& p) {
  if (p.sign() < 0 || p > Rational(1)) throw DomainError("p must lie in [0, 1]");
  BigInt scaled = p.numerator() << 64;
  BigInt t;
  mpz_cdiv_q(t.get_mpz_t(), scaled.get_mpz_t(), p.denominator().get_mpz_t());
  BigInt high = t >> 64;
  BigInt low = t - (high << 64);
  u128 out = static_cast<u128>(mpz_get_ui(high.get_mpz_t())) << 64;
  // low < 2^64 fits an unsigned long on LP64
  return out | mpz_get_ui(low.get_mpz_t());
}

Rational power(const Rational& base, std::int64_t e) {
  Rational out(1);
  for (std::int64_t i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

std::uint64_t counter_draw(std::uint64_t seed, std::uint64_t counter) {
  return mix64(mix64(seed) + 0x9e3779b97f4a7c15ULL * (counter + 1));
}

Graph gnp(int n, const Rational& p, std::uint64_t seed) {
  if (n < 0) throw DomainError("n must be nonnegative");
  const u128 threshold = draw_threshold(p);
  std::vector<Edge> edges;
  std::uint64_t index = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++index) {
      if (static_cast<u128>(counter_draw(seed, index)) < threshold) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

Rational power_approximation(long base, const Rational& exponent, int digits) {
  if (base < 1) throw DomainError("power base must be positive");
  if (digits < 1 || digits > 15) throw DomainError("digits must lie in 1..15");
  long double value = std::pow(static_cast<long double>(base), static_cast<long double>(exponent.to_double()));
  long double scale = std::pow(10.0L, digits);
  BigInt den(1);
  for (int i = 0; i < digits; ++i) den *= 10;
  auto num = static_cast<long long>(std::llround(value * scale));
  return Rational(BigInt(static_cast<long>(num)), den);
}

Gadget posa_gadget(const GadgetSpec& spec) {
  const int n = spec.n;
  const int k = spec.k;
  if (k < 1) throw DomainError("gadget needs k >= 1");
  if (n < k + 1 || n % (k + 1) != 0) throw DomainError("gadget needs n divisible by k+1");
  if (spec.eps.sign() <= 0 || spec.eps >= Rational(1, k + 1)) {
    throw DomainError("gadget needs 0 < eps < 1/(k+1)");
  }
  Gadget out;
  out.spec = spec;
  const int u = n / (k + 1);
  out.w_size = static_cast<int>((spec.eps * Rational(n)).ceil().get_si());
  std::vector<Edge> edges;
  for (int i = 0; i <= k; ++i) {
    std::vector<int> cls;
    for (int j = 0; j < u; ++j) cls.push_back(i * u + j);
    out.w.emplace_back(cls.begin(), cls.begin() + out.w_size);
    out.classes.push_back(std::move(cls));
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      int ca = a / u, cb = b / u;
      if (ca != cb) {
        edges.push_back({a, b});
      } else if ((a % u < out.w_size) != (b % u < out.w_size)) {
        edges.push_back({a, b});
      }
    }
  }
  out.graph = Graph::from_edges(n, edges);
  out.min_degree = n;
  for (int v = 0; v < n; ++v) out.min_degree = std::min(out.min_degree, out.graph.degree(v));
  Rational target = (Rational(k, k + 1) + spec.eps) * Rational(n);
  out.required_degree = static_cast<int>(target.ceil().get_si()) - 1;
  if (out.min_degree < out.required_degree) {
    throw DomainError("gadget minimum degree " + std::to_string(out.min_degree) + " is below " +
                      std::to_string(out.required_degree) + "; eps is too large for this n");
  }
  return out;
}

SampleReport clique_experiment(int n, int s, const Rational& p, int trials, std::uint64_t seed,
                               int threads) {
  if (n < 1 || s < 1 || trials < 1) throw DomainError("clique experiment needs n, s, trials >= 1");
  if (n > 200 || s > 6) throw ResourceError("clique experiment is limited to n <= 200, s <= 6");
  draw_threshold(p);
  SampleReport out;
  out.seed = seed;
  out.n = n;
  out.s = s;
  out.p = p;
  out.trials = trials;
  out.counts.assign(static_cast<std::size_t>(trials), 0);
  auto run = [&](int first, int stride) {
    for (int t = first; t < trials; t += stride) {
      out.counts[t] = clique_count(gnp(n, p, counter_draw(seed, static_cast<std::uint64_t>(t))), s);
    }
  };
  threads = std::clamp(threads, 1, trials);
  std::vector<std::thread> pool;
  for (int w = 1; w < threads; ++w) pool.emplace_back(run, w, threads);
  run(0, threads);
  for (auto& th : pool) th.join();

  Rational sum = 0, squares = 0;
  for (auto c : out.counts) {
    Rational x(BigInt(static_cast<unsigned long>(c)));
    sum += x;
    squares += x * x;
  }
  const Rational T(trials);
  out.mean = sum / T;
  out.variance = trials > 1 ? (squares - T * out.mean * out.mean) / Rational(trials - 1) : Rational(0);

  const std::int64_t e = static_cast<std::int64_t>(s) * (s - 1) / 2;
  const Rational copies(binom(n, s));
  out.expectation = copies * power(p, e);
  Rational var = 0;
  for (int j = 2; j <= s; ++j) {
    Rational pairs = copies * Rational(binom(s, j)) * Rational(binom(n - s, s - j));
    var += pairs * (power(p, 2 * e - static_cast<std::int64_t>(j) * (j - 1) / 2) - power(p, 2 * e));
  }
  out.exact_variance = var;
  Rational gap = out.mean - out.expectation;
  out.within_band = gap * gap <= Rational(9) * out.variance / T;
  return out;
}

namespace {

// A K_s inside `pool` (sorted), as vertex ids, or empty.
std::vector<int> find_clique(const Graph& g, const std::vector<int>& pool, int s) {
  std::vector<int> chosen;
  std::function<bool(std::size_t)> go = [&](std::size_t from) {
    if (static_cast<int>(chosen.size()) == s) return true;
    for (std::size_t i = from; i < pool.size(); ++i) {
      int v = pool[i];
      bool ok = std::all_of(chosen.begin(), chosen.end(), [&](int c) { return g.has_edge(c, v); });
      if (!ok) continue;
      chosen.push_back(v);
      if (go(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return go(0) ? chosen : std::vector<int>{};
}

// Greedy: from each start, append the smallest unused vertex adjacent to the last m placed.
std::vector<int> greedy_power_path(const Graph& g, const std::vector<char>& alive, int m) {
  const int n = g.vertex_count();
  std::vector<int> best;
  for (int start = 0; start < n; ++start) {
    if (!alive[start]) continue;
    std::vector<int> path{start};
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    used[start] = 1;
    for (;;) {
      int next = -1;
      for (int v = 0; v < n && next < 0; ++v) {
        if (!alive[v] || used[v]) continue;
        bool ok = true;
        for (std::size_t q = path.size() > static_cast<std::size_t>(m) ? path.size() - m : 0;
             q < path.size() && ok; ++q) {
          ok = g.has_edge(path[q], v);
        }
        if (ok) next = v;
      }
      if (next < 0) break;
      used[next] = 1;
      path.push_back(next);
    }
    if (path.size() > best.size()) best = std::move(path);
  }
  return best;
}

}  // namespace

ZeroReport zero_statement_experiment(int k, int m, int n, const Rational& p, const Rational& eps,
                                     std::uint64_t seed, std::uint64_t budget, std::optional<int> s) {
  if (m < 1) throw DomainError("m must be at least 1");
  Gadget gadget = posa_gadget({n, k, eps});
  Graph random = gnp(n, p, seed);
  Graph g = graph_union(gadget.graph, random);

  ZeroReport out;
  out.k = k;
  out.m = m;
  out.n = n;
  // some class meets every window of m+1 consecutive vertices at least this often
  out.s = s.value_or(std::max(2, (m + 1 + k) / (k + 1)));
  if (out.s < 2) throw DomainError("s must be at least 2");
  out.p = p;
  out.eps = eps;
  out.seed = seed;
  out.budget = budget;
  out.edges = g.edge_count();

  if (n <= 16) {
    HamiltonSearch h = find_power_hamilton(g, m, budget);
    out.verdict = to_string(h.verdict);
    out.order = std::move(h.order);
    out.nodes = h.nodes;
    return out;
  }

  out.verdict = "proxy";
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  for (const auto& w : gadget.w) {
    for (int v : w) {
      alive[v] = 0;
      out.removed.push_back(v);
    }
  }
  for (const auto& cls : gadget.classes) {
    for (;;) {
      std::vector<int> pool;
      for (int v : cls) {
        if (alive[v]) pool.push_back(v);
      }
      std::vector<int> clique = find_clique(g, pool, out.s);
      if (clique.empty()) break;
      alive[clique.front()] = 0;
      out.removed.push_back(clique.front());
    }
  }
  out.segment = greedy_power_path(g, alive, m);
  const int u = n / (k + 1);
  for (int c = 0; c <= k; ++c) {
    std::vector<int> positions;
    for (int pos = 0; pos < static_cast<int>(out.segment.size()); ++pos) {
      if (out.segment[pos] / u == c) positions.push_back(pos);
    }
    out.class_edges.push_back(induced_edges(m, positions));
  }
  return out;
}

}  // namespace hampower
