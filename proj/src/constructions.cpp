#include <algorithm>
#include <set>
#include <string>

#include "hampower/errors.hpp"
#include "hampower/graph.hpp"

namespace hampower {

Graph complete_graph(int n) { return power_path(n, std::max(n - 1, 0)); }

Graph complete_multipartite(int parts, int part_size) {
  if (parts < 1 || part_size < 1) throw DomainError("multipartite: parts and part size must be positive");
  int n = parts * part_size;
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (u / part_size != v / part_size) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

Graph power_path(int n, int m) {
  if (n < 1) throw DomainError("power path needs at least one vertex");
  if (m < 0) throw DomainError("power must be nonnegative");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n && v - u <= m; ++v) edges.push_back({u, v});
  }
  return Graph::from_edges(n, edges);
}

Graph power_cycle(int n, int m) {
  if (m < 1) throw DomainError("power must be positive");
  if (n < 2 * m + 1) {
    throw DomainError("power cycle C_n^m needs n >= 2m+1 (got n=" + std::to_string(n) +
                      ", m=" + std::to_string(m) + ")");
  }
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int d = 1; d <= m; ++d) {
      int v = (u + d) % n;
      edges.push_back({std::min(u, v), std::max(u, v)});
    }
  }
  return Graph::from_edges(n, edges);
}

namespace {

void check_braid(const BraidSpec& s) {
  if (s.ell < 2) throw DomainError("braid: ell must be at least 2");
  if (s.r < 0 || s.r > s.ell) throw DomainError("braid: need 0 <= r <= ell");
  if (s.t < 1) throw DomainError("braid: t must be at least 1");
}

// r-bridge from the last r vertices of the block at `left` to the first r of the block at
// `right`: v_a ~ u_1..u_a.
void add_bridge(std::vector<Edge>& out, int left, int right, int ell, int r) {
  for (int a = 1; a <= r; ++a) {
    int v = left + ell - r + a - 1;
    for (int c = 1; c <= a; ++c) out.push_back({v, right + c - 1});
  }
}

void add_clique(std::vector<Edge>& out, int first, int size) {
  for (int u = first; u < first + size; ++u) {
    for (int v = u + 1; v < first + size; ++v) out.push_back({u, v});
  }
}

}  // namespace

Graph braid(const BraidSpec& spec) {
  check_braid(spec);
  std::vector<Edge> edges;
  for (int i = 0; i < spec.t; ++i) add_clique(edges, i * spec.ell, spec.ell);
  for (int i = 0; i + 1 < spec.t; ++i) {
    add_bridge(edges, i * spec.ell, (i + 1) * spec.ell, spec.ell, spec.r);
  }
  return Graph::from_edges(spec.ell * spec.t, edges);
}

std::int64_t braid_edge_count(const BraidSpec& spec) {
  check_braid(spec);
  std::int64_t l = spec.ell, r = spec.r, t = spec.t;
  return t * l * (l - 1) / 2 + (t - 1) * (r + 1) * r / 2;
}

Graph blow_up(const Graph& g, int ell) {
  if (ell < 1) throw DomainError("blow-up factor must be positive");
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    for (int i = 0; i < ell; ++i) {
      for (int j = 0; j < ell; ++j) edges.push_back({e.u * ell + i, e.v * ell + j});
    }
  }
  return Graph::from_edges(g.vertex_count() * ell, edges);
}

Decomposition decompose_power_path(int k, int ell, int r, int t) {
  if (k < 1) throw DomainError("decomposition: k must be at least 1");
  if (ell < 1) throw DomainError("decomposition: ell must be at least 1");
  if (r < 1 || r > ell) throw DomainError("decomposition: need 1 <= r <= ell");
  if (t < 1) throw DomainError("decomposition: t must be at least 1");
  Decomposition d;
  d.m = k * ell + r;
  int blocks = (k + 1) * t;
  d.n = blocks * ell;

  for (int a = 0; a < blocks; ++a) {
    for (int b = a + 1; b < blocks && b - a <= k; ++b) {
      for (int i = 0; i < ell; ++i) {
        for (int j = 0; j < ell; ++j) d.blowup_edges.push_back({a * ell + i, b * ell + j});
      }
    }
  }
  d.braid_edges.resize(static_cast<std::size_t>(k + 1));
  for (int c = 0; c <= k; ++c) {
    auto& out = d.braid_edges[c];
    for (int b = c; b < blocks; b += k + 1) {
      add_clique(out, b * ell, ell);
      if (b + k + 1 < blocks) add_bridge(out, b * ell, (b + k + 1) * ell, ell, r);
    }
  }

  std::set<Edge> seen;
  bool disjoint = true;
  auto take = [&](const Edge& e) {
    Edge n{std::min(e.u, e.v), std::max(e.u, e.v)};
    if (n.v - n.u > d.m) disjoint = false;  // not an edge of the power path at all
    if (!seen.insert(n).second) disjoint = false;
  };
  for (const Edge& e : d.blowup_edges) take(e);
  for (const auto& set : d.braid_edges) {
    for (const Edge& e : set) take(e);
  }
  bool covers = true;
  for (int u = 0; u < d.n && covers; ++u) {
    for (int v = u + 1; v < d.n && v - u <= d.m; ++v) {
      if (!seen.count({u, v})) {
        covers = false;
        break;
      }
    }
  }
  d.covers = covers;
  d.disjoint = disjoint;
  d.verified = covers && disjoint;
  return d;
}

}  // namespace hampower
