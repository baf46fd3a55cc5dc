#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "hampower/exact.hpp"

namespace hampower {

struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  // Rejects loops, duplicates and out-of-range endpoints.
  static Graph from_edges(int n, std::span<const Edge> edges);
  // Like from_edges but silently merges duplicates (u,v) / (v,u); loops still rejected.
  static Graph from_edge_union(int n, std::span<const Edge> edges);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  std::int64_t edge_count() const { return edges_; }
  std::span<const int> neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;
  // Every edge once, with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

 private:
  std::vector<std::vector<int>> adj_;
  std::int64_t edges_ = 0;
};

Graph graph_union(const Graph& a, const Graph& b);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

// Edge-list text format: "n e" then e lines "u v" with u < v.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

Graph complete_graph(int n);
Graph complete_multipartite(int parts, int part_size);
Graph power_path(int n, int m);
Graph power_cycle(int n, int m);

struct BraidSpec {
  int ell = 2;
  int r = 0;
  int t = 1;
};

Graph braid(const BraidSpec& spec);
std::int64_t braid_edge_count(const BraidSpec& spec);
Graph blow_up(const Graph& g, int ell);

struct Decomposition {
  int n = 0;
  int m = 0;
  std::vector<Edge> blowup_edges;
  std::vector<std::vector<Edge>> braid_edges;  // one set per residue class 0..k
  bool covers = false;    // union contains every edge of P_n^m
  bool disjoint = false;  // no edge appears twice and none lies outside P_n^m
  bool verified = false;  // exact partition of E(P_n^m)
};

// Blocks of ell consecutive path positions; blocks at distance <= k form the blow-up of P^k,
// class c = blocks congruent to c mod (k+1), consecutive class blocks joined by r-bridges.
Decomposition decompose_power_path(int k, int ell, int r, int t);

// e/(v-1)
Rational density(const Graph& g);
// max over subgraphs with >= 2 vertices of e_H/(v_H - 1)
Rational max_density(const Graph& g);
// True iff some H with >= 2 vertices has e_H/(v_H - 1) > gamma.
bool density_exceeds(const Graph& g, const Rational& gamma);

// Number of s-cliques (s >= 1).
std::uint64_t clique_count(const Graph& g, int s);

}  // namespace hampower
