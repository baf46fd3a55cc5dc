#include "hampower/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "hampower/errors.hpp"

namespace hampower {

Graph::Graph(int n) {
  if (n < 0) throw DomainError("negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
}

namespace {

void check_endpoint(int n, int x) {
  if (x < 0 || x >= n) {
    throw DomainError("vertex " + std::to_string(x) + " out of range [0, " + std::to_string(n) + ")");
  }
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    check_endpoint(n, e.u);
    check_endpoint(n, e.v);
    if (e.u == e.v) throw DomainError("loop at vertex " + std::to_string(e.u));
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  for (int v = 0; v < n; ++v) {
    auto& a = g.adj_[v];
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) {
      auto it = std::adjacent_find(a.begin(), a.end());
      throw DomainError("duplicate edge {" + std::to_string(v) + ", " + std::to_string(*it) + "}");
    }
  }
  g.edges_ = static_cast<std::int64_t>(edges.size());
  return g;
}

Graph Graph::from_edge_union(int n, std::span<const Edge> edges) {
  std::vector<Edge> norm;
  norm.reserve(edges.size());
  for (const Edge& e : edges) {
    check_endpoint(n, e.u);
    check_endpoint(n, e.v);
    if (e.u == e.v) throw DomainError("loop at vertex " + std::to_string(e.u));
    norm.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(norm.begin(), norm.end());
  norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
  return from_edges(n, norm);
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return false;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  int target = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), target);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edges_));
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph graph_union(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count()) throw DomainError("union of graphs of different order");
  std::vector<Edge> all = a.edges();
  std::vector<Edge> more = b.edges();
  all.insert(all.end(), more.begin(), more.end());
  return Graph::from_edge_union(a.vertex_count(), all);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  int shift = a.vertex_count();
  std::vector<Edge> all = a.edges();
  for (const Edge& e : b.edges()) all.push_back({e.u + shift, e.v + shift});
  return Graph::from_edges(shift + b.vertex_count(), all);
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_endpoint(g.vertex_count(), vertices[i]);
    if (index[vertices[i]] != -1) throw DomainError("repeated vertex in induced subgraph");
    index[vertices[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (int v : vertices) {
    for (int w : g.neighbors(v)) {
      if (index[w] != -1 && index[v] < index[w]) edges.push_back({index[v], index[w]});
    }
  }
  return Graph::from_edges(static_cast<int>(vertices.size()), edges);
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      auto first = out.find_first_not_of(" \t\r");
      if (first != std::string::npos && out[first] != '#') return true;
    }
    return false;
  };
  if (!next_line(line)) throw DomainError("edge list: missing header");
  long long n = -1, e = -1;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> e) || (hs >> extra) || n < 0 || e < 0) {
      throw DomainError("edge list: malformed header '" + line + "'");
    }
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(e));
  for (long long i = 0; i < e; ++i) {
    if (!next_line(line)) throw DomainError("edge list: expected " + std::to_string(e) + " edges");
    std::istringstream ls(line);
    long long u = -1, v = -1;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra)) throw DomainError("edge list: malformed line '" + line + "'");
    if (u < 0 || v < 0 || u >= n || v >= n) throw DomainError("edge list: endpoint out of range");
    edges.push_back({static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))});
  }
  if (next_line(line)) throw DomainError("edge list: trailing content '" + line + "'");
  return Graph::from_edges(static_cast<int>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
}

}  // namespace hampower
