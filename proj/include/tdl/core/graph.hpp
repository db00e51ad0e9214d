#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace tdl {

// Undirected simple graph on vertices 1..n.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int n() const { return n_; }
  int m() const { return m_; }

  // Returns false for an edge that is already present. Throws on loops or
  // out-of-range endpoints.
  bool add_edge(int u, int v);
  bool has_edge(int u, int v) const;

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  // Lexicographically sorted, u < v.
  std::vector<std::pair<int, int>> edges() const;

  int add_vertex();

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_{1};
};

// Graph on n <= 64 vertices whose edges are the set bits of mask, in the
// order (1,2),(1,3),...,(1,n),(2,3),...
Graph graph_from_mask(int n, std::uint64_t mask);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

// Induced subgraph on keep (vertices renumbered 1..|keep| in the given order).
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);

std::vector<std::vector<int>> connected_components(const Graph& g);

}  // namespace tdl
