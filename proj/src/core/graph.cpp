#include "tdl/core/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tdl {

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(n) + 1) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

bool Graph::add_edge(int u, int v) {
  if (u < 1 || v < 1 || u > n_ || v > n_)
    throw std::out_of_range("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
  if (u == v) throw std::invalid_argument("self-loop at " + std::to_string(u));
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) return false;
  au.insert(it, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++m_;
  return true;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 1 || v < 1 || u > n_ || v > n_) return false;
  const auto& au = adj_[u];
  return std::binary_search(au.begin(), au.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 1; u <= n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

int Graph::add_vertex() {
  adj_.emplace_back();
  return ++n_;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v, ++bit)
      if (mask >> bit & 1) g.add_edge(u, v);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(1, n);
  return g;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
  std::vector<int> pos(static_cast<size_t>(g.n()) + 1, 0);
  for (size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i) + 1;
  Graph h(static_cast<int>(keep.size()));
  for (int u : keep)
    for (int v : g.neighbors(u))
      if (pos[v] && u < v) h.add_edge(pos[u], pos[v]);
  return h;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<int> comp(static_cast<size_t>(g.n()) + 1, -1);
  std::vector<std::vector<int>> out;
  for (int s = 1; s <= g.n(); ++s) {
    if (comp[s] >= 0) continue;
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = static_cast<int>(out.size()) - 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      out.back().push_back(u);
      for (int v : g.neighbors(u))
        if (comp[v] < 0) {
          comp[v] = comp[s];
          stack.push_back(v);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

}  // namespace tdl
