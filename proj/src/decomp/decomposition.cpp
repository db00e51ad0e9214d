#include "tdl/decomp/decomposition.hpp"

#include <algorithm>
#include <stdexcept>

namespace tdl {

const char* kind_name(DecompKind k) {
  switch (k) {
    case DecompKind::tw: return "tw";
    case DecompKind::pw: return "pw";
    case DecompKind::td: return "td";
  }
  return "?";
}

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

std::vector<std::vector<int>> TreeDecomposition::bag_adjacency() const {
  std::vector<std::vector<int>> adj(bags.size());
  for (auto [a, b] : tree_edges) {
    if (a < 0 || b < 0 || a >= num_bags() || b >= num_bags()) throw std::out_of_range("bag-tree edge out of range");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& l : adj) std::sort(l.begin(), l.end());
  return adj;
}

void TreeDecomposition::normalize() {
  for (auto& b : bags) {
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
  }
  for (auto& [a, b] : tree_edges)
    if (a > b) std::swap(a, b);
  std::sort(tree_edges.begin(), tree_edges.end());
}

std::vector<std::vector<int>> TreedepthDecomposition::children() const {
  std::vector<std::vector<int>> ch(parent.size());
  for (int v = 1; v <= n(); ++v) ch[parent[v]].push_back(v);
  return ch;  // ascending by construction
}

std::vector<int> TreedepthDecomposition::node_depths() const {
  std::vector<int> d(parent.size(), 0);
  auto ch = children();
  std::vector<int> stack(ch[0].begin(), ch[0].end());
  for (int r : ch[0]) d[r] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int c : ch[u]) {
      d[c] = d[u] + 1;
      stack.push_back(c);
    }
  }
  return d;
}

int TreedepthDecomposition::depth() const {
  auto d = node_depths();
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

bool TreedepthDecomposition::is_ancestor(int a, int v) const {
  for (int steps = 0; v != 0 && steps <= n(); ++steps) {
    if (v == a) return true;
    v = parent[v];
  }
  return false;
}

std::vector<int> path_order(const TreeDecomposition& d) {
  auto adj = d.bag_adjacency();
  const int B = d.num_bags();
  if (B == 0) return {};
  int start = -1;
  for (int b = 0; b < B; ++b) {
    if (adj[b].size() > 2) throw std::invalid_argument("bag tree is not a path");
    if (adj[b].size() <= 1 && start < 0) start = b;
  }
  if (start < 0) throw std::invalid_argument("bag tree is not a path");
  std::vector<int> seq{start};
  for (int prev = -1, cur = start;;) {
    int next = -1;
    for (int x : adj[cur])
      if (x != prev) next = x;
    if (next < 0) break;
    seq.push_back(next);
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(seq.size()) != B) throw std::invalid_argument("bag tree is not a path");
  return seq;
}

DecompKind kind_of(const Decomposition& d) {
  if (std::holds_alternative<TreedepthDecomposition>(d)) return DecompKind::td;
  return std::get<TreeDecomposition>(d).is_path ? DecompKind::pw : DecompKind::tw;
}

int measure(const Decomposition& d) {
  if (auto* t = std::get_if<TreedepthDecomposition>(&d)) return t->depth();
  return std::get<TreeDecomposition>(d).width();
}

}  // namespace tdl
