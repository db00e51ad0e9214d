#include <algorithm>
#include <string>

#include "tdl/decomp/decomposition.hpp"

namespace tdl {

namespace {

Validation fail(std::string w) { return {false, 0, std::move(w)}; }

std::string edge_str(int u, int v) { return std::to_string(u) + " " + std::to_string(v); }

// Connected within the host adjacency restricted to `members` (sorted).
bool connected_subset(const std::vector<std::vector<int>>& adj, const std::vector<int>& members, int offset) {
  if (members.size() <= 1) return true;
  std::vector<char> in(adj.size(), 0), seen(adj.size(), 0);
  for (int m : members) in[m - offset] = 1;
  std::vector<int> stack{members[0] - offset};
  seen[members[0] - offset] = 1;
  size_t count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[u])
      if (in[w] && !seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == members.size();
}

}  // namespace

Validation validate_tree_or_path(const Graph& g, const TreeDecomposition& d) {
  const int B = d.num_bags();
  if (B == 0) return fail("no bags");
  for (int t = 0; t < B; ++t)
    for (int v : d.bags[t])
      if (v < 1 || v > g.n()) return fail("bag " + std::to_string(t + 1) + " has vertex " + std::to_string(v) + " out of range");
  if (static_cast<int>(d.tree_edges.size()) != B - 1) return fail("bag graph is not a tree: " + std::to_string(d.tree_edges.size()) + " edges for " + std::to_string(B) + " bags");
  std::vector<std::vector<int>> adj;
  try {
    adj = d.bag_adjacency();
  } catch (const std::exception&) {
    return fail("bag-tree edge out of range");
  }
  std::vector<int> all(B);
  for (int t = 0; t < B; ++t) all[t] = t;
  if (!connected_subset(adj, all, 0)) return fail("bag graph is not connected");
  if (d.is_path)
    for (int t = 0; t < B; ++t)
      if (adj[t].size() > 2) return fail("bag " + std::to_string(t + 1) + " has degree " + std::to_string(adj[t].size()) + " in a path decomposition");

  std::vector<std::vector<int>> occ(g.n() + 1);
  for (int t = 0; t < B; ++t)
    for (int v : d.bags[t])
      if (occ[v].empty() || occ[v].back() != t) occ[v].push_back(t);
  for (int v = 1; v <= g.n(); ++v)
    if (occ[v].empty()) return fail("vertex " + std::to_string(v) + " uncovered");
  for (auto [u, v] : g.edges()) {
    bool ok = false;
    for (int t : occ[u])
      if (std::binary_search(d.bags[t].begin(), d.bags[t].end(), v)) {
        ok = true;
        break;
      }
    if (!ok) return fail("edge " + edge_str(u, v) + " uncovered");
  }
  for (int v = 1; v <= g.n(); ++v) {
    std::vector<int> o = occ[v];
    std::sort(o.begin(), o.end());
    if (!connected_subset(adj, o, 0)) return fail("occurrences of vertex " + std::to_string(v) + " disconnected");
  }
  return {true, d.width(), ""};
}

Validation validate_tdd(const Graph& g, const TreedepthDecomposition& d) {
  if (d.n() != g.n()) return fail("decomposition has " + std::to_string(d.n()) + " vertices, graph has " + std::to_string(g.n()));
  for (int v = 1; v <= d.n(); ++v)
    if (d.parent[v] < 0 || d.parent[v] > d.n()) return fail("parent of " + std::to_string(v) + " out of range");
  // cycle detection by colouring the parent chains
  std::vector<char> state(d.n() + 1, 0);
  for (int v = 1; v <= d.n(); ++v) {
    std::vector<int> chain;
    int u = v;
    while (u != 0 && state[u] == 0) {
      state[u] = 1;
      chain.push_back(u);
      u = d.parent[u];
    }
    if (u != 0 && state[u] == 1) return fail("parent cycle through " + std::to_string(u));
    for (int w : chain) state[w] = 2;
  }
  auto depth = d.node_depths();
  for (auto [u, v] : g.edges()) {
    int a = depth[u] < depth[v] ? u : v, b = a == u ? v : u;
    if (!d.is_ancestor(a, b)) return fail("edge " + edge_str(u, v) + " unrelated");
  }
  return {true, g.n() == 0 ? 0 : *std::max_element(depth.begin(), depth.end()), ""};
}

Validation validate_decomposition(const Graph& g, const Decomposition& d) {
  if (auto* t = std::get_if<TreedepthDecomposition>(&d)) return validate_tdd(g, *t);
  return validate_tree_or_path(g, std::get<TreeDecomposition>(d));
}

Validation validate_deconstruction(const Graph& g, const Deconstruction& dc) {
  const Graph& h = dc.host;
  if (static_cast<int>(dc.bags.size()) != h.n() + 1) return fail("bag family size does not match host graph");
  std::vector<std::vector<int>> bags(dc.bags);
  for (int x = 1; x <= h.n(); ++x) {
    std::sort(bags[x].begin(), bags[x].end());
    bags[x].erase(std::unique(bags[x].begin(), bags[x].end()), bags[x].end());
    for (int v : bags[x])
      if (v < 1 || v > g.n()) return fail("bag " + std::to_string(x) + " has vertex " + std::to_string(v) + " out of range");
  }
  std::vector<std::vector<int>> host_of(g.n() + 1);
  for (int x = 1; x <= h.n(); ++x)
    for (int v : bags[x]) host_of[v].push_back(x);
  for (int v = 1; v <= g.n(); ++v)
    if (host_of[v].empty()) return fail("vertex " + std::to_string(v) + " uncovered");
  auto in_bag = [&](int x, int v) { return std::binary_search(bags[x].begin(), bags[x].end(), v); };
  for (auto [u, v] : g.edges()) {
    bool ok = false;
    for (int x : host_of[u]) {
      if (in_bag(x, v)) {
        ok = true;
        break;
      }
      for (int y : h.neighbors(x))
        if (in_bag(y, v)) {
          ok = true;
          break;
        }
      if (ok) break;
    }
    if (!ok) return fail("edge " + edge_str(u, v) + " uncovered");
  }
  std::vector<std::vector<int>> hadj(h.n() + 1);
  for (int x = 1; x <= h.n(); ++x) hadj[x] = h.neighbors(x);
  for (int v = 1; v <= g.n(); ++v)
    if (!connected_subset(hadj, host_of[v], 0)) return fail("host set of vertex " + std::to_string(v) + " disconnected");
  int w = 0;
  for (int x = 1; x <= h.n(); ++x) {
    w = std::max(w, static_cast<int>(bags[x].size()));
    for (int y : h.neighbors(x)) {
      if (y < x) continue;
      std::vector<int> u;
      std::set_union(bags[x].begin(), bags[x].end(), bags[y].begin(), bags[y].end(), std::back_inserter(u));
      w = std::max(w, static_cast<int>(u.size()));
    }
  }
  return {true, w, ""};
}

}  // namespace tdl
