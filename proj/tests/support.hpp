#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "tdl/core/cnf.hpp"
#include "tdl/core/graph.hpp"
#include "tdl/decomp/decomposition.hpp"

namespace tdl::testing {

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

// Graph built on a random rooted forest of bounded depth; every edge joins an
// ancestor and a descendant, so the forest itself is a valid tdd.
inline std::pair<Graph, TreedepthDecomposition> random_shallow(std::mt19937_64& rng, int n, int depth, double p) {
  TreedepthDecomposition d(n);
  std::vector<int> dep(n + 1, 0);
  for (int v = 1; v <= n; ++v) {
    std::vector<int> cand{0};
    for (int u = 1; u < v; ++u)
      if (dep[u] < depth) cand.push_back(u);
    int par = cand[std::uniform_int_distribution<size_t>(0, cand.size() - 1)(rng)];
    d.parent[v] = par;
    dep[v] = par ? dep[par] + 1 : 1;
  }
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int v = 1; v <= n; ++v)
    for (int a = d.parent[v]; a; a = d.parent[a])
      if (a == d.parent[v] || coin(rng)) g.add_edge(a, v);
  return {g, d};
}

// Tree decomposition from eliminating vertices in the given order.
inline TreeDecomposition elimination_td(const Graph& g, const std::vector<int>& order) {
  const int n = g.n();
  TreeDecomposition d;
  if (n == 0) {
    d.bags.emplace_back();
    return d;
  }
  std::vector<int> pos(n + 1);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<std::vector<char>> adj(n + 1, std::vector<char>(n + 1, 0));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
  std::vector<int> parent_bag(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    std::vector<int> later;
    for (int u = 1; u <= n; ++u)
      if (adj[v][u] && pos[u] > i) later.push_back(u);
    for (int a : later)
      for (int b : later)
        if (a != b) adj[a][b] = 1;
    std::vector<int> bag = later;
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    d.bags.push_back(bag);
    int first = n;
    for (int u : later) first = std::min(first, pos[u]);
    parent_bag[i] = first == n ? (i + 1 < n ? i + 1 : -1) : first;
  }
  for (int i = 0; i < n; ++i)
    if (parent_bag[i] >= 0) d.tree_edges.emplace_back(i, parent_bag[i]);
  d.normalize();
  return d;
}

inline CnfFormula random_cnf(std::mt19937_64& rng, int vars, int clauses, int width) {
  CnfFormula f;
  f.num_vars = vars;
  std::uniform_int_distribution<int> var(1, vars), len(1, width);
  std::bernoulli_distribution sign(0.5);
  for (int i = 0; i < clauses; ++i) {
    Clause c;
    int k = len(rng);
    for (int j = 0; j < k; ++j) c.push_back(sign(rng) ? var(rng) : -var(rng));
    f.add(c);
  }
  return f;
}

// Backtracking 3-colouring with forward checking, branching on a vertex with
// the fewest remaining colours; uncoloured components are solved separately.
// Independent of the decomposition solvers.
inline bool backtrack_three_col(const Graph& g) {
  const int n = g.n();
  std::vector<int> dom(n + 1, 7), col(n + 1, -1), mark(n + 1, 0);
  int stamp = 0;
  auto solve = [&](auto&& self, const std::vector<int>& part) -> bool {
    if (part.empty()) return true;
    // Split into components of uncoloured vertices.
    ++stamp;
    for (int v : part) mark[v] = stamp;
    std::vector<std::vector<int>> comps;
    for (int s : part) {
      if (mark[s] != stamp) continue;
      comps.emplace_back();
      std::vector<int> stack{s};
      mark[s] = -stamp;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        comps.back().push_back(v);
        for (int u : g.neighbors(v))
          if (mark[u] == stamp) mark[u] = -stamp, stack.push_back(u);
      }
    }
    if (comps.size() > 1) {
      for (const auto& c : comps)
        if (!self(self, c)) return false;
      return true;
    }
    int v = 0, best = 4;
    for (int u : part) {
      int sz = __builtin_popcount(dom[u]);
      if (sz < best || (sz == best && g.degree(u) > g.degree(v))) best = sz, v = u;
    }
    if (best == 0) return false;
    std::vector<int> rest;
    for (int u : part)
      if (u != v) rest.push_back(u);
    for (int c = 0; c < 3; ++c) {
      if (!(dom[v] >> c & 1)) continue;
      col[v] = c;
      std::vector<int> touched;
      for (int u : g.neighbors(v))
        if (col[u] < 0 && (dom[u] >> c & 1)) dom[u] &= ~(1 << c), touched.push_back(u);
      bool ok = self(self, rest);
      for (int u : touched) dom[u] |= 1 << c;
      col[v] = -1;
      if (ok) return true;
    }
    return false;
  };
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i + 1;
  return solve(solve, all);
}

// Maximum independent set by branching on a highest-degree vertex.
inline int branch_max_is(const Graph& g) {
  const int n = g.n();
  auto rec = [&](auto&& self, std::vector<char>& alive) -> int {
    int best_v = 0, best_d = -1, count = 0;
    for (int v = 1; v <= n; ++v) {
      if (!alive[v]) continue;
      ++count;
      int d = 0;
      for (int u : g.neighbors(v)) d += alive[u];
      if (d > best_d) best_d = d, best_v = v;
    }
    if (count == 0) return 0;
    if (best_d == 0) return count;
    // A vertex of degree at most one is always safe to take.
    for (int v = 1; v <= n; ++v) {
      if (!alive[v]) continue;
      int d = 0;
      for (int u : g.neighbors(v)) d += alive[u];
      if (d > 1) continue;
      std::vector<int> removed{v};
      alive[v] = 0;
      for (int u : g.neighbors(v))
        if (alive[u]) alive[u] = 0, removed.push_back(u);
      int r = 1 + self(self, alive);
      for (int u : removed) alive[u] = 1;
      return r;
    }
    alive[best_v] = 0;
    int without = self(self, alive);
    std::vector<int> removed;
    for (int u : g.neighbors(best_v))
      if (alive[u]) alive[u] = 0, removed.push_back(u);
    int with = 1 + self(self, alive);
    for (int u : removed) alive[u] = 1;
    alive[best_v] = 1;
    return std::max(with, without);
  };
  std::vector<char> alive(n + 1, 1);
  return rec(rec, alive);
}

inline long long ceil_log2(long long x) {
  long long k = 0;
  while ((1LL << k) < x) ++k;
  return k;
}

}  // namespace tdl::testing
