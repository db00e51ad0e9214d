#include "tdl/decomp/transform.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace tdl {

int ceil_lg(long long x) {
  int k = 0;
  while ((1LL << k) < x) ++k;
  return k;
}

long long tree_to_tdd_bound(int width, int n) {
  return static_cast<long long>(kTreeToTddC) * (width + 1) * ceil_lg(std::max(2, n));
}

namespace {

void require(const Validation& v, const char* what) {
  if (!v.valid) throw std::invalid_argument(std::string(what) + ": " + v.witness);
}

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

TreeDecomposition td_to_path(const Graph& g, const TreedepthDecomposition& d) {
  require(validate_tdd(g, d), "invalid tree-depth decomposition");
  TreeDecomposition out;
  out.is_path = true;
  auto ch = d.children();
  std::vector<int> path;
  std::vector<std::pair<int, size_t>> stack;
  auto enter = [&](int u) {
    stack.emplace_back(u, 0);
    path.push_back(u);
    if (ch[u].empty()) {
      std::vector<int> bag(path);
      std::sort(bag.begin(), bag.end());
      out.bags.push_back(std::move(bag));
    }
  };
  for (int r : ch[0]) {
    enter(r);
    while (!stack.empty()) {
      auto& [u, i] = stack.back();
      if (i < ch[u].size()) {
        enter(ch[u][i++]);
      } else {
        stack.pop_back();
        path.pop_back();
      }
    }
  }
  if (out.bags.empty()) out.bags.emplace_back();
  for (int t = 0; t + 1 < out.num_bags(); ++t) out.tree_edges.emplace_back(t, t + 1);
  return out;
}

TreeDecomposition prune_tree_decomposition(const Graph& g, const TreeDecomposition& d) {
  require(validate_tree_or_path(g, d), "invalid tree decomposition");
  const int B = d.num_bags();
  std::vector<std::vector<int>> bags(d.bags);
  for (auto& b : bags) std::sort(b.begin(), b.end());
  std::vector<std::set<int>> adj(B);
  for (auto [a, b] : d.tree_edges) {
    adj[a].insert(b);
    adj[b].insert(a);
  }
  std::vector<char> alive(B, 1);
  // absorb `from` into `into`: into keeps its id, takes the larger bag
  auto absorb = [&](int into, int from, bool take_bag) {
    if (take_bag) bags[into] = bags[from];
    for (int x : adj[from])
      if (x != into) {
        adj[x].erase(from);
        adj[x].insert(into);
        adj[into].insert(x);
      }
    adj[into].erase(from);
    adj[from].clear();
    alive[from] = 0;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    int root = 0;
    while (!alive[root]) ++root;
    std::vector<int> visited(B, 0);
    std::vector<std::pair<int, int>> stack{{root, -1}};
    visited[root] = 1;
    while (!stack.empty()) {
      auto [p, par] = stack.back();
      stack.pop_back();
      if (!alive[p]) continue;
      // children in ascending id; re-scan after every contraction
      bool again = true;
      while (again) {
        again = false;
        for (int c : adj[p]) {
          if (c == par || visited[c]) continue;
          bool c_in_p = subset(bags[c], bags[p]);
          bool p_in_c = subset(bags[p], bags[c]);
          if (c_in_p) {
            absorb(p, c, false);
          } else if (p_in_c) {
            absorb(p, c, true);
          } else {
            continue;
          }
          changed = again = true;
          break;
        }
      }
      // parent check handles the case where p became a superset of its parent's bag
      for (auto it = adj[p].rbegin(); it != adj[p].rend(); ++it)
        if (*it != par && !visited[*it]) {
          visited[*it] = 1;
          stack.emplace_back(*it, p);
        }
    }
    // edges between a bag and its DFS parent are examined from the parent side;
    // a final sweep over all edges keeps the result a fixpoint
    for (int t = 0; t < B && !changed; ++t) {
      if (!alive[t]) continue;
      for (int x : adj[t])
        if (subset(bags[t], bags[x]) || subset(bags[x], bags[t])) {
          changed = true;
          break;
        }
    }
  }
  // renumber in depth-first preorder from the first live bag
  std::vector<int> id(B, -1);
  TreeDecomposition out;
  out.is_path = d.is_path;
  int root = 0;
  while (!alive[root]) ++root;
  std::vector<int> stack{root};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    id[u] = out.num_bags();
    out.bags.push_back(bags[u]);
    for (auto it = adj[u].rbegin(); it != adj[u].rend(); ++it)
      if (id[*it] < 0) stack.push_back(*it);
  }
  for (int t = 0; t < B; ++t)
    if (alive[t])
      for (int x : adj[t])
        if (t < x) out.tree_edges.emplace_back(id[t], id[x]);
  out.normalize();
  long long n = g.n();
  if (out.num_bags() > std::max(1LL, 2 * n * n)) throw std::logic_error("pruned decomposition exceeds 2n^2 bags");
  return out;
}

TreedepthDecomposition tree_to_tdd(const Graph& g, const TreeDecomposition& d0) {
  TreeDecomposition d = prune_tree_decomposition(g, d0);
  const int B = d.num_bags();
  auto adj = d.bag_adjacency();
  TreedepthDecomposition out(g.n());
  std::vector<char> placed(g.n() + 1, 0), removed(B, 0);
  std::vector<int> sub(B, 0), par(B, -1);

  // Collects the component of `start` among non-removed bags.
  auto component = [&](int start) {
    std::vector<int> comp{start};
    par[start] = -1;
    for (size_t i = 0; i < comp.size(); ++i)
      for (int x : adj[comp[i]])
        if (!removed[x] && x != par[comp[i]]) {
          par[x] = comp[i];
          comp.push_back(x);
        }
    return comp;
  };

  std::function<void(int, int)> rec = [&](int start, int anchor) {
    auto comp = component(start);
    const int total = static_cast<int>(comp.size());
    for (int i = total - 1; i >= 0; --i) {
      int u = comp[i];
      sub[u] = 1;
      for (int x : adj[u])
        if (!removed[x] && x != par[u]) sub[u] += sub[x];
    }
    int best = -1, best_val = total + 1;
    for (int u : comp) {
      int worst = total - sub[u];
      for (int x : adj[u])
        if (!removed[x] && x != par[u]) worst = std::max(worst, sub[x]);
      if (worst < best_val || (worst == best_val && u < best)) {
        best = u;
        best_val = worst;
      }
    }
    int c = best;
    for (int v : d.bags[c])
      if (!placed[v]) {
        placed[v] = 1;
        out.parent[v] = anchor;
        anchor = v;
      }
    removed[c] = 1;
    for (int x : adj[c])
      if (!removed[x]) rec(x, anchor);
  };
  rec(0, 0);
  return out;
}

TreedepthDecomposition dfs_tdd(const Graph& g) {
  TreedepthDecomposition out(g.n());
  std::vector<char> seen(g.n() + 1, 0);
  for (int r = 1; r <= g.n(); ++r) {
    if (seen[r]) continue;
    seen[r] = 1;
    std::vector<std::pair<int, size_t>> stack{{r, 0}};
    while (!stack.empty()) {
      auto& [u, i] = stack.back();
      const auto& nb = g.neighbors(u);
      while (i < nb.size() && seen[nb[i]]) ++i;
      if (i == nb.size()) {
        stack.pop_back();
        continue;
      }
      int v = nb[i++];
      seen[v] = 1;
      out.parent[v] = u;
      stack.emplace_back(v, 0);
    }
  }
  return out;
}

Decomposition lift_via_deconstruction(DecompKind kind, const Graph& g, const Deconstruction& dc, const Decomposition& dh) {
  auto vdc = validate_deconstruction(g, dc);
  require(vdc, "invalid deconstruction");
  auto vdh = validate_decomposition(dc.host, dh);
  require(vdh, "invalid host decomposition");
  DecompKind hk = kind_of(dh);
  if ((kind == DecompKind::td) != (hk == DecompKind::td) || (kind == DecompKind::pw && hk != DecompKind::pw))
    throw std::invalid_argument(std::string("kind ") + kind_name(kind) + " does not match host decomposition " + kind_name(hk));
  const long long w = vdc.value;
  if (kind != DecompKind::td) {
    const auto& th = std::get<TreeDecomposition>(dh);
    TreeDecomposition out;
    out.is_path = kind == DecompKind::pw;
    out.tree_edges = th.tree_edges;
    for (const auto& bag : th.bags) {
      std::vector<int> u;
      for (int h : bag) u.insert(u.end(), dc.bags[h].begin(), dc.bags[h].end());
      std::sort(u.begin(), u.end());
      u.erase(std::unique(u.begin(), u.end()), u.end());
      out.bags.push_back(std::move(u));
    }
    out.normalize();
    if (out.width() > w * (vdh.value + 1)) throw std::logic_error("lifted width exceeds w*(w_h+1)");
    return out;
  }
  const auto& th = std::get<TreedepthDecomposition>(dh);
  auto hdepth = th.node_depths();
  auto lca = [&](int a, int b) {
    while (hdepth[a] > hdepth[b]) a = th.parent[a];
    while (hdepth[b] > hdepth[a]) b = th.parent[b];
    while (a != b) {
      a = th.parent[a];
      b = th.parent[b];
    }
    return a;
  };
  const int hn = dc.host.n();
  std::vector<int> where(g.n() + 1, 0);
  for (int h = 1; h <= hn; ++h)
    for (int v : dc.bags[h]) where[v] = where[v] ? lca(where[v], h) : h;
  std::vector<std::vector<int>> M(hn + 1);
  for (int v = 1; v <= g.n(); ++v) {
    if (where[v] == 0) throw std::logic_error("vertex lost in lift");
    M[where[v]].push_back(v);
  }
  TreedepthDecomposition out(g.n());
  auto ch = th.children();
  std::vector<std::pair<int, int>> stack;  // host node, anchor vertex
  for (auto it = ch[0].rbegin(); it != ch[0].rend(); ++it) stack.emplace_back(*it, 0);
  while (!stack.empty()) {
    auto [t, anchor] = stack.back();
    stack.pop_back();
    for (int v : M[t]) {
      out.parent[v] = anchor;
      anchor = v;
    }
    for (auto it = ch[t].rbegin(); it != ch[t].rend(); ++it) stack.emplace_back(*it, anchor);
  }
  if (out.depth() > w * vdh.value) throw std::logic_error("lifted depth exceeds w*depth");
  return out;
}

Decomposition extend_clique_attached(DecompKind kind, const Graph& g, const Graph& g2, const Decomposition& d, int c) {
  auto vd = validate_decomposition(g, d);
  require(vd, "invalid decomposition");
  if (kind != kind_of(d) && !(kind == DecompKind::tw && kind_of(d) == DecompKind::pw))
    throw std::invalid_argument("kind does not match decomposition");
  const int n = g.n(), n2 = g2.n();
  if (n2 < n) throw std::invalid_argument("g has more vertices than g2");
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (g.has_edge(u, v) != g2.has_edge(u, v))
        throw std::invalid_argument("g is not the subgraph of g2 induced by its vertices");
  // components of g2 - V(g)
  std::vector<int> rest;
  for (int v = n + 1; v <= n2; ++v) rest.push_back(v);
  Graph outside = induced_subgraph(g2, rest);
  struct Comp {
    std::vector<int> vs;
    std::vector<int> nbh;
  };
  std::vector<Comp> comps;
  for (auto& cc : connected_components(outside)) {
    Comp k;
    std::set<int> nb;
    for (int x : cc) {
      int v = x + n;
      k.vs.push_back(v);
      for (int u : g2.neighbors(v))
        if (u <= n) nb.insert(u);
    }
    k.nbh.assign(nb.begin(), nb.end());
    if (static_cast<int>(k.vs.size()) > c)
      throw std::invalid_argument("component of size " + std::to_string(k.vs.size()) + " exceeds c = " + std::to_string(c));
    for (size_t i = 0; i < k.nbh.size(); ++i)
      for (size_t j = i + 1; j < k.nbh.size(); ++j)
        if (!g.has_edge(k.nbh[i], k.nbh[j]))
          throw std::invalid_argument("neighbourhood of component at vertex " + std::to_string(k.vs[0]) + " is not a clique");
    comps.push_back(std::move(k));
  }
  if (kind == DecompKind::td) {
    const auto& t = std::get<TreedepthDecomposition>(d);
    TreedepthDecomposition out(n2);
    std::copy(t.parent.begin(), t.parent.end(), out.parent.begin());
    auto depth = t.node_depths();
    for (auto& k : comps) {
      int anchor = 0;
      for (int u : k.nbh)
        if (anchor == 0 || depth[u] > depth[anchor]) anchor = u;
      for (int v : k.vs) {
        out.parent[v] = anchor;
        anchor = v;
      }
    }
    if (out.depth() > vd.value + c) throw std::logic_error("extended depth exceeds input + c");
    return out;
  }
  const auto& t = std::get<TreeDecomposition>(d);
  auto holds = [&](const std::vector<int>& bag, const std::vector<int>& need) { return subset(need, bag); };
  TreeDecomposition out;
  out.is_path = t.is_path;
  if (!t.is_path) {
    out.bags = t.bags;
    out.tree_edges = t.tree_edges;
    for (auto& k : comps) {
      int host = -1;
      for (int b = 0; b < t.num_bags() && host < 0; ++b)
        if (holds(t.bags[b], k.nbh)) host = b;
      if (host < 0) throw std::logic_error("no bag holds the clique neighbourhood");
      std::vector<int> bag = t.bags[host];
      bag.insert(bag.end(), k.vs.begin(), k.vs.end());
      std::sort(bag.begin(), bag.end());
      out.bags.push_back(std::move(bag));
      out.tree_edges.emplace_back(host, out.num_bags() - 1);
    }
  } else {
    auto seq = path_order(t);
    std::vector<std::vector<std::vector<int>>> extra(seq.size());
    for (auto& k : comps) {
      size_t pos = seq.size();
      for (size_t i = 0; i < seq.size() && pos == seq.size(); ++i)
        if (holds(t.bags[seq[i]], k.nbh)) pos = i;
      if (pos == seq.size()) throw std::logic_error("no bag holds the clique neighbourhood");
      std::vector<int> bag = t.bags[seq[pos]];
      bag.insert(bag.end(), k.vs.begin(), k.vs.end());
      std::sort(bag.begin(), bag.end());
      extra[pos].push_back(std::move(bag));
    }
    for (size_t i = 0; i < seq.size(); ++i) {
      out.bags.push_back(t.bags[seq[i]]);
      for (auto& b : extra[i]) out.bags.push_back(std::move(b));
    }
    for (int b = 0; b + 1 < out.num_bags(); ++b) out.tree_edges.emplace_back(b, b + 1);
  }
  out.normalize();
  if (out.width() > vd.value + c) throw std::logic_error("extended width exceeds input + c");
  return out;
}

}  // namespace tdl
