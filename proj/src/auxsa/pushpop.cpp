#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "tdl/auxsa/auxsa.hpp"
#include "tdl/decomp/transform.hpp"

namespace tdl {
namespace {

PushPopTree tree_from(const std::vector<StackOp>& ops, bool allow_open) {
  PushPopTree t;
  int cur = 0;
  for (StackOp op : ops) {
    if (op == StackOp::push) {
      t.parent.push_back(cur);
      cur = t.size() - 1;
    } else if (op == StackOp::pop) {
      if (cur == 0) throw std::invalid_argument("pop below the root");
      cur = t.parent[cur];
    }
  }
  if (cur != 0 && !allow_open) throw std::invalid_argument("unbalanced push/pop sequence");
  return t;
}

std::vector<int> preorder(const PushPopTree& t) {
  auto ch = t.children();
  std::vector<int> order, stack{0};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (auto it = ch[v].rbegin(); it != ch[v].rend(); ++it) stack.push_back(*it);
  }
  return order;
}

// First `len` bits of num/den in [0, 1).
std::string binary_fraction(long long num, long long den, int len) {
  std::string s;
  for (int i = 0; i < len; ++i) {
    num *= 2;
    bool bit = num >= den;
    if (bit) num -= den;
    s.push_back(bit ? '1' : '0');
  }
  return s;
}

}  // namespace

std::vector<std::vector<int>> PushPopTree::children() const {
  std::vector<std::vector<int>> ch(parent.size());
  for (int v = 1; v < size(); ++v) ch[parent[v]].push_back(v);
  return ch;
}

int PushPopTree::depth() const {
  std::vector<int> d(parent.size(), 0);
  int best = 0;
  for (int v : preorder(*this)) {
    if (v) d[v] = d[parent[v]] + 1;
    best = std::max(best, d[v]);
  }
  return best;
}

PushPopTree pushpop_tree_of(const std::vector<StackOp>& ops) { return tree_from(ops, false); }

PushPopTree pushpop_tree_of(const StackMachine& m, const RunTranscript& t) {
  std::vector<StackOp> ops;
  for (int i : t.moves) ops.push_back(m.tm.transitions[i].op);
  return tree_from(ops, true);
}

std::vector<StackOp> canonical_ops(const PushPopTree& t) {
  auto ch = t.children();
  std::vector<StackOp> ops;
  auto walk = [&](auto&& self, int v) -> void {
    for (int c : ch[v]) {
      ops.push_back(StackOp::push);
      self(self, c);
      ops.push_back(StackOp::pop);
    }
  };
  walk(walk, 0);
  return ops;
}

bool is_full_binary(const PushPopTree& t, int depth) {
  if (depth < 0 || depth > 30 || t.size() != (1 << (depth + 1)) - 1) return false;
  auto ch = t.children();
  std::vector<int> d(t.size(), 0);
  for (int v : preorder(t)) {
    if (v) d[v] = d[t.parent[v]] + 1;
    size_t want = d[v] < depth ? 2 : 0;
    if (ch[v].size() != want) return false;
  }
  return true;
}

// Each child gets the Gilbert-Moore code of its subtree size among its
// siblings: the first ceil(lg(W/w)) + 1 bits of the midpoint of its interval.
// The codes are prefix-free and ordered, and a root-to-node path of depth d
// costs at most lg|t| + 2d bits.
Embedding embed_full_binary(const PushPopTree& t) {
  const int n = t.size();
  if (t.depth() > 62 || (1LL << t.depth()) > n) throw std::invalid_argument("tree deeper than lg of its size");
  Embedding e;
  e.target_depth = 4 * ceil_lg(n);
  e.image.assign(n, "");
  auto ch = t.children();
  std::vector<long long> size(n, 1);
  auto order = preorder(t);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (*it) size[t.parent[*it]] += size[*it];
  for (int v : order) {
    long long total = size[v] - 1, prefix = 0;
    for (int c : ch[v]) {
      int len = ceil_lg((total + size[c] - 1) / size[c]) + 1;
      e.image[c] = e.image[v] + binary_fraction(2 * prefix + size[c], 2 * total, len);
      prefix += size[c];
    }
  }
  return e;
}

std::string check_embedding(const PushPopTree& t, const Embedding& e) {
  const int n = t.size();
  if (static_cast<int>(e.image.size()) != n) return "image size mismatch";
  if (e.target_depth != 4 * ceil_lg(n)) return "target depth is not 4*ceil(lg n)";
  for (int v = 0; v < n; ++v) {
    if (static_cast<int>(e.image[v].size()) > e.target_depth)
      return "node " + std::to_string(v) + " maps below the target depth";
    if (e.image[v].find_first_not_of("01") != std::string::npos) return "bad path for node " + std::to_string(v);
  }
  std::vector<std::vector<bool>> anc(n, std::vector<bool>(n, false));
  for (int v = 1; v < n; ++v)
    for (int a = t.parent[v]; a >= 0; a = t.parent[a]) anc[a][v] = true;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (e.image[u] == e.image[v]) return "nodes " + std::to_string(u) + " and " + std::to_string(v) + " collide";
      bool img = e.image[u].size() < e.image[v].size() && e.image[v].starts_with(e.image[u]);
      if (img != anc[u][v])
        return "ancestry of " + std::to_string(u) + " over " + std::to_string(v) + " not preserved";
    }
  // Preorder of the binary tree is lexicographic order of the paths.
  std::vector<int> by_image(n);
  std::iota(by_image.begin(), by_image.end(), 0);
  std::sort(by_image.begin(), by_image.end(), [&](int a, int b) { return e.image[a] < e.image[b]; });
  if (by_image != preorder(t)) return "traversal order not preserved";
  return "";
}

}  // namespace tdl
