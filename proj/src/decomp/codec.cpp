#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tdl/core/codec.hpp"
#include "tdl/decomp/decomposition.hpp"

namespace tdl {

namespace {

[[noreturn]] void fail(int lineno, const std::string& what) {
  throw std::invalid_argument("line " + std::to_string(lineno) + ": " + what);
}

bool shape_is_path(const TreeDecomposition& d) {
  if (d.num_bags() == 0) return false;
  auto adj = d.bag_adjacency();
  for (const auto& a : adj)
    if (a.size() > 2) return false;
  return static_cast<int>(d.tree_edges.size()) == d.num_bags() - 1;
}

}  // namespace

std::string format_td(const TreeDecomposition& d, int n) {
  std::ostringstream o;
  int maxb = 0;
  for (const auto& b : d.bags) maxb = std::max(maxb, static_cast<int>(b.size()));
  o << "s td " << d.num_bags() << ' ' << maxb << ' ' << n << '\n';
  for (int t = 0; t < d.num_bags(); ++t) {
    o << "b " << t + 1;
    for (int v : d.bags[t]) o << ' ' << v;
    o << '\n';
  }
  for (auto [a, b] : d.tree_edges) o << a + 1 << ' ' << b + 1 << '\n';
  return o.str();
}

TreeDecomposition parse_td(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0, nb = -1, maxb = 0, n = 0;
  TreeDecomposition d;
  std::vector<char> seen;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "s") {
      std::string kind;
      if (nb >= 0 || !(ls >> kind >> nb >> maxb >> n) || kind != "td" || nb < 0) fail(lineno, "bad header");
      d.bags.assign(nb, {});
      seen.assign(nb, 0);
    } else if (tag == "b") {
      int id;
      if (nb < 0) fail(lineno, "bag before header");
      if (!(ls >> id) || id < 1 || id > nb) fail(lineno, "bad bag id");
      if (seen[id - 1]) fail(lineno, "duplicate bag id");
      seen[id - 1] = 1;
      for (int v; ls >> v;) {
        if (v < 1 || v > n) fail(lineno, "vertex out of range");
        d.bags[id - 1].push_back(v);
      }
      if (!ls.eof()) fail(lineno, "non-numeric token");
      if (static_cast<int>(d.bags[id - 1].size()) > maxb) fail(lineno, "bag exceeds declared maximum size");
    } else {
      std::istringstream es(line);
      int a, b;
      if (nb < 0) fail(lineno, "edge before header");
      if (!(es >> a >> b) || a < 1 || b < 1 || a > nb || b > nb) fail(lineno, "bad bag-tree edge");
      d.tree_edges.emplace_back(a - 1, b - 1);
    }
  }
  if (nb < 0) throw std::invalid_argument("missing s td header");
  d.normalize();
  d.is_path = shape_is_path(d);
  return d;
}

std::string format_tdd(const TreedepthDecomposition& d) {
  std::ostringstream o;
  o << "s tdd " << d.n() << ' ' << d.depth() << '\n';
  for (int v = 1; v <= d.n(); ++v) o << v << ' ' << d.parent[v] << '\n';
  return o.str();
}

TreedepthDecomposition parse_tdd(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0, n = -1, depth = 0;
  TreedepthDecomposition d;
  std::vector<char> seen;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "s") {
      std::string kind;
      if (n >= 0 || !(ls >> kind >> n >> depth) || kind != "tdd" || n < 0) fail(lineno, "bad header");
      d = TreedepthDecomposition(n);
      seen.assign(n + 1, 0);
      continue;
    }
    if (n < 0) fail(lineno, "entry before header");
    std::istringstream es(line);
    int v, p;
    if (!(es >> v >> p) || v < 1 || v > n || p < 0 || p > n) fail(lineno, "bad parent line");
    if (seen[v]) fail(lineno, "duplicate vertex");
    seen[v] = 1;
    d.parent[v] = p;
  }
  if (n < 0) throw std::invalid_argument("missing s tdd header");
  for (int v = 1; v <= n; ++v)
    if (!seen[v]) throw std::invalid_argument("no parent line for vertex " + std::to_string(v));
  return d;
}

std::string format_deconstruction(const Deconstruction& dc) {
  std::ostringstream o;
  o << format_graph(dc.host);
  for (int h = 1; h <= dc.host.n(); ++h) {
    o << "b " << h;
    for (int v : dc.bags[h]) o << ' ' << v;
    o << '\n';
  }
  return o.str();
}

Deconstruction parse_deconstruction(const std::string& text) {
  Deconstruction dc;
  dc.host = parse_graph(text);
  dc.bags.assign(dc.host.n() + 1, {});
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag != "b") continue;
    int h;
    if (!(ls >> h) || h < 1 || h > dc.host.n()) fail(lineno, "bad host vertex");
    for (int v; ls >> v;) dc.bags[h].push_back(v);
    if (!ls.eof()) fail(lineno, "non-numeric token");
  }
  return dc;
}

Decomposition parse_decomposition(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag, kind;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "s" && ls >> kind) {
      if (kind == "td") return parse_td(text);
      if (kind == "tdd") return parse_tdd(text);
    }
    break;
  }
  throw std::invalid_argument("unknown decomposition format");
}

std::string format_decomposition(const Decomposition& d, int n) {
  if (auto* t = std::get_if<TreedepthDecomposition>(&d)) return format_tdd(*t);
  return format_td(std::get<TreeDecomposition>(d), n);
}

}  // namespace tdl
