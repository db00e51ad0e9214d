#include "tdl/core/codec.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tdl {

namespace {

[[noreturn]] void fail(int lineno, const std::string& what) {
  throw std::invalid_argument("line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool header = false;
  int declared_m = 0;
  Graph g;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      int n, m;
      if (header || !(ls >> kind >> n >> m) || kind != "edge" || n < 0 || m < 0) fail(lineno, "bad header");
      g = Graph(n);
      declared_m = m;
      header = true;
    } else if (tag == "e") {
      int u, v;
      if (!header) fail(lineno, "edge before header");
      if (!(ls >> u >> v)) fail(lineno, "bad edge line");
      try {
        if (!g.add_edge(u, v)) fail(lineno, "duplicate edge");
      } catch (const std::invalid_argument& e) {
        fail(lineno, e.what());
      } catch (const std::out_of_range& e) {
        fail(lineno, e.what());
      }
    } else {
      break;  // trailing sections (e.g. deconstruction bags) belong to the caller
    }
  }
  if (!header) throw std::invalid_argument("missing p edge header");
  if (g.m() != declared_m) throw std::invalid_argument("edge count does not match header");
  return g;
}

std::string format_graph(const Graph& g) {
  std::ostringstream o;
  o << "p edge " << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) o << "e " << u << ' ' << v << '\n';
  return o.str();
}

CnfFormula parse_cnf(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool header = false;
  int declared_c = 0;
  CnfFormula f;
  Clause cur;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "c") {
      std::string key, label;
      int idx;
      if (ls >> key && key == "name") {
        if (!(ls >> idx >> label)) fail(lineno, "bad name line");
        f.named[label] = idx;
      }
      continue;
    }
    if (tag == "p") {
      std::string kind;
      int nv, nc;
      if (header || !(ls >> kind >> nv >> nc) || kind != "cnf" || nv < 0 || nc < 0) fail(lineno, "bad header");
      f.num_vars = nv;
      declared_c = nc;
      header = true;
      continue;
    }
    if (!header) fail(lineno, "clause before header");
    std::istringstream cs(line);
    for (long long l; cs >> l;) {
      if (l == 0) {
        if (cur.empty()) fail(lineno, "empty clause");
        f.clauses.push_back(std::move(cur));
        cur.clear();
      } else {
        cur.push_back(static_cast<Lit>(l));
      }
    }
    if (cs.fail() && !cs.eof()) fail(lineno, "non-numeric token");
  }
  if (!header) throw std::invalid_argument("missing p cnf header");
  if (!cur.empty()) throw std::invalid_argument("unterminated final clause");
  if (static_cast<int>(f.clauses.size()) != declared_c) throw std::invalid_argument("clause count does not match header");
  f.validate();
  return f;
}

std::string format_cnf(const CnfFormula& f) {
  std::ostringstream o;
  for (const auto& [label, v] : f.named) o << "c name " << v << ' ' << label << '\n';
  o << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    for (Lit l : c) o << l << ' ';
    o << "0\n";
  }
  return o.str();
}

std::optional<long long> comment_value(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag, k;
    long long v;
    if (ls >> tag >> k && tag == "c" && k == key && ls >> v) return v;
  }
  return std::nullopt;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream o;
  o << in.rdbuf();
  return o.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace tdl
