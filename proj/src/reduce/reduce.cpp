#include "tdl/reduce/reduce.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "tdl/core/codec.hpp"
#include "tdl/decomp/transform.hpp"

namespace tdl {
namespace {

void require_valid(const Graph& g, const Decomposition& d, const char* what) {
  Validation v = validate_decomposition(g, d);
  if (!v.valid) throw std::invalid_argument(std::string(what) + ": " + v.witness);
}

void require_3cnf(const CnfFormula& f) {
  f.validate();
  if (f.max_clause_size() > 3) throw std::invalid_argument("formula is not 3-CNF");
}

Clause padded(const Clause& c) {
  Clause p = c;
  while (p.size() < 3) p.push_back(c.front());
  return p;
}

ReductionOutput finish(ReductionOutput r, int in, int constant, bool additive = false) {
  Graph g = target_graph(r);
  Validation v = validate_decomposition(g, r.decomposition);
  if (!v.valid) throw std::logic_error("transported decomposition invalid: " + v.witness);
  r.cert = {in, v.value, constant};
  long long bound = additive ? in + constant : static_cast<long long>(constant) * (in + 1);
  if (v.value > bound)
    throw std::logic_error("width certificate violated: " + std::to_string(v.value) + " > " + std::to_string(bound));
  return r;
}

// Adds the vertices of `top` to every bag, or as a chain above all roots.
Decomposition add_apex(const Decomposition& d, const std::vector<int>& top, int n) {
  if (auto* td = std::get_if<TreeDecomposition>(&d)) {
    TreeDecomposition out = *td;
    if (out.bags.empty()) out.bags.emplace_back();
    for (auto& b : out.bags) b.insert(b.end(), top.begin(), top.end());
    out.normalize();
    return out;
  }
  const auto& tdd = std::get<TreedepthDecomposition>(d);
  TreedepthDecomposition out(n);
  for (int v = 1; v <= tdd.n(); ++v) out.parent[v] = tdd.parent[v] ? tdd.parent[v] : (top.empty() ? 0 : top.back());
  for (size_t i = 1; i < top.size(); ++i) out.parent[top[i]] = top[i - 1];
  return out;
}

int lit_vertex(Lit l) { return l > 0 ? 2 * l - 1 : -2 * l; }

}  // namespace

Graph target_graph(const ReductionOutput& r) {
  if (auto* g = std::get_if<Graph>(&r.instance)) return *g;
  const auto& f = std::get<CnfFormula>(r.instance);
  return r.incidence ? incidence_graph(f) : primal_graph(f);
}

ReductionOutput cnf_to_ksat(const CnfFormula& f, int k, const Decomposition& d) {
  if (k < 3) throw std::invalid_argument("k must be at least 3");
  f.validate();
  Graph g = primal_graph(f);
  require_valid(g, d, "primal decomposition");

  CnfFormula out;
  out.num_vars = f.num_vars;
  out.named = f.named;
  int biggest = 0;
  for (const Clause& c0 : f.clauses) {
    if (static_cast<int>(c0.size()) <= k) {
      out.add(c0);
      continue;
    }
    Clause c;
    for (Lit l : c0)
      if (std::find(c.begin(), c.end(), l) == c.end()) c.push_back(l);
    if (static_cast<int>(c.size()) <= k) {
      out.add(c);
      continue;
    }
    // (l1..l_{k-1} x), (-x l.. x'), ..., (-x'' rest)
    size_t pos = 0;
    Clause cur;
    int fresh = 0;
    while (c.size() - pos > static_cast<size_t>(k - static_cast<int>(cur.size()))) {
      while (static_cast<int>(cur.size()) < k - 1) cur.push_back(c[pos++]);
      int x = out.new_var();
      ++fresh;
      cur.push_back(x);
      out.add(cur);
      cur = {-x};
    }
    while (pos < c.size()) cur.push_back(c[pos++]);
    out.add(cur);
    biggest = std::max(biggest, fresh);
  }

  // Old edges split across chain clauses stay in the attachment graph.
  Graph g2 = primal_graph(out);
  for (auto [u, v] : g.edges()) g2.add_edge(u, v);
  ReductionOutput r;
  r.decomposition = extend_clique_attached(kind_of(d), g, g2, d, biggest);
  r.instance = std::move(out);
  return finish(std::move(r), measure(d), kCnfToKsatC);
}

ReductionOutput ksat_decomp_convert(GraphSide from, const CnfFormula& f, int k, const Decomposition& d) {
  f.validate();
  if (k < 1 || static_cast<int>(f.max_clause_size()) > k) throw std::invalid_argument("clause wider than k");
  Graph primal = primal_graph(f);
  Graph inc = incidence_graph(f);
  ReductionOutput r;
  if (from == GraphSide::primal) {
    require_valid(primal, d, "primal decomposition");
    // Primal plus clause vertices: each clause vertex hangs on its clause clique.
    Graph g2 = primal;
    for (size_t i = 0; i < f.clauses.size(); ++i) {
      int c = g2.add_vertex();
      for (Lit l : f.clauses[i]) g2.add_edge(c, std::abs(l));
    }
    r.decomposition = extend_clique_attached(kind_of(d), primal, g2, d, 1);
    r.incidence = true;
  } else {
    require_valid(inc, d, "incidence decomposition");
    Deconstruction dc;
    dc.host = inc;
    dc.bags.assign(static_cast<size_t>(inc.n()) + 1, {});
    for (int v = 1; v <= f.num_vars; ++v) dc.bags[v] = {v};
    for (size_t i = 0; i < f.clauses.size(); ++i) {
      auto& b = dc.bags[f.num_vars + 1 + i];
      for (Lit l : f.clauses[i]) b.push_back(std::abs(l));
      std::sort(b.begin(), b.end());
      b.erase(std::unique(b.begin(), b.end()), b.end());
    }
    r.decomposition = lift_via_deconstruction(kind_of(d), primal, dc, d);
  }
  r.instance = f;
  return finish(std::move(r), measure(d), k);
}

ReductionOutput sat3_to_3col(const CnfFormula& f, const Decomposition& d) {
  require_3cnf(f);
  Graph inc = incidence_graph(f);
  require_valid(inc, d, "incidence decomposition");

  const int nv = f.num_vars, m = static_cast<int>(f.clauses.size());
  const int body = 2 * nv + 6 * m;
  Graph g(body);
  Deconstruction dc;
  dc.host = inc;
  dc.bags.assign(static_cast<size_t>(inc.n()) + 1, {});
  for (int v = 1; v <= nv; ++v) {
    g.add_edge(2 * v - 1, 2 * v);
    dc.bags[v] = {2 * v - 1, 2 * v};
  }
  for (int i = 0; i < m; ++i) {
    Clause c = padded(f.clauses[i]);
    int a1 = 2 * nv + 6 * i + 1, b1 = a1 + 1, o1 = a1 + 2, o1p = a1 + 3, c1 = a1 + 4, o2 = a1 + 5;
    g.add_edge(a1, b1), g.add_edge(a1, o1), g.add_edge(b1, o1);
    g.add_edge(lit_vertex(c[0]), a1), g.add_edge(lit_vertex(c[1]), b1);
    g.add_edge(o1, o1p);
    g.add_edge(o1p, c1), g.add_edge(o1p, o2), g.add_edge(c1, o2);
    g.add_edge(lit_vertex(c[2]), c1);
    dc.bags[nv + 1 + i] = {a1, b1, o1, o1p, c1, o2};
  }
  Decomposition lifted = lift_via_deconstruction(kind_of(d), g, dc, d);

  // Global triangle T, F, B.
  const int t = g.add_vertex(), fv = g.add_vertex(), b = g.add_vertex();
  g.add_edge(t, fv), g.add_edge(t, b), g.add_edge(fv, b);
  for (int v = 1; v <= 2 * nv; ++v) g.add_edge(b, v);
  for (int i = 0; i < m; ++i) {
    int o2 = 2 * nv + 6 * i + 6;
    g.add_edge(o2, fv), g.add_edge(o2, b);
  }
  ReductionOutput r;
  r.decomposition = add_apex(lifted, {t, fv, b}, g.n());
  r.instance = std::move(g);
  return finish(std::move(r), measure(d), kSat3To3colC);
}

ReductionOutput threecol_to_3sat(const Graph& g, const Decomposition& d) {
  require_valid(g, d, "decomposition");
  CnfFormula f;
  f.num_vars = 3 * g.n();
  Deconstruction dc;
  dc.host = g;
  dc.bags.assign(static_cast<size_t>(g.n()) + 1, {});
  for (int v = 1; v <= g.n(); ++v) {
    int x = 3 * v - 2, y = x + 1, z = x + 2;
    f.add({x, y, z});
    f.add({-x, -y});
    f.add({-y, -z});
    f.add({-z, -x});
    dc.bags[v] = {x, y, z};
  }
  for (auto [u, v] : g.edges())
    for (int c = 0; c < 3; ++c) f.add({-(3 * u - 2 + c), -(3 * v - 2 + c)});
  ReductionOutput r;
  r.decomposition = lift_via_deconstruction(kind_of(d), primal_graph(f), dc, d);
  r.instance = std::move(f);
  return finish(std::move(r), measure(d), kThreecolTo3satC);
}

ReductionOutput sat3_to_is(const CnfFormula& f, const Decomposition& d) {
  require_3cnf(f);
  Graph inc = incidence_graph(f);
  require_valid(inc, d, "incidence decomposition");

  const int nv = f.num_vars, m = static_cast<int>(f.clauses.size());
  Graph g(2 * nv + 3 * m);
  Deconstruction dc;
  dc.host = inc;
  dc.bags.assign(static_cast<size_t>(inc.n()) + 1, {});
  for (int v = 1; v <= nv; ++v) {
    g.add_edge(2 * v - 1, 2 * v);
    dc.bags[v] = {2 * v - 1, 2 * v};
  }
  for (int i = 0; i < m; ++i) {
    Clause c = padded(f.clauses[i]);
    int base = 2 * nv + 3 * i;
    for (int j = 1; j <= 3; ++j) {
      g.add_edge(base + j, lit_vertex(-c[j - 1]));
      for (int k = j + 1; k <= 3; ++k) g.add_edge(base + j, base + k);
    }
    dc.bags[nv + 1 + i] = {base + 1, base + 2, base + 3};
  }
  ReductionOutput r;
  r.decomposition = lift_via_deconstruction(kind_of(d), g, dc, d);
  r.instance = std::move(g);
  r.threshold = nv + m;
  return finish(std::move(r), measure(d), kSat3ToIsC);
}

ReductionOutput is_to_vc(const Graph& g, int k, const Decomposition& d) {
  require_valid(g, d, "decomposition");
  ReductionOutput r;
  r.instance = g;
  r.threshold = g.n() - k;
  r.decomposition = d;
  return finish(std::move(r), measure(d), kIsToVcC);
}

ReductionOutput vc_to_ds(const Graph& g, int k, const Decomposition& d) {
  require_valid(g, d, "decomposition");
  for (int v = 1; v <= g.n(); ++v)
    if (g.degree(v) == 0) throw std::invalid_argument("isolated vertex " + std::to_string(v));
  Graph g2 = g;
  for (auto [u, v] : g.edges()) {
    int e = g2.add_vertex();
    g2.add_edge(e, u), g2.add_edge(e, v);
  }
  ReductionOutput r;
  r.decomposition = extend_clique_attached(kind_of(d), g, g2, d, 1);
  r.instance = std::move(g2);
  r.threshold = k;
  return finish(std::move(r), measure(d), kVcToDsC, true);
}

ReductionFiles format_reduction(const ReductionOutput& r) {
  ReductionFiles out;
  if (r.threshold) out.instance = "c threshold " + std::to_string(*r.threshold) + "\n";
  if (auto* g = std::get_if<Graph>(&r.instance))
    out.instance += format_graph(*g);
  else
    out.instance += format_cnf(std::get<CnfFormula>(r.instance));
  out.decomposition = format_decomposition(r.decomposition, target_graph(r).n());
  out.certificate = "c widthcert " + std::to_string(r.cert.input) + " " + std::to_string(r.cert.output) + " " +
                    std::to_string(r.cert.constant) + "\n";
  return out;
}

}  // namespace tdl
