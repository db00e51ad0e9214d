#include <algorithm>
#include <bit>
#include <stdexcept>

#include "tdl/auxsa/auxsa.hpp"
#include "tdl/core/cnf.hpp"
#include "tdl/decomp/transform.hpp"

namespace tdl {

CompileResult compile_hardness(const StackMachine& m, const std::vector<int>& input) {
  m.validate();
  const int n = static_cast<int>(input.size());
  if (!m.regular) throw std::invalid_argument("machine has no regularity metadata");
  RegularityReport rep = check_regular(m, n);
  if (!rep.a) throw std::invalid_argument("restriction (a) fails: " + rep.a_msg);
  if (!rep.b) throw std::invalid_argument("restriction (b) fails: " + rep.b_msg);
  if (m.step_bound < 1) throw std::invalid_argument("compile needs a step bound");
  const TuringMachine& tm = m.tm;
  const int b = m.regular->b, D = tree_depth_for(m.regular->c, n), K = tm.symbol_bits();
  const int s = m.work_bound, t = m.step_bound;
  if (D > 10) throw std::invalid_argument("push-pop tree too large");
  if (b * D > m.stack_bound) throw std::invalid_argument("full tree does not fit under the stack bound");
  const CompOptions opt{n, m.stack_bound};

  CompileResult r;
  r.tree_depth = D;
  {
    CnfFormula probe;
    r.layout = add_computation(probe, tm, input, s, 1, 0, opt).layout;
  }
  const BlockLayout& L = r.layout;
  const int S = L.size();
  const int N = (1 << (D + 1)) - 1;
  auto depth = [](int q) { return static_cast<int>(std::bit_width(static_cast<unsigned>(q))) - 1; };
  auto leaf = [&](int q) { return depth(q) == D; };

  CnfFormula f;
  std::vector<std::vector<int>> chain(N + 1);
  auto vars = [&](int q, int count) {
    std::vector<int> v;
    for (int i = 0; i < count; ++i) v.push_back(f.new_var());
    chain[q].insert(chain[q].end(), v.begin(), v.end());
    return v;
  };
  // Blocks live at the node whose stack they see: bpush(c)/apop(c) at the
  // parent of c, apush(c)/bpop(c) and stack(c) at c.
  std::vector<std::vector<int>> stack(N + 1), bpush(N + 1), apush(N + 1), bpop(N + 1), apop(N + 1);
  std::vector<int> init = vars(1, S), fin = vars(1, S);
  for (int q = 1; q <= N; ++q) {
    if (q > 1) {
      stack[q] = vars(q, b * K);
      apush[q] = vars(q, S);
      bpop[q] = vars(q, S);
    }
    if (!leaf(q))
      for (int c : {2 * q, 2 * q + 1}) {
        bpush[c] = vars(q, S);
        apop[c] = vars(q, S);
      }
  }

  auto bits = encode_config(L, Config{tm.init, 0, 0, 0, std::vector<int>(s, kBlank)});
  for (int i = 0; i < S; ++i) f.add({bits[i] ? init[i] : -init[i]});
  r.accept_clause = static_cast<int>(f.clauses.size());
  Clause accepting;
  for (int q : tm.accept) accepting.push_back(fin[q]);
  f.add(accepting);
  r.final_block = fin;

  auto equal_rest = [&](const std::vector<int>& x, const std::vector<int>& y) {
    for (int i = L.states; i < S; ++i) {
      f.add({-x[i], y[i]});
      f.add({x[i], -y[i]});
    }
  };
  for (int c = 2; c <= N; ++c) {
    Clause some_push, some_pop;
    for (const Transition& tr : tm.transitions) {
      if (tr.op == StackOp::push) {
        int sel = vars(c, 1)[0];
        some_push.push_back(sel);
        f.add({-sel, bpush[c][tr.from]});
        f.add({-sel, apush[c][tr.to]});
        for (int i = 0; i < b; ++i)
          for (int j = 0; j < K; ++j) {
            int x = stack[c][i * K + j];
            f.add({-sel, ((tr.push_block[i] >> j) & 1) ? x : -x});
          }
      } else if (tr.op == StackOp::pop) {
        int sel = vars(c, 1)[0];
        some_pop.push_back(sel);
        f.add({-sel, bpop[c][tr.from]});
        f.add({-sel, apop[c][tr.to]});
      }
    }
    f.add(some_push);
    f.add(some_pop);
    equal_rest(bpush[c], apush[c]);
    equal_rest(bpop[c], apop[c]);
  }

  struct Segment {
    int node;
    CompParts parts;
  };
  std::vector<Segment> segments;
  for (int q = 1; q <= N; ++q) {
    std::vector<int> w;
    std::vector<int> path;
    for (int a = q; a > 1; a /= 2) path.push_back(a);
    for (auto it = path.rbegin(); it != path.rend(); ++it) w.insert(w.end(), stack[*it].begin(), stack[*it].end());
    const int h = b * depth(q);
    auto gadget = [&](const std::vector<int>& u, const std::vector<int>& v) {
      segments.push_back({q, add_computation(f, tm, input, s, t, h, opt, u, v, w)});
    };
    const std::vector<int>& enter = q == 1 ? init : apush[q];
    const std::vector<int>& leave = q == 1 ? fin : bpop[q];
    if (leaf(q)) {
      gadget(enter, leave);
    } else {
      gadget(enter, bpush[2 * q]);
      gadget(apop[2 * q], bpush[2 * q + 1]);
      gadget(apop[2 * q + 1], leave);
    }
  }

  // Chains along the tree, each segment's local variables hanging below its
  // node's chain.
  Graph g = primal_graph(f);
  TreedepthDecomposition tdd(f.num_vars);
  std::size_t chain_max = 0;
  for (int q = 1; q <= N; ++q) {
    int last = q == 1 ? 0 : chain[q / 2].back();
    for (int x : chain[q]) {
      tdd.parent[x] = last;
      last = x;
    }
    chain_max = std::max(chain_max, chain[q].size());
  }
  long long local_bound = 0;
  for (const Segment& seg : segments) {
    const std::vector<int>& keep = seg.parts.local;
    if (keep.empty()) continue;
    std::vector<int> id(f.num_vars + 1, 0);
    for (size_t i = 0; i < keep.size(); ++i) id[keep[i]] = static_cast<int>(i) + 1;
    TreeDecomposition rest;
    rest.is_path = true;
    for (const auto& bag : seg.parts.bags) {
      std::vector<int> nb;
      for (int x : bag)
        if (id[x]) nb.push_back(id[x]);
      rest.bags.push_back(std::move(nb));
    }
    for (int i = 0; i + 1 < rest.num_bags(); ++i) rest.tree_edges.emplace_back(i, i + 1);
    rest.normalize();
    Graph h = induced_subgraph(g, keep);
    TreedepthDecomposition inner = tree_to_tdd(h, rest);
    local_bound = std::max(local_bound, tree_to_tdd_bound(rest.width(), h.n()));
    const int attach = chain[seg.node].back();
    for (int i = 1; i <= h.n(); ++i) tdd.parent[keep[i - 1]] = inner.parent[i] ? keep[inner.parent[i] - 1] : attach;
  }
  Validation v = validate_tdd(g, tdd);
  if (!v.valid) throw std::logic_error("compiled tdd invalid: " + v.witness);
  r.depth_bound = static_cast<long long>(D + 1) * static_cast<long long>(chain_max) + local_bound;
  if (tdd.depth() > r.depth_bound)
    throw std::logic_error("compiled tdd depth " + std::to_string(tdd.depth()) + " exceeds " +
                           std::to_string(r.depth_bound));
  r.bundle.path_decomp = td_to_path(g, tdd);
  r.bundle.tdd = std::move(tdd);
  r.bundle.formula = std::move(f);
  return r;
}

}  // namespace tdl
