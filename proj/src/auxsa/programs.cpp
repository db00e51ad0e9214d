#include <algorithm>
#include <bit>
#include <stdexcept>

#include "tdl/auxsa/auxsa.hpp"

namespace tdl {
namespace {

struct Builder {
  TuringMachine tm;

  int q(const std::string& name) { return tm.add_state(name); }
  int s(const std::string& name) { return tm.add_symbol(name); }
  void add(int from, int to, int in, int stk, int wk, int write, int din, int dstk, int dwk,
           StackOp op = StackOp::none, std::vector<int> block = {}) {
    tm.transitions.push_back({from, to, in, stk, wk, write, din, dstk, dwk, op, std::move(block)});
  }
};

StackMachine three_col_program() {
  Builder b;
  const int start = b.q("start"), idle = b.q("idle"), acc = b.q("acc");
  const int D = b.s("d"), U = b.s("u"), Z = b.s("0"), O = b.s("1"), H = b.s("#");
  const int col[3] = {b.s("R"), b.s("G"), b.s("B")};
  b.tm.init = start;
  b.tm.accept = {acc};
  b.add(start, idle, kAny, kAny, kAny, kKeep, 0, 0, 0, StackOp::push, {H});
  b.add(idle, idle, U, kAny, kAny, kKeep, 1, 0, 0, StackOp::pop);
  b.add(idle, acc, kBlank, kAny, kAny, kKeep, 0, 0, 0);
  for (int c = 0; c < 3; ++c) {
    const std::string name = b.tm.symbols[col[c]];
    const int rw = b.q("rw_" + name), chk = b.q("chk_" + name);
    b.add(idle, rw, D, kAny, kAny, kKeep, 1, 0, 0, StackOp::push, {col[c]});
    // rewind to the bottom marker, then walk the ancestors from the root
    for (int x : {col[0], col[1], col[2], kBlank}) b.add(rw, rw, kAny, x, kAny, kKeep, 0, -1, 0);
    b.add(rw, chk, kAny, H, kAny, kKeep, 0, 1, 0);
    b.add(chk, chk, Z, kAny, kAny, kKeep, 1, 1, 0);
    for (int other = 0; other < 3; ++other)
      if (other != c) b.add(chk, chk, O, col[other], kAny, kKeep, 1, 1, 0);
    for (int x : {D, U, kBlank}) b.add(chk, idle, x, kAny, kAny, kKeep, 0, 0, 0);
  }
  StackMachine m;
  m.tm = std::move(b.tm);
  return m;
}

// Input 1^k | <encoding>. The work tape holds # x^k and its head walks left
// once per chosen vertex, stopping at #.
StackMachine max_is_program() {
  Builder b;
  const int start = b.q("start"), load = b.q("load"), idle = b.q("idle"), acc = b.q("acc");
  const int rw = b.q("rw_I"), chk = b.q("chk_I"), skip = b.q("skip_O");
  const int D = b.s("d"), U = b.s("u"), Z = b.s("0"), O = b.s("1"), H = b.s("#");
  const int I = b.s("I"), Out = b.s("O"), X = b.s("x"), Bar = b.s("|");
  b.tm.init = start;
  b.tm.accept = {acc};
  b.add(start, load, kAny, kAny, kAny, H, 0, 0, 1, StackOp::push, {H});
  b.add(load, load, O, kAny, kAny, X, 1, 0, 1);
  b.add(load, idle, Bar, kAny, kAny, kKeep, 1, 0, -1);
  b.add(idle, idle, U, kAny, kAny, kKeep, 1, 0, 0, StackOp::pop);
  b.add(idle, acc, kBlank, kAny, H, kKeep, 0, 0, 0);
  b.add(idle, skip, D, kAny, kAny, kKeep, 1, 0, 0, StackOp::push, {Out});
  b.add(idle, rw, D, kAny, X, kKeep, 1, 0, -1, StackOp::push, {I});
  b.add(idle, rw, D, kAny, H, kKeep, 1, 0, 0, StackOp::push, {I});
  for (int x : {Z, O}) b.add(skip, skip, x, kAny, kAny, kKeep, 1, 0, 0);
  for (int x : {D, U, kBlank}) b.add(skip, idle, x, kAny, kAny, kKeep, 0, 0, 0);
  for (int x : {I, Out, kBlank}) b.add(rw, rw, kAny, x, kAny, kKeep, 0, -1, 0);
  b.add(rw, chk, kAny, H, kAny, kKeep, 0, 1, 0);
  b.add(chk, chk, Z, kAny, kAny, kKeep, 1, 1, 0);
  b.add(chk, chk, O, Out, kAny, kKeep, 1, 1, 0);
  for (int x : {D, U, kBlank}) b.add(chk, idle, x, kAny, kAny, kKeep, 0, 0, 0);
  StackMachine m;
  m.tm = std::move(b.tm);
  return m;
}

}  // namespace

StackMachine make_builtin_program(Builtin kind) {
  StackMachine m = kind == Builtin::three_col ? three_col_program() : max_is_program();
  m.tm.validate();
  return m;
}

std::vector<int> encode_builtin_input(const TuringMachine& tm, const Graph& g, const TreedepthDecomposition& d,
                                      int threshold) {
  Validation v = validate_tdd(g, d);
  if (!v.valid) throw std::invalid_argument("tdd invalid: " + v.witness);
  if (threshold < 0) throw std::invalid_argument("negative threshold");
  std::vector<int> out;
  const int bar = tm.find_symbol("|");
  if (bar >= 0) {
    out.assign(threshold, tm.symbol("1"));
    out.push_back(bar);
  } else if (threshold) {
    throw std::invalid_argument("program takes no threshold");
  }
  const int D = tm.symbol("d"), U = tm.symbol("u"), Z = tm.symbol("0"), O = tm.symbol("1");
  auto ch = d.children();
  std::vector<int> path;
  auto walk = [&](auto&& self, int x) -> void {
    out.push_back(D);
    for (int a : path) out.push_back(g.has_edge(a, x) ? O : Z);
    path.push_back(x);
    for (int c : ch[x]) self(self, c);
    path.pop_back();
    out.push_back(U);
  };
  for (int r : ch[0]) walk(walk, r);
  return out;
}

BuiltinInstance instantiate_builtin(Builtin kind, const Graph& g, const TreedepthDecomposition& d, int threshold) {
  BuiltinInstance r;
  r.machine = make_builtin_program(kind);
  r.input = encode_builtin_input(r.machine.tm, g, d, threshold);
  const int depth = d.depth();
  r.machine.stack_bound = depth + 1;
  r.machine.work_bound = kind == Builtin::three_col ? 1 : threshold + 2;
  const int len = static_cast<int>(r.input.size());
  r.machine.step_bound = 2 + len * (2 * depth + 4) + threshold;
  return r;
}

StackMachine parity_machine(int n) {
  Builder b;
  const int init = b.q("init"), scan = b.q("scan"), e = b.q("e"), o = b.q("o"), acc = b.q("acc");
  const int Z = b.s("0"), O = b.s("1"), H = b.s("#");
  b.tm.init = init;
  b.tm.accept = {acc};
  b.add(init, scan, kAny, kAny, kAny, kKeep, 0, 1, 0, StackOp::push, {H});
  for (int x : {Z, O}) b.add(scan, scan, x, kAny, kAny, kKeep, 1, 1, 0, StackOp::push, {x});
  b.add(scan, e, kBlank, kAny, kAny, kKeep, 0, -1, 0);
  b.add(e, e, kAny, Z, kAny, kKeep, 0, -1, 0, StackOp::pop);
  b.add(e, o, kAny, O, kAny, kKeep, 0, -1, 0, StackOp::pop);
  b.add(o, o, kAny, Z, kAny, kKeep, 0, -1, 0, StackOp::pop);
  b.add(o, e, kAny, O, kAny, kKeep, 0, -1, 0, StackOp::pop);
  b.add(e, acc, kAny, H, kAny, kKeep, 0, 0, 0, StackOp::pop);
  StackMachine m;
  m.tm = std::move(b.tm);
  m.stack_bound = n + 1;
  m.step_bound = 2 * n + 4;
  m.validate();
  return m;
}

// Tour states t<v>.<k>.<p>: at heap node v with k children finished, parity
// p in {E, O, ?}. A '?' state recovers the parity from the bottom cell.
StackMachine regular_parity_machine(int n, int c, bool accept_all) {
  if (n < 0) throw std::invalid_argument("negative input length");
  const int D = tree_depth_for(c, n);
  if (D > 12) throw std::invalid_argument("tree too deep");
  Builder b;
  const int s0 = b.q("s0"), s1 = b.q("s1"), acc = b.q("acc"), rej = b.q("rej");
  const int Z = b.s("0"), O = b.s("1"), E = b.s("E"), Od = b.s("O"), Dm = b.s("D");
  b.tm.init = s0;
  b.tm.accept = {acc};
  const int nodes = (1 << (D + 1)) - 1;
  const char tag[3] = {'E', 'O', '?'};
  auto T = [&](int v, int k, int p) {
    return b.q("t" + std::to_string(v) + "." + std::to_string(k) + "." + std::string(1, tag[p]));
  };
  b.add(s0, s0, Z, kAny, kAny, kKeep, 1, 0, 0);
  b.add(s0, s1, O, kAny, kAny, kKeep, 1, 0, 0);
  b.add(s1, s1, Z, kAny, kAny, kKeep, 1, 0, 0);
  b.add(s1, s0, O, kAny, kAny, kKeep, 1, 0, 0);
  b.add(s0, T(1, 0, 0), kBlank, kAny, kAny, kKeep, 0, 0, 0);
  b.add(s1, T(1, 0, 1), kBlank, kAny, kAny, kKeep, 0, 0, 0);
  for (int v = 1; v <= nodes; ++v) {
    const int depth = static_cast<int>(std::bit_width(static_cast<unsigned>(v))) - 1;
    for (int k = 0; k < 3; ++k) {
      if (depth == D && k > 0) continue;
      for (int p = 0; p < 3; ++p) {
        const int here = T(v, k, p);
        if (p == 2 && v != 1) {
          b.add(here, T(v, k, 0), kAny, E, kAny, kKeep, 0, 0, 0);
          b.add(here, T(v, k, 1), kAny, Od, kAny, kKeep, 0, 0, 0);
        }
        if (depth < D && k < 2 && (v != 1 || p < 2))
          b.add(here, T(2 * v + k, 0, 2), kAny, kAny, kAny, kKeep, 0, 0, 0, StackOp::push,
                {v == 1 ? (p == 0 ? E : Od) : Dm});
        if (v != 1 && (depth == D || k == 2)) b.add(here, T(v / 2, v % 2 + 1, p), kAny, kAny, kAny, kKeep, 0, 0, 0, StackOp::pop);
        if (v == 1 && k == 2 && p < 2)
          b.add(here, (p == 0 || accept_all) ? acc : rej, kAny, kAny, kAny, kKeep, 0, 0, 0);
      }
    }
  }
  StackMachine m;
  m.tm = std::move(b.tm);
  m.stack_bound = D;
  m.step_bound = n + 2;
  m.regular = RegularMeta{1, c};
  m.validate();
  return m;
}

}  // namespace tdl
