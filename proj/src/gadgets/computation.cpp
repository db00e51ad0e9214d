#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tdl/decomp/transform.hpp"
#include "tdl/gadgets/gadgets.hpp"

namespace tdl {

namespace {

int bits_for(int max_value) { return std::max(1, ceil_lg(static_cast<long long>(max_value) + 1)); }

// value(x) <= c over the given bits (least significant first)
void add_at_most(CnfFormula& f, const std::vector<int>& x, long long c) {
  const int k = static_cast<int>(x.size());
  if (c >= (1LL << k) - 1) return;
  for (int i = 0; i < k; ++i) {
    if ((c >> i) & 1) continue;
    Clause cl{-x[i]};
    for (int j = i + 1; j < k; ++j)
      if ((c >> j) & 1) cl.push_back(-x[j]);
    f.add(cl);
  }
}

void add_equal_if(CnfFormula& f, int guard, int a, int b) {
  f.add({-guard, -a, b});
  f.add({-guard, a, -b});
}

std::vector<int> slice(const std::vector<int>& v, int from, int len) {
  return std::vector<int>(v.begin() + from, v.begin() + from + len);
}

struct StepBuilder {
  CnfFormula& f;
  std::vector<int> locals;

  int fresh() {
    int x = f.new_var();
    locals.push_back(x);
    return x;
  }

  // Next-head bits y from current bits x under move vars mL, mS, mR.
  void head_update(const std::vector<int>& x, const std::vector<int>& y, int mL, int mS, int mR) {
    const int k = static_cast<int>(x.size());
    for (int b = 0; b < k; ++b) add_equal_if(f, mS, x[b], y[b]);
    // carries c[b] for +1 and borrows d[b] for -1; c[0] = d[0] = true
    std::vector<int> c(k + 1, 0), d(k + 1, 0);
    for (int b = 1; b <= k; ++b) {
      c[b] = fresh();
      d[b] = fresh();
      if (b == 1) {
        f.add({-c[1], x[0]});
        f.add({c[1], -x[0]});
        f.add({-d[1], -x[0]});
        f.add({d[1], x[0]});
      } else {
        f.add({-c[b], x[b - 1]});
        f.add({-c[b], c[b - 1]});
        f.add({c[b], -x[b - 1], -c[b - 1]});
        f.add({-d[b], -x[b - 1]});
        f.add({-d[b], d[b - 1]});
        f.add({d[b], x[b - 1], -d[b - 1]});
      }
    }
    auto xor_if = [&](int m, int xb, int carry, int yb) {
      if (carry == 0) {  // constant true: y = not x
        f.add({-m, -xb, -yb});
        f.add({-m, xb, yb});
        return;
      }
      f.add({-m, -xb, -carry, -yb});
      f.add({-m, xb, carry, -yb});
      f.add({-m, xb, -carry, yb});
      f.add({-m, -xb, carry, yb});
    };
    for (int b = 0; b < k; ++b) {
      xor_if(mR, x[b], c[b], y[b]);
      xor_if(mL, x[b], d[b], y[b]);
    }
    f.add({-mR, -c[k]});
    f.add({-mL, -d[k]});
  }
};

void set_bits_if(CnfFormula& f, int guard, const std::vector<int>& bits, int value) {
  for (size_t b = 0; b < bits.size(); ++b) f.add({-guard, ((value >> b) & 1) ? bits[b] : -bits[b]});
}

}  // namespace

std::vector<int> encode_config(const BlockLayout& L, const Config& c) {
  std::vector<int> bits(L.size(), 0);
  if (c.state < 0 || c.state >= L.states) throw std::invalid_argument("state out of range");
  bits[c.state] = 1;
  auto put = [&](int at, int len, int value) {
    if (value < 0 || (len < 31 && value >= (1 << len))) throw std::invalid_argument("value does not fit its field");
    for (int b = 0; b < len; ++b) bits[at + b] = (value >> b) & 1;
  };
  put(L.in_at(), L.in_bits, c.in);
  put(L.stk_at(), L.stk_bits, c.stk);
  put(L.wk_at(), L.wk_bits, c.wk);
  if (static_cast<int>(c.work.size()) != L.cells) throw std::invalid_argument("work tape length mismatch");
  for (int i = 0; i < L.cells; ++i) put(L.cell_at(i), L.sym_bits, c.work[i]);
  return bits;
}

Config decode_config(const BlockLayout& L, const std::vector<int>& bits) {
  Config c;
  c.state = -1;
  for (int q = 0; q < L.states; ++q)
    if (bits[q]) c.state = q;
  auto get = [&](int at, int len) {
    int v = 0;
    for (int b = 0; b < len; ++b) v |= bits[at + b] << b;
    return v;
  };
  c.in = get(L.in_at(), L.in_bits);
  c.stk = get(L.stk_at(), L.stk_bits);
  c.wk = get(L.wk_at(), L.wk_bits);
  for (int i = 0; i < L.cells; ++i) c.work.push_back(get(L.cell_at(i), L.sym_bits));
  return c;
}

long long comp_width_c(const TuringMachine& m) {
  return 2LL * m.num_states() + static_cast<long long>(m.transitions.size()) + 8LL * m.symbol_bits() + 160;
}

long long comp_depth_c(const TuringMachine& m) { return 16LL * kTreeToTddC * comp_width_c(m); }

CompParts add_computation(CnfFormula& f, const TuringMachine& m, const std::vector<int>& alpha, int s, int t, int h,
                          const CompOptions& opt, std::vector<int> u, std::vector<int> v, std::vector<int> w) {
  m.validate();
  if (s < 1 || t < 1 || h < 0) throw std::invalid_argument("computation gadget needs s >= 1, t >= 1, h >= 0");
  const int n = static_cast<int>(alpha.size());
  for (int a : alpha)
    if (a < 0 || a >= m.num_symbols()) throw std::invalid_argument("input symbol out of range");
  if (std::log2(std::max(1, n)) + std::log2(std::max(1, h)) > kCompHypothesisC * s)
    throw std::invalid_argument("hypothesis lg|alpha| + lg h <= " + std::to_string(kCompHypothesisC) + "s violated");
  const int in_max = opt.in_max < 0 ? n : opt.in_max;
  const int stk_max = opt.stk_max < 0 ? h : opt.stk_max;
  const int K = m.symbol_bits();

  CompParts out;
  BlockLayout& L = out.layout;
  L.states = m.num_states();
  L.in_bits = bits_for(in_max);
  L.stk_bits = bits_for(stk_max);
  L.wk_bits = bits_for(s - 1);
  L.cells = s;
  L.sym_bits = K;
  const int S = L.size();

  auto make_block = [&](std::vector<int>& b) {
    if (b.empty())
      for (int i = 0; i < S; ++i) b.push_back(f.new_var());
    if (static_cast<int>(b.size()) != S) throw std::invalid_argument("configuration block size mismatch");
  };
  if (w.empty())
    for (int i = 0; i < h * K; ++i) w.push_back(f.new_var());
  if (static_cast<int>(w.size()) != h * K) throw std::invalid_argument("w block size mismatch");
  std::vector<std::vector<int>> blocks(t + 1);
  make_block(u);
  blocks[0] = u;
  for (int i = 1; i < t; ++i) make_block(blocks[i]);
  make_block(v);
  blocks[t] = v;
  out.u = u;
  out.v = v;
  out.w = w;
  std::vector<int> shared;  // u, v, w
  shared.insert(shared.end(), u.begin(), u.end());
  shared.insert(shared.end(), v.begin(), v.end());
  shared.insert(shared.end(), w.begin(), w.end());
  for (int i = 1; i < t; ++i) out.local.insert(out.local.end(), blocks[i].begin(), blocks[i].end());

  // well-formed blocks
  for (const auto& B : blocks) {
    Clause alo;
    for (int q = 0; q < L.states; ++q) alo.push_back(B[q]);
    f.add(alo);
    for (int a = 0; a < L.states; ++a)
      for (int b = a + 1; b < L.states; ++b) f.add({-B[a], -B[b]});
    add_at_most(f, slice(B, L.in_at(), L.in_bits), in_max);
    add_at_most(f, slice(B, L.stk_at(), L.stk_bits), stk_max);
    add_at_most(f, slice(B, L.wk_at(), L.wk_bits), s - 1);
    for (int c = 0; c < s; ++c) add_at_most(f, slice(B, L.cell_at(c), K), m.num_symbols() - 1);
  }

  std::vector<const Transition*> plain;
  for (const auto& tr : m.transitions)
    if (tr.op == StackOp::none) plain.push_back(&tr);

  for (int i = 0; i < t; ++i) {
    const auto& cur = blocks[i];
    const auto& nxt = blocks[i + 1];
    StepBuilder sb{f, {}};
    std::vector<std::vector<int>> ram_paths;
    std::vector<int> ram_fresh;

    auto ram_tape = [&](int at, int bits, int len, auto leaf_of) {
      std::vector<int> r;
      auto index = slice(cur, at, bits);
      for (int b = 0; b < K; ++b) {
        std::vector<int> leaves, fixed;
        for (int p = 0; p < len; ++p) {
          auto [var, bit] = leaf_of(p, b);
          leaves.push_back(var);
          fixed.push_back(bit);
        }
        auto parts = add_ram(f, index, leaves, fixed);
        r.push_back(parts.tree[0]);
        sb.locals.push_back(parts.tree[0]);
        // root-to-leaf paths of the selector tree
        const size_t N = size_t{1} << bits;
        for (size_t leaf = 0; leaf < N; ++leaf) {
          std::vector<int> path;
          for (size_t node = N - 1 + leaf;; node = (node - 1) / 2) {
            path.push_back(parts.tree[node]);
            if (node == 0) break;
          }
          ram_paths.push_back(path);
        }
        for (int x : parts.fresh)
          if (x != parts.tree[0]) ram_fresh.push_back(x);
      }
      return r;
    };
    auto r_in = ram_tape(L.in_at(), L.in_bits, std::min(n, 1 << L.in_bits),
                         [&](int p, int b) { return std::pair<int, int>(0, (alpha[p] >> b) & 1); });
    auto r_stk = ram_tape(L.stk_at(), L.stk_bits, std::min(h, 1 << L.stk_bits),
                          [&](int p, int b) { return std::pair<int, int>(w[p * K + b], 0); });

    std::vector<int> e(s), r_wk(K), W(K);
    auto wk = slice(cur, L.wk_at(), L.wk_bits);
    for (int c = 0; c < s; ++c) {
      e[c] = sb.fresh();
      Clause back{e[c]};
      for (int b = 0; b < L.wk_bits; ++b) {
        int lit = ((c >> b) & 1) ? wk[b] : -wk[b];
        f.add({-e[c], lit});
        back.push_back(-lit);
      }
      f.add(back);
    }
    for (int b = 0; b < K; ++b) r_wk[b] = sb.fresh();
    for (int b = 0; b < K; ++b) W[b] = sb.fresh();
    for (int c = 0; c < s; ++c)
      for (int b = 0; b < K; ++b) {
        int cell = cur[L.cell_at(c) + b], next = nxt[L.cell_at(c) + b];
        add_equal_if(f, e[c], cell, r_wk[b]);
        add_equal_if(f, e[c], W[b], next);
        f.add({e[c], -cell, next});
        f.add({e[c], cell, -next});
      }

    // move selectors per head: [head][0 = L, 1 = S, 2 = R]
    int mv[3][3];
    const int at[3] = {L.in_at(), L.stk_at(), L.wk_at()};
    const int len[3] = {L.in_bits, L.stk_bits, L.wk_bits};
    for (int hd = 0; hd < 3; ++hd) {
      for (int d = 0; d < 3; ++d) mv[hd][d] = sb.fresh();
      sb.head_update(slice(cur, at[hd], len[hd]), slice(nxt, at[hd], len[hd]), mv[hd][0], mv[hd][1], mv[hd][2]);
    }

    Clause some;
    const int stay = sb.fresh();
    some.push_back(stay);
    for (int q = 0; q < L.states; ++q) add_equal_if(f, stay, cur[q], nxt[q]);
    for (int b = 0; b < K; ++b) add_equal_if(f, stay, r_wk[b], W[b]);
    for (int hd = 0; hd < 3; ++hd) f.add({-stay, mv[hd][1]});
    for (const Transition* tr : plain) {
      const int sel = sb.fresh();
      some.push_back(sel);
      f.add({-sel, cur[tr->from]});
      f.add({-sel, nxt[tr->to]});
      if (tr->read_in != kAny) set_bits_if(f, sel, r_in, tr->read_in);
      if (tr->read_stk != kAny) set_bits_if(f, sel, r_stk, tr->read_stk);
      if (tr->read_wk != kAny) set_bits_if(f, sel, r_wk, tr->read_wk);
      if (tr->write_wk == kKeep)
        for (int b = 0; b < K; ++b) add_equal_if(f, sel, r_wk[b], W[b]);
      else
        set_bits_if(f, sel, W, tr->write_wk);
      const int d[3] = {tr->d_in, tr->d_stk, tr->d_wk};
      for (int hd = 0; hd < 3; ++hd) f.add({-sel, mv[hd][d[hd] + 1]});
    }
    f.add(some);

    std::vector<int> A(cur);
    A.insert(A.end(), nxt.begin(), nxt.end());
    A.insert(A.end(), w.begin(), w.end());
    A.insert(A.end(), sb.locals.begin(), sb.locals.end());
    std::sort(A.begin(), A.end());
    A.erase(std::unique(A.begin(), A.end()), A.end());
    out.bags.push_back(A);
    for (const auto& p : ram_paths) {
      std::vector<int> bag(A);
      bag.insert(bag.end(), p.begin(), p.end());
      std::sort(bag.begin(), bag.end());
      bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
      out.bags.push_back(std::move(bag));
    }
    out.local.insert(out.local.end(), sb.locals.begin(), sb.locals.end());
    for (const auto& p : ram_paths)
      for (int x : p)
        if (!std::binary_search(A.begin(), A.end(), x)) out.local.push_back(x);
    out.local.insert(out.local.end(), ram_fresh.begin(), ram_fresh.end());
  }
  std::sort(out.local.begin(), out.local.end());
  out.local.erase(std::unique(out.local.begin(), out.local.end()), out.local.end());
  std::sort(shared.begin(), shared.end());
  std::vector<int> filtered;
  std::set_difference(out.local.begin(), out.local.end(), shared.begin(), shared.end(), std::back_inserter(filtered));
  out.local = std::move(filtered);
  return out;
}

CompGadget computation_gadget(const TuringMachine& m, const std::vector<int>& alpha, int s, int t, int h,
                              const CompOptions& opt) {
  CnfFormula f;
  CompGadget g;
  // sizes first so the named blocks come before everything else
  CnfFormula probe;
  auto layout = add_computation(probe, m, alpha, s, 1, h, opt).layout;
  std::vector<int> u, v, w;
  for (int i = 1; i <= layout.size(); ++i) u.push_back(f.new_var("u_" + std::to_string(i)));
  for (int i = 1; i <= layout.size(); ++i) v.push_back(f.new_var("v_" + std::to_string(i)));
  for (int i = 1; i <= h * layout.sym_bits; ++i) w.push_back(f.new_var("w_" + std::to_string(i)));
  auto parts = add_computation(f, m, alpha, s, t, h, opt, u, v, w);
  g.layout = parts.layout;
  g.bundle = bundle_from_bags(std::move(f), parts.bags, w);

  const long long n = static_cast<long long>(alpha.size());
  const long long width = g.bundle.path_decomp.width();
  const long long depth = g.bundle.tdd.depth();
  if (width > comp_width_c(m) * (s + h)) throw std::logic_error("computation gadget width bound violated");
  if (depth > comp_depth_c(m) * (s * ceil_lg(n + s + t + h) + h))
    throw std::logic_error("computation gadget depth bound violated");
  return g;
}

}  // namespace tdl
