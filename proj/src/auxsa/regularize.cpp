#include <bit>
#include <deque>
#include <map>
#include <stdexcept>

#include "tdl/auxsa/auxsa.hpp"
#include "tdl/decomp/transform.hpp"

namespace tdl {

RegularityReport check_regular(const StackMachine& m, int n, const RunTranscript* transcript) {
  if (!m.regular) throw std::invalid_argument("machine has no regularity metadata");
  RegularityReport r;
  r.a = r.b = true;
  for (const auto& t : m.tm.transitions) {
    if (t.op == StackOp::none) continue;
    if (r.a && t.op == StackOp::push && static_cast<int>(t.push_block.size()) != m.regular->b) {
      r.a = false;
      r.a_msg = "push of " + std::to_string(t.push_block.size()) + " symbols, block size " +
                std::to_string(m.regular->b) + ": " + format_transition(m.tm, t);
    }
    bool state_only = t.read_in == kAny && t.read_stk == kAny && t.read_wk == kAny && t.write_wk == kKeep &&
                      t.d_in == 0 && t.d_stk == 0 && t.d_wk == 0;
    if (r.b && !state_only) {
      r.b = false;
      r.b_msg = "stack operation touches tapes: " + format_transition(m.tm, t);
    }
  }
  if (transcript) {
    r.c_checked = true;
    const int depth = tree_depth_for(m.regular->c, n);
    if (transcript->configs.empty() || !transcript->configs.back().stack.empty()) {
      r.c_msg = "run does not end with an empty stack";
    } else {
      PushPopTree t = pushpop_tree_of(m, *transcript);
      r.c = is_full_binary(t, depth);
      if (!r.c)
        r.c_msg = "push-pop tree with " + std::to_string(t.size()) + " nodes and depth " + std::to_string(t.depth()) +
                  " is not the full binary tree of depth " + std::to_string(depth);
    }
  }
  return r;
}

namespace {

enum Phase { kSim, kFlush, kReload, kPopReady, kCleanup, kAcc };

struct Abs {
  int phase = kSim;
  int j = 0;  // cells reloaded
  int q = 0;
  std::vector<int> buf;
  int v = 1, k = 0;    // heap node and finished children
  unsigned flags = 0;  // bit i: edge into depth i+1 holds a real block
  int p = 0, ph = 0;   // logical and physical stack heads

  auto operator<=>(const Abs&) const = default;
};

inline constexpr std::size_t kMaxAbstractStates = 2'000'000;

}  // namespace

StackMachine regularize_machine(const StackMachine& m, int s, int n, int c) {
  m.validate();
  if (m.regular) return m;
  if (s < 1 || n < 0 || c < 1) throw std::invalid_argument("regularize needs s >= 1, n >= 0, c >= 1");
  const int L = ceil_lg(std::max(2, n));
  const int b = (s + L - 1) / L;
  const int D = c * L;
  if (D > 24) throw std::invalid_argument("tree too deep");
  const TuringMachine& tm = m.tm;

  StackMachine out;
  out.tm.symbols = tm.symbols;
  std::string dummy_name = "@";
  while (tm.find_symbol(dummy_name) >= 0) dummy_name += "@";
  const int dummy = static_cast<int>(out.tm.symbols.size());
  out.tm.symbols.push_back(dummy_name);
  const std::vector<int> dummy_block(b, dummy);

  auto depth = [](int v) { return static_cast<int>(std::bit_width(static_cast<unsigned>(v))) - 1; };
  auto real_blocks = [](const Abs& a) { return std::popcount(a.flags); };
  auto complete = [&](const Abs& a) { return depth(a.v) == D || a.k == 2; };
  auto top_real = [&](const Abs& a) { return a.v != 1 && ((a.flags >> (depth(a.v) - 1)) & 1u); };
  auto phys = [&](const Abs& a, int p) {
    int idx = p / b;
    unsigned f = a.flags;
    for (int i = 0; i < idx; ++i) f &= f - 1;
    return b * std::countr_zero(f) + p % b;
  };
  auto child = [&](Abs a, bool real) {
    if (real) a.flags |= 1u << depth(a.v);
    a.v = 2 * a.v + a.k;
    a.k = 0;
    return a;
  };
  auto parent = [&](Abs a) {
    a.flags &= ~(1u << (depth(a.v) - 1));
    a.k = a.v % 2 + 1;
    a.v /= 2;
    return a;
  };

  auto name_of = [&](const Abs& a) {
    static const char* tags[] = {"sim", "flush", "reload", "popready", "cleanup", "acc"};
    if (a.phase == kAcc) return std::string("acc");
    std::string o = tags[a.phase];
    if (a.phase == kReload) o += std::to_string(a.j);
    o += "|v" + std::to_string(a.v) + "." + std::to_string(a.k) + "|f";
    for (int i = 0; i < depth(a.v); ++i) o += (a.flags >> i) & 1u ? '1' : '0';
    if (a.phase == kCleanup) return o;
    o += "|" + tm.states[a.q] + "|b";
    for (int x : a.buf) o += "." + tm.symbols[x];
    o += "|p" + std::to_string(a.p) + "|h" + std::to_string(a.ph);
    return o;
  };

  std::map<Abs, int> ids;
  std::vector<Abs> states;
  std::deque<int> queue;
  auto id_of = [&](const Abs& a) {
    auto [it, fresh] = ids.emplace(a, static_cast<int>(states.size()));
    if (fresh) {
      if (states.size() >= kMaxAbstractStates) throw std::length_error("regularize: too many states");
      states.push_back(a);
      out.tm.states.push_back(name_of(a));
      if (a.phase == kAcc) out.tm.accept.push_back(it->second);
      queue.push_back(it->second);
    }
    return it->second;
  };
  auto emit = [&](int from, const Abs& to, int ri, int rs, int rw, int ww, int di, int ds, int dw,
                  StackOp op = StackOp::none, std::vector<int> block = {}) {
    int t = id_of(to);
    out.tm.transitions.push_back({from, t, ri, rs, rw, ww, di, ds, dw, op, std::move(block)});
  };
  auto state_op = [&](int from, const Abs& to, StackOp op, std::vector<int> block = {}) {
    emit(from, to, kAny, kAny, kAny, kKeep, 0, 0, 0, op, std::move(block));
  };
  // Seek the physical head one cell toward target; true if it had to move.
  auto seek = [&](int from, const Abs& a, int target) {
    if (a.ph == target) return false;
    Abs nx = a;
    int d = target > a.ph ? 1 : -1;
    nx.ph += d;
    emit(from, nx, kAny, kAny, kAny, kKeep, 0, d, 0);
    return true;
  };
  auto dummy_ops = [&](int from, const Abs& a) {
    if (depth(a.v) < D && a.k < 2) state_op(from, child(a, false), StackOp::push, dummy_block);
    if (a.v != 1 && complete(a) && !top_real(a)) state_op(from, parent(a), StackOp::pop);
  };

  Abs init;
  init.q = tm.init;
  out.tm.init = id_of(init);

  while (!queue.empty()) {
    const int id = queue.front();
    queue.pop_front();
    const Abs a = states[id];
    const int R = real_blocks(a);
    switch (a.phase) {
      case kSim: {
        if (seek(id, a, a.p < b * R ? phys(a, a.p) : 0)) break;
        if (tm.accepting(a.q)) {
          Abs nx;
          nx.phase = kCleanup;
          nx.v = a.v, nx.k = a.k, nx.flags = a.flags;
          state_op(id, nx, StackOp::none);
          break;
        }
        const int height = b * R + static_cast<int>(a.buf.size());
        for (const Transition& t : tm.transitions) {
          if (t.from != a.q) continue;
          int rs = t.read_stk;
          if (a.p >= b * R) {
            int off = a.p - b * R;
            int sym = off < static_cast<int>(a.buf.size()) ? a.buf[off] : kBlank;
            if (rs != kAny && rs != sym) continue;
            rs = kAny;
          }
          Abs nx = a;
          nx.q = t.to;
          nx.p = a.p + t.d_stk;
          if (nx.p < 0 || nx.p > m.stack_bound) continue;
          if (t.op == StackOp::push) {
            if (height + static_cast<int>(t.push_block.size()) > m.stack_bound) continue;
            nx.buf.insert(nx.buf.end(), t.push_block.begin(), t.push_block.end());
            if (static_cast<int>(nx.buf.size()) >= b) nx.phase = kFlush;
          } else if (t.op == StackOp::pop) {
            if (!nx.buf.empty()) {
              nx.buf.pop_back();
            } else if (R > 0) {
              nx.phase = kReload;
              nx.j = 0;
            } else {
              continue;
            }
          }
          emit(id, nx, t.read_in, rs, t.read_wk, t.write_wk, t.d_in, 0, t.d_wk);
        }
        break;
      }
      case kFlush: {
        dummy_ops(id, a);
        if (depth(a.v) < D && a.k < 2) {
          Abs nx = child(a, true);
          std::vector<int> block(a.buf.begin(), a.buf.begin() + b);
          nx.buf.erase(nx.buf.begin(), nx.buf.begin() + b);
          nx.phase = static_cast<int>(nx.buf.size()) >= b ? kFlush : kSim;
          state_op(id, nx, StackOp::push, block);
        }
        break;
      }
      case kReload: {
        if (seek(id, a, b * (static_cast<int>(std::bit_width(a.flags)) - 1) + a.j)) break;
        for (int sym = 1; sym < tm.num_symbols(); ++sym) {
          Abs nx = a;
          nx.buf.push_back(sym);
          if (++nx.j == b) nx.phase = kPopReady, nx.j = 0;
          emit(id, nx, kAny, sym, kAny, kKeep, 0, 0, 0);
        }
        break;
      }
      case kPopReady: {
        dummy_ops(id, a);
        if (a.v != 1 && complete(a) && top_real(a)) {
          Abs nx = parent(a);
          nx.buf.pop_back();
          nx.phase = kSim;
          state_op(id, nx, StackOp::pop);
        }
        break;
      }
      case kCleanup: {
        if (depth(a.v) < D && a.k < 2) state_op(id, child(a, false), StackOp::push, dummy_block);
        if (a.v != 1 && complete(a)) state_op(id, parent(a), StackOp::pop);
        if (a.v == 1 && a.k == 2) {
          Abs nx;
          nx.phase = kAcc;
          state_op(id, nx, StackOp::none);
        }
        break;
      }
      default:
        break;
    }
  }

  out.work_bound = m.work_bound;
  out.stack_bound = b * D;
  out.regular = RegularMeta{b, c};
  if (m.step_bound) {
    long long tour = 4LL << D;
    long long steps = (m.step_bound + tour) * (2LL * b * D + b + 2);
    out.step_bound = static_cast<int>(std::min<long long>(steps, 1 << 30));
  }
  out.validate();
  return out;
}

}  // namespace tdl
