#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "tdl/core/sat.hpp"

namespace tdl {

namespace {

inline int lit_of(Lit l) { return l > 0 ? 2 * l : 2 * (-l) + 1; }
inline int neg(int x) { return x ^ 1; }
inline int var_of(int x) { return x >> 1; }

// Shared watched-literal store. value[x] for literal index x: 1 true, 0 false, -1 unset.
class Engine {
 public:
  explicit Engine(int nv) : nv_(nv), val_(2 * (nv + 1), -1), level_(nv + 1, -1), reason_(nv + 1, -1), watches_(2 * (nv + 1)) {}

  // Returns false when the clause is falsified at level 0 already.
  bool add_clause(std::vector<int> c, bool learnt = false) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (size_t i = 0; i + 1 < c.size(); ++i)
      if (c[i] == neg(c[i + 1])) return true;  // tautology
    if (c.empty()) return false;
    if (c.size() == 1) {
      units_.push_back(c[0]);
      return true;
    }
    int id = static_cast<int>(clauses_.size());
    clauses_.push_back(std::move(c));
    learnt_.push_back(learnt);
    watches_[neg(clauses_[id][0])].push_back(id);
    watches_[neg(clauses_[id][1])].push_back(id);
    return true;
  }

  int value(int x) const { return val_[x]; }
  int level() const { return static_cast<int>(trail_lim_.size()); }

  void assign(int x, int reason) {
    val_[x] = 1;
    val_[neg(x)] = 0;
    level_[var_of(x)] = level();
    reason_[var_of(x)] = reason;
    trail_.push_back(x);
  }

  // Returns conflicting clause id, -1 if none, -2 for a unit conflict.
  int propagate() {
    while (qhead_ < trail_.size()) {
      int p = trail_[qhead_++];  // p became true; clauses watching ~p... we index by the literal that became false
      auto& ws = watches_[p];
      size_t i = 0, j = 0;
      int conflict = -1;
      while (i < ws.size()) {
        int cid = ws[i++];
        auto& c = clauses_[cid];
        int falsified = neg(p);
        if (c[0] == falsified) std::swap(c[0], c[1]);
        if (val_[c[0]] == 1) {
          ws[j++] = cid;
          continue;
        }
        bool moved = false;
        for (size_t k = 2; k < c.size(); ++k)
          if (val_[c[k]] != 0) {
            std::swap(c[1], c[k]);
            watches_[neg(c[1])].push_back(cid);
            moved = true;
            break;
          }
        if (moved) continue;
        ws[j++] = cid;
        if (val_[c[0]] == 0) {
          conflict = cid;
          while (i < ws.size()) ws[j++] = ws[i++];
        } else {
          assign(c[0], cid);
        }
      }
      ws.resize(j);
      if (conflict >= 0) {
        qhead_ = trail_.size();
        return conflict;
      }
    }
    return -1;
  }

  bool load_units() {
    for (int x : units_) {
      if (val_[x] == 0) return false;
      if (val_[x] == -1) assign(x, -1);
    }
    return true;
  }

  void new_level() { trail_lim_.push_back(trail_.size()); }

  void backtrack(int lvl, std::vector<signed char>* phase = nullptr) {
    if (level() <= lvl) return;
    size_t lim = trail_lim_[lvl];
    for (size_t i = trail_.size(); i-- > lim;) {
      int x = trail_[i];
      if (phase) (*phase)[var_of(x)] = static_cast<signed char>((x & 1) ? 0 : 1);
      val_[x] = val_[neg(x)] = -1;
      reason_[var_of(x)] = -1;
      level_[var_of(x)] = -1;
    }
    trail_.resize(lim);
    trail_lim_.resize(lvl);
    qhead_ = std::min(qhead_, trail_.size());
  }

  std::vector<signed char> model() const {
    std::vector<signed char> m(nv_ + 1, 0);
    for (int v = 1; v <= nv_; ++v) m[v] = val_[2 * v] == 1 ? 1 : 0;
    return m;
  }

  int nv_;
  std::vector<signed char> val_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<std::vector<int>> clauses_;
  std::vector<bool> learnt_;
  std::vector<std::vector<int>> watches_;  // watches_[x]: clauses watching literal ~x, triggered when x becomes true
  std::vector<int> trail_;
  std::vector<size_t> trail_lim_;
  size_t qhead_ = 0;
  std::vector<int> units_;
};

bool load(Engine& e, const CnfFormula& f, const Assignment* fixed) {
  for (const auto& c : f.clauses) {
    std::vector<int> lits;
    lits.reserve(c.size());
    for (Lit l : c) {
      if (l == 0 || std::abs(l) > f.num_vars) throw std::invalid_argument("literal out of range");
      lits.push_back(lit_of(l));
    }
    if (!e.add_clause(std::move(lits))) return false;
  }
  if (fixed)
    for (int v = 1; v < static_cast<int>(fixed->value.size()) && v <= f.num_vars; ++v)
      if (fixed->value[v] >= 0) e.units_.push_back(fixed->value[v] ? 2 * v : 2 * v + 1);
  return true;
}

}  // namespace

SatOutcome solve_dpll(const CnfFormula& f, const Assignment* fixed) {
  SatOutcome out;
  Engine e(f.num_vars);
  if (!load(e, f, fixed) || !e.load_units() || e.propagate() != -1) return out;
  // decision stack: literal tried and whether its complement was already tried
  std::vector<std::pair<int, bool>> dec;
  int next_var = 1;
  for (;;) {
    while (next_var <= f.num_vars && e.value(2 * next_var) != -1) ++next_var;
    if (next_var > f.num_vars) {
      out.sat = true;
      out.model = e.model();
      return out;
    }
    ++out.decisions;
    e.new_level();
    dec.emplace_back(2 * next_var, false);
    e.assign(2 * next_var, -1);
    while (e.propagate() != -1) {
      ++out.conflicts;
      while (!dec.empty() && dec.back().second) dec.pop_back();
      if (dec.empty()) return out;
      int lit = dec.back().first;
      dec.back() = {neg(lit), true};
      e.backtrack(static_cast<int>(dec.size()) - 1);
      e.new_level();
      e.assign(neg(lit), -1);
      next_var = 1;
    }
  }
}

namespace {

class Cdcl {
 public:
  explicit Cdcl(Engine& e) : e_(e), act_(e.nv_ + 1, 0.0), phase_(e.nv_ + 1, 0), seen_(e.nv_ + 1, 0), heap_pos_(e.nv_ + 1, -1) {
    for (int v = 1; v <= e_.nv_; ++v) heap_insert(v);
  }

  bool solve(SatOutcome& out) {
    if (!e_.load_units() || e_.propagate() != -1) return false;
    std::uint64_t restart_n = 0;
    for (;;) {
      std::uint64_t budget = 100 * luby(++restart_n);
      int r = search(budget, out);
      if (r != 0) return r > 0;
      backtrack(0);
    }
  }

 private:
  static std::uint64_t luby(std::uint64_t i) {
    std::uint64_t k = 1;
    while ((1ull << k) - 1 < i) ++k;
    while (i != (1ull << k) - 1) {
      i -= (1ull << (k - 1)) - 1;
      k = 1;
      while ((1ull << k) - 1 < i) ++k;
    }
    return 1ull << (k - 1);
  }

  // 1 sat, -1 unsat, 0 restart
  int search(std::uint64_t budget, SatOutcome& out) {
    std::uint64_t local = 0;
    for (;;) {
      int confl = e_.propagate();
      if (confl >= 0) {
        ++out.conflicts;
        ++local;
        if (e_.level() == 0) return -1;
        std::vector<int> learnt;
        int bt = analyze(confl, learnt);
        backtrack(bt);
        if (learnt.size() == 1) {
          e_.assign(learnt[0], -1);
        } else {
          int id = static_cast<int>(e_.clauses_.size());
          e_.clauses_.push_back(learnt);
          e_.learnt_.push_back(true);
          e_.watches_[neg(learnt[0])].push_back(id);
          e_.watches_[neg(learnt[1])].push_back(id);
          e_.assign(learnt[0], id);
        }
        inc_ *= 1.0 / 0.95;
        if (inc_ > 1e100) rescale();
        continue;
      }
      if (local >= budget) return 0;
      int v = pick();
      if (v == 0) {
        out.model = e_.model();
        return 1;
      }
      ++out.decisions;
      e_.new_level();
      e_.assign(phase_[v] ? 2 * v : 2 * v + 1, -1);
    }
  }

  int analyze(int confl, std::vector<int>& learnt) {
    learnt.assign(1, 0);
    int counter = 0;
    int p = -1;
    size_t idx = e_.trail_.size();
    int lvl = e_.level();
    for (;;) {
      const auto& c = e_.clauses_[confl];
      for (size_t k = (p == -1 ? 0 : 1); k < c.size(); ++k) {
        int q = c[k];
        int v = var_of(q);
        if (seen_[v] || e_.level_[v] == 0) continue;
        seen_[v] = 1;
        bump(v);
        if (e_.level_[v] >= lvl)
          ++counter;
        else
          learnt.push_back(q);
      }
      do {
        p = e_.trail_[--idx];
      } while (!seen_[var_of(p)]);
      seen_[var_of(p)] = 0;
      if (--counter == 0) break;
      confl = e_.reason_[var_of(p)];
      // reason clause has p at position 0
      auto& rc = e_.clauses_[confl];
      if (rc[0] != p) std::swap(rc[0], rc[1]);
    }
    learnt[0] = neg(p);
    for (size_t k = 1; k < learnt.size(); ++k) seen_[var_of(learnt[k])] = 0;
    int bt = 0;
    size_t best = 0;
    for (size_t k = 1; k < learnt.size(); ++k)
      if (e_.level_[var_of(learnt[k])] > bt) {
        bt = e_.level_[var_of(learnt[k])];
        best = k;
      }
    if (best) std::swap(learnt[1], learnt[best]);
    return bt;
  }

  void backtrack(int lvl) {
    if (e_.level() <= lvl) return;
    for (size_t i = e_.trail_lim_[lvl]; i < e_.trail_.size(); ++i) {
      int v = var_of(e_.trail_[i]);
      if (heap_pos_[v] < 0) heap_insert(v);
    }
    e_.backtrack(lvl, &phase_);
  }

  int pick() {
    while (!heap_.empty()) {
      int v = heap_pop();
      if (e_.value(2 * v) == -1) return v;
    }
    return 0;
  }

  void bump(int v) {
    act_[v] += inc_;
    if (heap_pos_[v] >= 0) sift_up(heap_pos_[v]);
  }

  void rescale() {
    for (auto& a : act_) a *= 1e-100;
    inc_ *= 1e-100;
  }

  void heap_insert(int v) {
    heap_pos_[v] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    sift_up(heap_pos_[v]);
  }
  int heap_pop() {
    int top = heap_[0];
    heap_pos_[top] = -1;
    int last = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
      heap_[0] = last;
      heap_pos_[last] = 0;
      sift_down(0);
    }
    return top;
  }
  void sift_up(int i) {
    int v = heap_[i];
    while (i > 0) {
      int p = (i - 1) / 2;
      if (act_[heap_[p]] >= act_[v]) break;
      heap_[i] = heap_[p];
      heap_pos_[heap_[i]] = i;
      i = p;
    }
    heap_[i] = v;
    heap_pos_[v] = i;
  }
  void sift_down(int i) {
    int v = heap_[i];
    int n = static_cast<int>(heap_.size());
    for (;;) {
      int c = 2 * i + 1;
      if (c >= n) break;
      if (c + 1 < n && act_[heap_[c + 1]] > act_[heap_[c]]) ++c;
      if (act_[heap_[c]] <= act_[v]) break;
      heap_[i] = heap_[c];
      heap_pos_[heap_[i]] = i;
      i = c;
    }
    heap_[i] = v;
    heap_pos_[v] = i;
  }

  Engine& e_;
  std::vector<double> act_;
  std::vector<signed char> phase_;
  std::vector<char> seen_;
  std::vector<int> heap_;
  std::vector<int> heap_pos_;
  double inc_ = 1.0;
};

}  // namespace

SatOutcome solve_cdcl(const CnfFormula& f, const Assignment* fixed) {
  SatOutcome out;
  Engine e(f.num_vars);
  if (!load(e, f, fixed)) return out;
  Cdcl solver(e);
  out.sat = solver.solve(out);
  if (!out.sat) out.model.clear();
  return out;
}

bool check_model(const CnfFormula& f, const std::vector<signed char>& model) {
  if (static_cast<int>(model.size()) < f.num_vars + 1) return false;
  for (const auto& c : f.clauses) {
    bool ok = false;
    for (Lit l : c)
      if ((l > 0) == (model[std::abs(l)] == 1)) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

}  // namespace tdl
