#pragma once

#include <map>
#include <set>
#include <vector>

#include "tdl/core/turing.hpp"
#include "tdl/gadgets/gadgets.hpp"

namespace tdl::testing {

inline const char* kWriterText = R"(// writes 1 into the current work cell and halts
states: q0 q1
alphabet: 1
init: q0
accept: q1
q0 * * * -> q1 1 S S S
)";

// Copies the input into the work tape (first cell capitalised), walks back,
// then compares the input right-to-left against the work tape left-to-right.
inline const char* kPalindromeText = R"(states: c0 cp rw cmp last acc
alphabet: a b A B
init: c0
accept: acc
c0 _ * * -> acc = S S S
c0 a * * -> cp A R S R
c0 b * * -> cp B R S R
cp a * * -> cp a R S R
cp b * * -> cp b R S R
cp _ * * -> rw = S S L
rw * * a -> rw = S S L
rw * * b -> rw = S S L
rw * * A -> cmp = L S S
rw * * B -> cmp = L S S
cmp a * a -> cmp = L S R
cmp a * A -> cmp = L S R
cmp b * b -> cmp = L S R
cmp b * B -> cmp = L S R
cmp a * a -> last = S S R
cmp a * A -> last = S S R
cmp b * b -> last = S S R
cmp b * B -> last = S S R
last * * _ -> acc = S S S
)";

// Scans the second tape for a 1 and copies it to the work tape.
inline const char* kCopierText = R"(states: q0 q1
alphabet: 1
init: q0
accept: q1
q0 * 1 * -> q1 1 S S S
q0 * _ * -> q0 = S R S
)";

struct Bounds {
  int in_max, stk_max, s;
};

inline bool valid_config(const TuringMachine& m, const Bounds& b, const Config& c) {
  if (c.state < 0 || c.state >= m.num_states()) return false;
  if (c.in < 0 || c.in > b.in_max || c.stk < 0 || c.stk > b.stk_max || c.wk < 0 || c.wk >= b.s) return false;
  if (static_cast<int>(c.work.size()) != b.s) return false;
  for (int x : c.work)
    if (x < 0 || x >= m.num_symbols()) return false;
  return true;
}

// Successors under transitions without a stack operation.
inline std::vector<Config> successors(const TuringMachine& m, const std::vector<int>& alpha,
                                      const std::vector<int>& wbar, const Bounds& b, const Config& c) {
  std::vector<Config> out;
  const int a_in = c.in < static_cast<int>(alpha.size()) ? alpha[c.in] : 0;
  const int a_stk = c.stk < static_cast<int>(wbar.size()) ? wbar[c.stk] : 0;
  const int a_wk = c.work[c.wk];
  for (const auto& t : m.transitions) {
    if (t.op != StackOp::none || t.from != c.state) continue;
    if (!t.reads(a_in, a_stk, a_wk)) continue;
    Config n = c;
    n.state = t.to;
    n.work[c.wk] = t.write_wk == kKeep ? a_wk : t.write_wk;
    n.in += t.d_in;
    n.stk += t.d_stk;
    n.wk += t.d_wk;
    if (n.in < 0 || n.in > b.in_max || n.stk < 0 || n.stk > b.stk_max || n.wk < 0 || n.wk >= b.s) continue;
    out.push_back(n);
  }
  return out;
}

// Configurations reachable from `from` in at most t steps.
inline std::set<Config> reachable(const TuringMachine& m, const std::vector<int>& alpha, const std::vector<int>& wbar,
                                  const Bounds& b, const Config& from, int t) {
  std::set<Config> seen{from};
  std::vector<Config> frontier{from};
  for (int step = 0; step < t && !frontier.empty(); ++step) {
    std::vector<Config> next;
    for (const auto& c : frontier)
      for (auto& d : successors(m, alpha, wbar, b, c))
        if (seen.insert(d).second) next.push_back(d);
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace tdl::testing
