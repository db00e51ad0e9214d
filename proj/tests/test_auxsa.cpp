#include <random>

#include "doctest.h"
#include "support.hpp"
#include "tdl/auxsa/auxsa.hpp"
#include "tdl/core/oracle.hpp"
#include "tdl/core/sat.hpp"
#include "tdl/decomp/transform.hpp"

using namespace tdl;
using namespace tdl::testing;

namespace {

constexpr int kSteps = 1 << 20;

StackMachine tiny(const std::string& body, const std::string& meta) {
  return parse_stack_machine("states: q0 q1 q2 acc\nalphabet: a\ninit: q0\naccept: acc\nmeta: " + meta + "\n" + body);
}

void dyck(int pairs, std::vector<StackOp>& cur, int open, int used, std::vector<std::vector<StackOp>>& out) {
  if (used == pairs && open == 0) {
    out.push_back(cur);
    return;
  }
  if (used < pairs) {
    cur.push_back(StackOp::push);
    dyck(pairs, cur, open + 1, used + 1, out);
    cur.pop_back();
  }
  if (open > 0) {
    cur.push_back(StackOp::pop);
    dyck(pairs, cur, open - 1, used, out);
    cur.pop_back();
  }
}

std::vector<std::vector<StackOp>> balanced(int pairs) {
  std::vector<std::vector<StackOp>> out;
  std::vector<StackOp> cur;
  dyck(pairs, cur, 0, 0, out);
  return out;
}

std::vector<int> bits_word(const TuringMachine& tm, int n, int mask) {
  std::vector<int> w;
  for (int i = 0; i < n; ++i) w.push_back(tm.symbol((mask >> i) & 1 ? "1" : "0"));
  return w;
}

int max_height(const RunTranscript& t) {
  size_t h = 0;
  for (const auto& c : t.configs) h = std::max(h, c.stack.size());
  return static_cast<int>(h);
}

}  // namespace

TEST_CASE("simulate: initial accepting state") {
  auto m = tiny("", "work=1 stack=1");
  m.tm.init = m.tm.state("acc");
  auto r = simulate(m, {}, 10, 10);
  CHECK(r.accepts);
  REQUIRE(r.witness);
  CHECK(r.witness->moves.empty());
  CHECK(r.witness->configs.size() == 1);
}

TEST_CASE("simulate: push, pop, accept") {
  auto m = tiny("q0 * * * -> q1 = 0 0 0 push:a\nq1 * a * -> q2 = 0 0 0 pop\nq2 * * * -> acc = 0 0 0 -\n",
                "work=1 stack=1");
  auto r = simulate(m, {}, 10, 10);
  REQUIRE(r.accepts);
  CHECK(r.witness->moves == std::vector<int>{0, 1, 2});
  CHECK(max_height(*r.witness) == 1);
  CHECK(replay(m, {}, *r.witness, 10));
  CHECK(format_transcript(m, *r.witness).find("push:a") != std::string::npos);
  auto tree = pushpop_tree_of(m, *r.witness);
  CHECK(tree.size() == 2);
}

TEST_CASE("simulate: stack bound excludes runs") {
  std::string body =
      "q0 * * * -> q1 = 0 0 0 push:a\nq1 * * * -> q2 = 0 0 0 push:a\nq2 * * * -> acc = 0 0 0 push:a\n";
  CHECK(simulate(tiny(body, "work=1 stack=3"), {}, 10, 3).accepts);
  CHECK_FALSE(simulate(tiny(body, "work=1 stack=3"), {}, 10, 2).accepts);
  CHECK_FALSE(simulate(tiny(body, "work=1 stack=2"), {}, 10, 10).accepts);
}

TEST_CASE("simulate: replay rejects a tampered transcript") {
  auto m = parity_machine(3);
  auto in = bits_word(m.tm, 3, 0b101);
  auto r = simulate(m, in, kSteps, 10);
  REQUIRE(r.accepts);
  CHECK(replay(m, in, *r.witness, 10));
  auto bad = *r.witness;
  bad.configs[2].stk += 1;
  CHECK_FALSE(replay(m, in, bad, 10));
  auto again = simulate(m, in, kSteps, 10);
  CHECK(again.accepts);
  CHECK(again.witness->moves == r.witness->moves);
}

TEST_CASE("stack machine text round trip") {
  auto m = regular_parity_machine(3);
  auto back = parse_stack_machine(format_stack_machine(m));
  CHECK(back.tm.transitions == m.tm.transitions);
  CHECK(back.stack_bound == m.stack_bound);
  CHECK(back.work_bound == m.work_bound);
  CHECK(back.step_bound == m.step_bound);
  REQUIRE(back.regular);
  CHECK(back.regular->b == 1);
  CHECK_THROWS_AS(parse_stack_machine("states: a\ninit: a\naccept: a\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_stack_machine("states: a\ninit: a\naccept: a\nmeta: work=0\n"), std::invalid_argument);
}

TEST_CASE("push-pop tree examples") {
  using enum StackOp;
  CHECK(pushpop_tree_of(std::vector<StackOp>{}).size() == 1);
  auto chain = pushpop_tree_of({push, push, pop, pop});
  CHECK(chain.parent == std::vector<int>{-1, 0, 1});
  auto fork = pushpop_tree_of({push, pop, push, pop});
  CHECK(fork.parent == std::vector<int>{-1, 0, 0});
  CHECK(is_full_binary(fork, 1));
  CHECK_FALSE(is_full_binary(chain, 2));
  CHECK_THROWS_AS(pushpop_tree_of({push}), std::invalid_argument);
  CHECK_THROWS_AS(pushpop_tree_of({pop}), std::invalid_argument);
}

TEST_CASE("push-pop tree round trip on all balanced sequences up to length 16") {
  int count = 0;
  for (int pairs = 0; pairs <= 8; ++pairs)
    for (const auto& ops : balanced(pairs)) {
      auto t = pushpop_tree_of(ops);
      CHECK(t.size() == pairs + 1);
      if (canonical_ops(t) != ops) FAIL("round trip failed");
      ++count;
    }
  CHECK(count == 2056);  // Catalan numbers C_0..C_8
}

TEST_CASE("embedding examples") {
  PushPopTree one;
  auto e1 = embed_full_binary(one);
  CHECK(e1.target_depth == 0);
  CHECK(e1.image == std::vector<std::string>{""});
  CHECK(check_embedding(one, e1).empty());

  using enum StackOp;
  auto star = pushpop_tree_of({push, pop, push, pop, push, pop});
  auto e = embed_full_binary(star);
  CHECK(e.target_depth == 8);
  CHECK(check_embedding(star, e).empty());
  for (int v = 1; v < 4; ++v) CHECK(e.image[v].size() >= 1);

  auto deep = pushpop_tree_of({push, push, pop, pop});
  CHECK_THROWS_AS(embed_full_binary(deep), std::invalid_argument);

  auto broken = e;
  broken.image[2] = broken.image[1];
  CHECK_FALSE(check_embedding(star, broken).empty());
  broken = e;
  std::swap(broken.image[1], broken.image[3]);
  CHECK_FALSE(check_embedding(star, broken).empty());
}

TEST_CASE("embedding on all ordered trees with at most 10 nodes") {
  int checked = 0;
  for (int pairs = 0; pairs <= 9; ++pairs)
    for (const auto& ops : balanced(pairs)) {
      auto t = pushpop_tree_of(ops);
      if ((1 << t.depth()) > t.size()) {
        CHECK_THROWS_AS(embed_full_binary(t), std::invalid_argument);
        continue;
      }
      auto e = embed_full_binary(t);
      CHECK(e.target_depth == 4 * ceil_lg(t.size()));
      std::string why = check_embedding(t, e);
      if (!why.empty()) FAIL(why);
      ++checked;
    }
  CHECK(checked > 1000);
}

TEST_CASE("three-colouring program examples") {
  Graph k3(3);
  k3.add_edge(1, 2), k3.add_edge(1, 3), k3.add_edge(2, 3);
  TreedepthDecomposition chain3(3);
  chain3.parent = {0, 0, 1, 2};
  auto inst = instantiate_builtin(Builtin::three_col, k3, chain3);
  auto r = simulate(inst.machine, inst.input, kSteps, inst.machine.stack_bound);
  CHECK(r.accepts);
  CHECK(max_height(*r.witness) <= inst.machine.stack_bound);

  Graph k4 = graph_from_mask(4, 0b111111);
  TreedepthDecomposition chain4(4);
  chain4.parent = {0, 0, 1, 2, 3};
  inst = instantiate_builtin(Builtin::three_col, k4, chain4);
  CHECK_FALSE(simulate(inst.machine, inst.input, kSteps, inst.machine.stack_bound).accepts);

  TreedepthDecomposition bad(3);
  CHECK_THROWS_AS(instantiate_builtin(Builtin::three_col, k3, bad), std::invalid_argument);
}

TEST_CASE("independent-set program examples") {
  Graph p3(3);
  p3.add_edge(1, 2), p3.add_edge(2, 3);
  TreedepthDecomposition d(3);
  d.parent = {0, 2, 0, 2};
  for (int k = 0; k <= 3; ++k) {
    auto inst = instantiate_builtin(Builtin::max_is_threshold, p3, d, k);
    CHECK(simulate(inst.machine, inst.input, kSteps, inst.machine.stack_bound).accepts == (k <= 2));
  }
}

TEST_CASE("builtin programs agree with brute force") {
  std::mt19937_64 rng(41);
  for (int n = 1; n <= 4; ++n)
    for (std::uint64_t mask = 0; mask < (1ULL << (n * (n - 1) / 2)); ++mask) {
      Graph g = graph_from_mask(n, mask);
      auto d = dfs_tdd(g);
      auto col = instantiate_builtin(Builtin::three_col, g, d);
      CHECK(simulate(col.machine, col.input, kSteps, col.machine.stack_bound).accepts == brute_three_col(g));
      int alpha = brute_max_is(g);
      for (int k : {alpha, alpha + 1}) {
        auto is = instantiate_builtin(Builtin::max_is_threshold, g, d, k);
        CHECK(simulate(is.machine, is.input, kSteps, is.machine.stack_bound).accepts == (k <= alpha));
      }
    }
  for (int trial = 0; trial < 30; ++trial) {
    int n = std::uniform_int_distribution<int>(5, 8)(rng);
    auto [g, d] = random_shallow(rng, n, 3, 0.6);
    auto col = instantiate_builtin(Builtin::three_col, g, d);
    auto r = simulate(col.machine, col.input, kSteps, col.machine.stack_bound);
    CHECK(r.accepts == brute_three_col(g));
    CHECK(col.machine.stack_bound == d.depth() + 1);
    int alpha = brute_max_is(g);
    auto is = instantiate_builtin(Builtin::max_is_threshold, g, d, alpha);
    CHECK(simulate(is.machine, is.input, kSteps, is.machine.stack_bound).accepts);
    is = instantiate_builtin(Builtin::max_is_threshold, g, d, alpha + 1);
    CHECK_FALSE(simulate(is.machine, is.input, kSteps, is.machine.stack_bound).accepts);
  }
}

TEST_CASE("check_regular reports each restriction") {
  auto good = regular_parity_machine(2);
  auto rep = check_regular(good, 2);
  CHECK(rep.a);
  CHECK(rep.b);
  CHECK_FALSE(rep.c_checked);

  auto moving = good;
  for (auto& t : moving.tm.transitions)
    if (t.op == StackOp::push) {
      t.d_in = 1;
      break;
    }
  rep = check_regular(moving, 2);
  CHECK(rep.a);
  CHECK_FALSE(rep.b);
  CHECK(rep.b_msg.find("push") != std::string::npos);

  auto wide = good;
  wide.regular->b = 2;
  CHECK_FALSE(check_regular(wide, 2).a);

  // a chain-shaped run: two nested pushes then two pops
  auto m = tiny(
      "q0 * * * -> q1 = 0 0 0 push:a\nq1 * * * -> q2 = 0 0 0 push:a\nq2 * * * -> q1 = 0 0 0 pop\n"
      "q1 * * * -> acc = 0 0 0 pop\n",
      "work=1 stack=2 b=1 c=1");
  auto r = simulate(m, {}, 10, 10);
  REQUIRE(r.accepts);
  rep = check_regular(m, 2, &*r.witness);
  CHECK(rep.c_checked);
  CHECK_FALSE(rep.c);
  CHECK_FALSE(rep.c_msg.empty());

  CHECK_THROWS_AS(check_regular(parity_machine(2), 2), std::invalid_argument);
}

TEST_CASE("regular parity machine follows the full tree") {
  for (int n = 0; n <= 4; ++n) {
    auto m = regular_parity_machine(n);
    for (int mask = 0; mask < (1 << n); ++mask) {
      auto in = bits_word(m.tm, n, mask);
      auto r = simulate(m, in, kSteps, m.stack_bound);
      bool even = std::popcount(static_cast<unsigned>(mask)) % 2 == 0;
      CHECK(r.accepts == even);
      if (r.accepts) {
        auto rep = check_regular(m, n, &*r.witness);
        CHECK(rep.c);
      }
      CHECK(simulate(regular_parity_machine(n, 1, true), in, kSteps, m.stack_bound).accepts);
    }
  }
}

TEST_CASE("regularize keeps the language of the parity machine") {
  for (int n = 0; n <= 6; ++n) {
    auto m = parity_machine(n);
    auto reg = regularize_machine(m, m.stack_bound, n);
    REQUIRE(reg.regular);
    const int L = ceil_lg(std::max(2, n));
    CHECK(reg.regular->b == (m.stack_bound + L - 1) / L);
    auto rep = check_regular(reg, n);
    CHECK(rep.a);
    CHECK(rep.b);
    for (int mask = 0; mask < (1 << n); ++mask) {
      auto in = bits_word(m.tm, n, mask);
      bool orig = simulate(m, in, kSteps, m.stack_bound).accepts;
      CHECK(orig == (std::popcount(static_cast<unsigned>(mask)) % 2 == 0));
      auto r = simulate(reg, in, kSteps, reg.stack_bound);
      CHECK(r.accepts == orig);
      if (r.accepts) {
        CHECK(replay(reg, in, *r.witness, reg.stack_bound));
        auto c = check_regular(reg, n, &*r.witness);
        CHECK(c.c);
      }
    }
  }
}

TEST_CASE("regularize returns a regular machine unchanged") {
  auto m = regular_parity_machine(3);
  auto r = regularize_machine(m, 5, 3);
  CHECK(format_stack_machine(r) == format_stack_machine(m));
}

TEST_CASE("compile_hardness matches simulation") {
  for (int n = 0; n <= 4; ++n) {
    auto m = regular_parity_machine(n);
    for (int mask = 0; mask < (1 << n); ++mask) {
      auto in = bits_word(m.tm, n, mask);
      auto res = compile_hardness(m, in);
      Graph g = primal_graph(res.bundle.formula);
      CHECK(validate_tdd(g, res.bundle.tdd).valid);
      CHECK(validate_tree_or_path(g, res.bundle.path_decomp).valid);
      CHECK(res.bundle.tdd.depth() <= res.depth_bound);
      CHECK(res.tree_depth == tree_depth_for(1, n));
      bool accepts = simulate(m, in, kSteps, m.stack_bound).accepts;
      auto out = solve_cdcl(res.bundle.formula);
      CHECK(out.sat == accepts);
      if (out.sat) {
        CHECK(check_model(res.bundle.formula, out.model));
        // the accepting-state clause is what makes the formula satisfiable
        CnfFormula flipped = res.bundle.formula;
        flipped.clauses[res.accept_clause] = {res.final_block[m.tm.state("rej")]};
        CHECK_FALSE(solve_cdcl(flipped).sat);
      }
    }
  }
}

TEST_CASE("compile_hardness on an all-accepting machine") {
  for (int n = 1; n <= 3; ++n) {
    auto m = regular_parity_machine(n, 1, true);
    auto res = compile_hardness(m, bits_word(m.tm, n, 1));
    CHECK(solve_cdcl(res.bundle.formula).sat);
  }
}

TEST_CASE("compile_hardness rejects irregular machines") {
  CHECK_THROWS_AS(compile_hardness(parity_machine(2), {}), std::invalid_argument);
  auto m = regular_parity_machine(2);
  for (auto& t : m.tm.transitions)
    if (t.op == StackOp::pop) {
      t.read_wk = 0;
      break;
    }
  CHECK_THROWS_AS(compile_hardness(m, bits_word(m.tm, 2, 0)), std::invalid_argument);
}
