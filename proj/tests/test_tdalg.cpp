#include <random>

#include "doctest.h"
#include "support.hpp"
#include "tdl/core/oracle.hpp"
#include "tdl/decomp/transform.hpp"
#include "tdl/tdalg/tdalg.hpp"

using namespace tdl;

namespace {

TreedepthDecomposition chain(int n) {
  TreedepthDecomposition d(n);
  for (int v = 2; v <= n; ++v) d.parent[v] = v - 1;
  return d;
}

TreedepthDecomposition rooted_at_2() {
  TreedepthDecomposition d(3);
  d.parent = {0, 2, 0, 2};
  return d;
}

DominationPolynomial big(const std::vector<std::uint64_t>& v) {
  DominationPolynomial q;
  for (auto x : v) q.emplace_back(x);
  return q;
}

}  // namespace

TEST_CASE("frozen examples") {
  CHECK(solve_3col_td(complete_graph(3), chain(3)).colorable);
  CHECK_FALSE(solve_3col_td(complete_graph(4), chain(4)).colorable);
  TreeDecomposition one;
  one.bags = {{1, 2, 3}};
  one.is_path = true;
  auto b = solve_3col_pw_baseline(complete_graph(3), one);
  CHECK(b.colorable);
  CHECK(b.meter.peak_aux_cells <= 27);
  one.bags = {{1, 2, 3, 4}};
  CHECK_FALSE(solve_3col_pw_baseline(complete_graph(4), one).colorable);

  CHECK(max_is_td(complete_graph(3), chain(3)).size == 1);
  CHECK(max_is_td(path_graph(3), rooted_at_2()).size == 2);
  CHECK(max_is_td(Graph(5), TreedepthDecomposition(5)).size == 5);

  CHECK(count_ds_exact(path_graph(3), rooted_at_2()) == big({0, 1, 3, 1}));
  CHECK(count_ds_exact(complete_graph(3), chain(3)) == big({0, 3, 3, 1}));
  CHECK(count_ds_exact(Graph(1), TreedepthDecomposition(1)) == big({0, 1}));
  CHECK(eval_ds_mod(path_graph(3), rooted_at_2(), 5, 1) == 0);
  CHECK_THROWS(eval_ds_mod(path_graph(3), rooted_at_2(), 6, 1));
  CHECK(format_polynomial(big({0, 1})) == "q 0 0\nq 1 1\n");
}

TEST_CASE("invalid decompositions are rejected") {
  TreedepthDecomposition bad(3);
  CHECK_THROWS_AS(solve_3col_td(path_graph(3), bad), std::invalid_argument);
  CHECK_THROWS_AS(count_ds_exact(path_graph(3), bad), std::invalid_argument);
  CHECK_THROWS_AS(max_is_td(path_graph(3), bad), std::invalid_argument);
}

TEST_CASE("exhaustive agreement with the oracle up to 5 vertices") {
  for (int n = 1; n <= 5; ++n)
    for (std::uint64_t mask = 0; mask < (1ull << (n * (n - 1) / 2)); ++mask) {
      Graph g = graph_from_mask(n, mask);
      auto t = dfs_tdd(g);
      const int s = t.depth();
      auto c = solve_3col_td(g, t);
      CHECK(c.colorable == brute_three_col(g));
      CHECK(c.meter.peak_frames <= s + 1);
      CHECK(c.meter.peak_aux_cells <= kColorAuxC0 * (s + ceil_lg(n)));
      auto pw = solve_3col_pw_baseline(g, td_to_path(g, t));
      CHECK(pw.colorable == c.colorable);
      auto is = max_is_td(g, t);
      CHECK(is.size == brute_max_is(g));
      CHECK(is.meter.peak_frames <= s + 1);
      SpaceMeter m;
      auto q = count_ds_exact(g, t, &m);
      CHECK(q == big(brute_count_ds(g)));
      CHECK(m.peak_frames <= 2 * s + 1);
    }
}

TEST_CASE("child order does not change the polynomial") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 60; ++i) {
    auto [g, d] = testing::random_shallow(rng, 9, 4, 0.4);
    // relabel vertices by reversal so ascending child order flips
    const int n = g.n();
    Graph h(n);
    for (auto [u, v] : g.edges()) h.add_edge(n + 1 - u, n + 1 - v);
    TreedepthDecomposition e(n);
    for (int v = 1; v <= n; ++v) e.parent[n + 1 - v] = d.parent[v] ? n + 1 - d.parent[v] : 0;
    CHECK(count_ds_exact(g, d) == count_ds_exact(h, e));
  }
}

TEST_CASE("f vanishes when adjacent tail vertices are labelled T and F") {
  // chain 1-2-3 on a path; tail of 3 is (1, 2) and 1-2 is an edge
  Graph g = path_graph(3);
  auto d = chain(3);
  DominationPolynomial zero(4, 0);
  CHECK(ds_f(g, d, 3, {DsLabel::T, DsLabel::F}) == zero);
  CHECK(ds_f(g, d, 3, {DsLabel::F, DsLabel::T}) == zero);
  CHECK(ds_f(g, d, 3, {DsLabel::A, DsLabel::A}) != zero);
}

TEST_CASE("modular evaluation matches the exact polynomial") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 40; ++i) {
    int n = 1 + i % 10;
    Graph g = testing::random_graph(rng, n, 0.3);
    auto t = dfs_tdd(g);
    auto q = count_ds_exact(g, t);
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
      for (std::uint64_t a = 0; a < p; ++a) {
        BigInt v = 0, x = 1;
        for (const auto& c : q) {
          v += c * x;
          x *= a;
        }
        SpaceMeter m;
        CHECK(eval_ds_mod(g, t, p, a, &m) == static_cast<std::uint64_t>(v % p));
        CHECK(m.peak_aux_cells <= 2 * t.depth() + 1);
      }
    }
  }
}

TEST_CASE("pathwidth baseline table reaches 3^(w+1) on clique paths") {
  for (int w = 1; w <= 5; ++w) {
    // consecutive (w+1)-cliques overlapping in w vertices
    const int n = 3 * (w + 1);
    Graph g(n);
    TreeDecomposition d;
    d.is_path = true;
    for (int s = 1; s + w <= n; ++s) {
      std::vector<int> bag;
      for (int v = s; v <= s + w; ++v) bag.push_back(v);
      for (int a : bag)
        for (int b : bag)
          if (a < b) g.add_edge(a, b);
      d.bags.push_back(bag);
      if (d.num_bags() > 1) d.tree_edges.emplace_back(d.num_bags() - 2, d.num_bags() - 1);
    }
    long long full = 1;
    for (int i = 0; i <= w; ++i) full *= 3;
    auto r = solve_3col_pw_baseline(g, d);
    CHECK(r.meter.peak_aux_cells == full);
    CHECK(r.colorable == (w <= 2));
    CHECK(solve_3col_td(g, dfs_tdd(g)).colorable == r.colorable);
  }
}
