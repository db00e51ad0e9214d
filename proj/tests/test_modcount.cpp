#include <random>

#include "doctest.h"
#include "support.hpp"
#include "tdl/decomp/transform.hpp"
#include "tdl/modcount/modcount.hpp"

using namespace tdl;

namespace {

// P(alpha^i) mod p for coefficients c
ResidueTable table_for(const std::vector<std::uint64_t>& c, std::uint64_t p) {
  ResidueTable t{p, primitive_root(p), {}};
  std::uint64_t x = 1;
  for (std::uint64_t i = 0; i + 1 < p; ++i) {
    std::uint64_t v = 0, pw = 1;
    for (auto ci : c) {
      v = (v + ci % p * pw) % p;
      pw = pw * x % p;
    }
    t.evals.push_back(v);
    x = x * t.alpha % p;
  }
  return t;
}

}  // namespace

TEST_CASE("prime selection") {
  CHECK(primes_between(3) == std::vector<std::uint64_t>{5, 7});
  CHECK(primes_between(1) == std::vector<std::uint64_t>{3});
  CHECK(primes_between(21) == std::vector<std::uint64_t>{23, 29, 31, 37, 41, 43});
  CHECK(primes_in_open_interval(21, 42) == std::vector<std::uint64_t>{23, 29, 31, 37, 41});
  CHECK_THROWS(primes_between(0));
}

TEST_CASE("primitive roots") {
  CHECK(primitive_root(5) == 2);
  CHECK(primitive_root(7) == 3);
  CHECK(primitive_root(3) == 2);
  CHECK_THROWS(primitive_root(9));
  for (std::uint64_t p = 3; p < 200; ++p) {
    if (!is_prime(p)) continue;
    auto a = primitive_root(p);
    std::vector<char> seen(p, 0);
    std::uint64_t x = 1;
    for (std::uint64_t i = 0; i + 1 < p; ++i, x = x * a % p) seen[x] = 1;
    CHECK(std::count(seen.begin(), seen.end(), 1) == static_cast<long>(p - 1));
  }
}

TEST_CASE("orthogonality of powers of a generator") {
  for (std::uint64_t p = 3; p <= 50; ++p) {
    if (!is_prime(p)) continue;
    auto a = primitive_root(p);
    for (std::uint64_t j = 0; j + 1 < p; ++j) {
      std::uint64_t aj = pow_mod(a, j, p), s = 0, x = 1;
      for (std::uint64_t i = 0; i + 1 < p; ++i, x = x * aj % p) s = (s + x) % p;
      CHECK(s == (j == 0 ? p - 1 : 0));
    }
  }
}

TEST_CASE("coefficient recovery") {
  auto t = table_for({0, 1, 3, 1}, 5);
  CHECK(coefficient_from_evals(t, 2) == 3);
  auto c = table_for({4}, 7);
  CHECK(coefficient_from_evals(c, 0) == 4);
  for (int k = 1; k <= 5; ++k) CHECK(coefficient_from_evals(c, k) == 0);
  CHECK_THROWS(coefficient_from_evals(c, 6));
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::uint64_t> q(7);
    for (auto& x : q) x = rng() % 11;
    auto tt = table_for(q, 11);
    for (int k = 0; k < 7; ++k) CHECK(coefficient_from_evals(tt, k) == q[k]);
  }
}

TEST_CASE("chinese remaindering") {
  CHECK(crt_reconstruct({5, 7}, {3, 1}).value == 8);
  CHECK(crt_reconstruct({13}, {9}).value == 9);
  CHECK(crt_reconstruct({5, 7, 11}, {0, 0, 0}).value == 0);
  CHECK_THROWS(crt_reconstruct({6, 9}, {1, 1}));
  std::mt19937_64 rng(4);
  std::vector<std::uint64_t> m{23, 29, 31, 37, 41, 43};
  for (int i = 0; i < 200; ++i) {
    BigInt v = BigInt(rng()) % (BigInt(23) * 29 * 31 * 37 * 41 * 43);
    std::vector<std::uint64_t> r;
    for (auto p : m) r.push_back(static_cast<std::uint64_t>(v % p));
    CHECK(crt_reconstruct(m, r).value == v);
  }
}

TEST_CASE("low-space counting") {
  TreedepthDecomposition d(3);
  d.parent = {0, 2, 0, 2};
  LowspaceTrace tr;
  auto q = count_ds_lowspace(path_graph(3), d, &tr);
  CHECK(tr.fallback);
  CHECK(q == count_ds_exact(path_graph(3), d));

  auto e = count_ds_lowspace(Graph(25), TreedepthDecomposition(25), &tr);
  CHECK_FALSE(tr.fallback);
  CHECK(e[25] == 1);
  for (int i = 0; i < 25; ++i) CHECK(e[i] == 0);
  CHECK(tr.prime_alpha.front().first == 29);

  std::mt19937_64 rng(8);
  for (int i = 0; i < 3; ++i) {
    auto [g, t] = testing::random_shallow(rng, 21 + i * 3, 5, 0.3);
    CHECK(count_ds_lowspace(g, t, nullptr, 1) == count_ds_exact(g, t));
  }
}
