#include "tdl/core/oracle.hpp"

#include <bit>
#include <cstdlib>
#include <stdexcept>

#include "tdl/core/sat.hpp"

namespace tdl {

bool sat_oracle(const CnfFormula& f, const Assignment& fixed) {
  for (int v = 1; v < static_cast<int>(fixed.value.size()); ++v)
    if (fixed.value[v] >= 0 && v > f.num_vars) throw std::invalid_argument("fixed value for undeclared variable");
  return solve_dpll(f, &fixed).sat;
}

bool sat_oracle(const CnfFormula& f) { return solve_dpll(f, nullptr).sat; }

bool sat_enumerate(const CnfFormula& f) {
  if (f.num_vars > 20) throw std::length_error("enumeration limited to 20 variables");
  for (std::uint32_t a = 0; a < (1u << f.num_vars); ++a) {
    bool ok = true;
    for (const auto& c : f.clauses) {
      bool sat = false;
      for (Lit l : c)
        if (((a >> (std::abs(l) - 1)) & 1) == (l > 0 ? 1u : 0u)) {
          sat = true;
          break;
        }
      if (!sat) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

namespace {

void guard(const Graph& g) {
  if (g.n() > kOracleMaxVertices) throw std::length_error("oracle limited to 25 vertices");
}

std::vector<std::uint32_t> closed_masks(const Graph& g) {
  std::vector<std::uint32_t> nb(g.n());
  for (int v = 1; v <= g.n(); ++v) {
    nb[v - 1] = 1u << (v - 1);
    for (int u : g.neighbors(v)) nb[v - 1] |= 1u << (u - 1);
  }
  return nb;
}

bool color_rec(const Graph& g, std::vector<int>& col, int v) {
  if (v > g.n()) return true;
  for (int c = 0; c < 3; ++c) {
    bool ok = true;
    for (int u : g.neighbors(v))
      if (u < v && col[u] == c) {
        ok = false;
        break;
      }
    if (!ok) continue;
    col[v] = c;
    if (color_rec(g, col, v + 1)) return true;
  }
  col[v] = -1;
  return false;
}

bool independent(const std::vector<std::uint32_t>& open, std::uint32_t s) {
  for (std::uint32_t r = s; r; r &= r - 1)
    if (open[std::countr_zero(r)] & s) return false;
  return true;
}

std::vector<std::uint32_t> open_masks(const Graph& g) {
  std::vector<std::uint32_t> nb(g.n(), 0);
  for (int v = 1; v <= g.n(); ++v)
    for (int u : g.neighbors(v)) nb[v - 1] |= 1u << (u - 1);
  return nb;
}

}  // namespace

bool brute_three_col(const Graph& g) {
  guard(g);
  std::vector<int> col(g.n() + 1, -1);
  return color_rec(g, col, 1);
}

std::vector<std::uint64_t> brute_count_ds(const Graph& g) {
  guard(g);
  const int n = g.n();
  auto nb = closed_masks(g);
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  std::vector<std::uint64_t> q(n + 1, 0);
  for (std::uint32_t s = 0; s <= full; ++s) {
    std::uint32_t dom = 0;
    for (std::uint32_t r = s; r; r &= r - 1) dom |= nb[std::countr_zero(r)];
    if (dom == full) ++q[std::popcount(s)];
    if (s == full) break;
  }
  return q;
}

int brute_max_is(const Graph& g) {
  guard(g);
  auto nb = open_masks(g);
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << g.n()); ++s) {
    int k = std::popcount(s);
    if (k > best && independent(nb, s)) best = k;
  }
  return best;
}

int brute_min_vc(const Graph& g) { return g.n() - brute_max_is(g); }

int brute_min_ds(const Graph& g) {
  auto q = brute_count_ds(g);
  for (size_t i = 0; i < q.size(); ++i)
    if (q[i]) return static_cast<int>(i);
  return g.n() + 1;
}

OracleAnswer brute_force_oracle(Problem p, const Graph& g) {
  switch (p) {
    case Problem::three_col:
      return brute_three_col(g);
    case Problem::count_ds:
      return brute_count_ds(g);
    case Problem::max_is:
      return brute_max_is(g);
  }
  throw std::invalid_argument("unknown problem");
}

}  // namespace tdl
