#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tdl/core/graph.hpp"
#include "tdl/decomp/decomposition.hpp"

namespace tdl {

using BigInt = boost::multiprecision::cpp_int;

// Coefficients q_0..q_n.
using DominationPolynomial = std::vector<BigInt>;

struct SpaceMeter {
  long long peak_frames = 0;
  long long peak_aux_cells = 0;
};

// Labels per frame in solve_3col_td: colour + child cursor, plus the main
// frame's root cursor, so peak_aux_cells <= kColorAuxC0 * (s + lg n).
inline constexpr int kColorAuxC0 = 3;

struct ColorResult {
  bool colorable = false;
  SpaceMeter meter;
};

struct IsResult {
  int size = 0;
  SpaceMeter meter;
};

// All throw std::invalid_argument on an invalid decomposition.
ColorResult solve_3col_td(const Graph& g, const TreedepthDecomposition& d);
// Dense table of 3^|bag| entries per bag; peak_aux_cells is the largest table.
ColorResult solve_3col_pw_baseline(const Graph& g, const TreeDecomposition& d);
IsResult max_is_td(const Graph& g, const TreedepthDecomposition& d);

DominationPolynomial count_ds_exact(const Graph& g, const TreedepthDecomposition& d, SpaceMeter* meter = nullptr);

// Throws std::invalid_argument if p is not prime or a >= p.
std::uint64_t eval_ds_mod(const Graph& g, const TreedepthDecomposition& d, std::uint64_t p, std::uint64_t a,
                          SpaceMeter* meter = nullptr);

enum class DsLabel { A, F, T };

// f(u, phi) for phi given on the strict ancestors of u, root first.
DominationPolynomial ds_f(const Graph& g, const TreedepthDecomposition& d, int u, const std::vector<DsLabel>& tail);

// "q <i> <value>" lines.
std::string format_polynomial(const DominationPolynomial& q);

bool is_prime(std::uint64_t p);

}  // namespace tdl
