#pragma once

#include <string>
#include <vector>

#include "tdl/core/cnf.hpp"
#include "tdl/core/turing.hpp"
#include "tdl/decomp/decomposition.hpp"

namespace tdl {

struct GadgetBundle {
  CnfFormula formula;
  TreeDecomposition path_decomp;
  TreedepthDecomposition tdd;
};

// ram_gadget(n): tdd depth <= kRamDepthC * L + L with L = ceil(lg max(2, n));
// at most kRamVarsC * n variables.
inline constexpr int kRamDepthC = 2;
inline constexpr int kRamVarsC = 5;

// Named x_0..x_{n-1}, y_0..y_{L-1} (y_0 least significant), z.
GadgetBundle ram_gadget(int n);

// Random-access gadget over existing variables. index holds the selector
// bits, least significant first; leaves[i] is a variable id, or 0 for a fresh
// leaf fixed to fixed[i] (0/1). Leaves past leaves.size() up to 2^|index| are
// fresh and fixed to 0. Returns the heap-ordered tree (tree[0] is the output).
struct RamParts {
  std::vector<int> tree;
  std::vector<int> fresh;  // variables created here
};
RamParts add_ram(CnfFormula& f, const std::vector<int>& index, const std::vector<int>& leaves,
                 const std::vector<int>& fixed);

// Configuration block ABI: one-hot state bits, then binary heads (input,
// second tape, work), least significant bit first, then the work cells with
// sym_bits bits each.
struct BlockLayout {
  int states = 0;
  int in_bits = 0;
  int stk_bits = 0;
  int wk_bits = 0;
  int cells = 0;
  int sym_bits = 0;

  int size() const { return states + in_bits + stk_bits + wk_bits + cells * sym_bits; }
  int in_at() const { return states; }
  int stk_at() const { return states + in_bits; }
  int wk_at() const { return states + in_bits + stk_bits; }
  int cell_at(int c) const { return wk_at() + wk_bits + c * sym_bits; }
};

struct Config {
  int state = 0;
  int in = 0;
  int stk = 0;
  int wk = 0;
  std::vector<int> work;

  bool operator==(const Config&) const = default;
  auto operator<=>(const Config&) const = default;
};

std::vector<int> encode_config(const BlockLayout& L, const Config& c);  // 0/1 per block variable
Config decode_config(const BlockLayout& L, const std::vector<int>& bits);

struct CompOptions {
  int in_max = -1;   // input head range [0, in_max]; default |alpha|
  int stk_max = -1;  // second-tape head range [0, stk_max]; default h
};

// lg|alpha| + lg h <= kCompHypothesisC * s
inline constexpr int kCompHypothesisC = 8;

// Machine-dependent constants of the emitted bounds:
//   width <= comp_width_c(m) * (s + h),
//   depth <= comp_depth_c(m) * (s * ceil(lg(n+s+t+h)) + h).
long long comp_width_c(const TuringMachine& m);
long long comp_depth_c(const TuringMachine& m);

// Low-level builder. Nonempty u/v/w reuse existing variable ids; otherwise
// fresh ones are created. bags is the path decomposition in variable ids;
// local lists the variables other than u, v and w.
struct CompParts {
  BlockLayout layout;
  std::vector<int> u, v, w;
  std::vector<std::vector<int>> bags;
  std::vector<int> local;
};
CompParts add_computation(CnfFormula& f, const TuringMachine& m, const std::vector<int>& alpha, int s, int t, int h,
                          const CompOptions& opt, std::vector<int> u = {}, std::vector<int> v = {},
                          std::vector<int> w = {});

struct CompGadget {
  GadgetBundle bundle;
  BlockLayout layout;
};

// Names u_1..u_{s'}, v_1..v_{s'}, w_1..w_{h'} with h' = h * sym_bits. Only
// transitions without a stack operation are encoded; a stay step is always
// available. Throws std::invalid_argument on a hypothesis violation or a
// malformed machine, std::logic_error if an emitted bound fails.
CompGadget computation_gadget(const TuringMachine& m, const std::vector<int>& alpha, int s, int t, int h,
                              const CompOptions& opt = {});

// Serialisation: the CNF with "c name" lines, plus sidecar decompositions.
struct BundleFiles {
  std::string cnf, td, tdd;
};
BundleFiles format_bundle(const GadgetBundle& b);

// Decomposition of a whole formula from its bag sequence: path decomposition
// of the primal graph plus a tdd built by tree_to_tdd on the bags without the
// `top` variables, which are then chained above everything else.
GadgetBundle bundle_from_bags(CnfFormula f, const std::vector<std::vector<int>>& bags, const std::vector<int>& top);

}  // namespace tdl
