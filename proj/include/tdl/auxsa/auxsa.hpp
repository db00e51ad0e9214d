#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tdl/core/graph.hpp"
#include "tdl/core/turing.hpp"
#include "tdl/decomp/decomposition.hpp"
#include "tdl/gadgets/gadgets.hpp"

namespace tdl {

// Regularity metadata: pushes and pops move blocks of b symbols, and accepting
// runs follow the full binary tree of depth c * ceil(lg max(2, n)).
struct RegularMeta {
  int b = 1;
  int c = 1;
};

struct StackMachine {
  TuringMachine tm;
  int work_bound = 1;   // work cells
  int stack_bound = 1;  // maximum stack height; the stack head ranges over [0, stack_bound]
  int step_bound = 0;   // advisory; 0 when unknown
  std::optional<RegularMeta> regular;

  int pop_size() const { return regular ? regular->b : 1; }
  void validate() const;  // throws std::invalid_argument
};

// TuringMachine grammar plus
//   meta: work=<W> stack=<H> [steps=<T>] [b=<b> c=<c>]
StackMachine parse_stack_machine(const std::string& text);
std::string format_stack_machine(const StackMachine& m);

int tree_depth_for(int c, int n);  // c * ceil(lg max(2, n))

struct StackConfig {
  int state = 0;
  int in = 0;
  int stk = 0;
  int wk = 0;
  std::vector<int> work;
  std::vector<int> stack;  // bottom first

  bool operator==(const StackConfig&) const = default;
};

StackConfig initial_config(const StackMachine& m);

// All successors of c as (transition index, next configuration).
std::vector<std::pair<int, StackConfig>> successors(const StackMachine& m, const std::vector<int>& input,
                                                    const StackConfig& c, int max_stack);

struct RunTranscript {
  std::vector<StackConfig> configs;  // configs.size() == moves.size() + 1
  std::vector<int> moves;            // transition indices
};

// One step per line: "<transition index> | <transition text>", preceded by
// the configuration it applies to.
std::string format_transcript(const StackMachine& m, const RunTranscript& t);

// True iff every move is an available transition leading to the next config.
bool replay(const StackMachine& m, const std::vector<int>& input, const RunTranscript& t, int max_stack);

struct SimResult {
  bool accepts = false;
  std::optional<RunTranscript> witness;  // shortest accepting run
  std::size_t explored = 0;
};

inline constexpr std::size_t kSimulateMaxConfigs = 4'000'000;

// Breadth-first search of the configuration graph. Throws std::length_error
// when more than kSimulateMaxConfigs configurations are visited.
SimResult simulate(const StackMachine& m, const std::vector<int>& input, int max_steps, int max_stack);

// Word over the machine's alphabet from symbol names.
std::vector<int> word(const TuringMachine& tm, const std::vector<std::string>& names);

// ---------------------------------------------------------------------------
// Push-pop trees. Node 0 is the root; nodes are numbered in creation order,
// which is preorder, and children are kept in temporal order.

struct PushPopTree {
  std::vector<int> parent{-1};

  int size() const { return static_cast<int>(parent.size()); }
  std::vector<std::vector<int>> children() const;
  int depth() const;  // edges on a longest root-leaf path
  bool operator==(const PushPopTree&) const = default;
};

// Throws std::invalid_argument on an unbalanced sequence.
PushPopTree pushpop_tree_of(const std::vector<StackOp>& ops);
PushPopTree pushpop_tree_of(const StackMachine& m, const RunTranscript& t);
std::vector<StackOp> canonical_ops(const PushPopTree& t);
bool is_full_binary(const PushPopTree& t, int depth);

// Embedding into the full binary tree of depth 4 * ceil(lg |t|): image[v] is
// the root-to-node path ('0' left, '1' right). Requires 2^depth(t) <= |t|.
struct Embedding {
  int target_depth = 0;
  std::vector<std::string> image;
};
Embedding embed_full_binary(const PushPopTree& t);
// Empty when the embedding is injective, ancestor- and order-preserving and
// within the target depth; otherwise the first violation.
std::string check_embedding(const PushPopTree& t, const Embedding& e);

// ---------------------------------------------------------------------------
// Regularity.

struct RegularityReport {
  bool a = false, b = false, c = false;
  bool c_checked = false;
  std::string a_msg, b_msg, c_msg;
};

// (a) and (b) are checked on the transition relation; (c) on the push-pop
// tree of the given transcript, when one is passed. Throws
// std::invalid_argument when the machine has no regularity metadata.
RegularityReport check_regular(const StackMachine& m, int n, const RunTranscript* transcript = nullptr);

// Buffer simulation of the top of the stack (kept in the finite control, the
// construction being specific to the input length n), block pushes and pops
// of b = ceil(s / ceil(lg max(2, n))) symbols, dummy blocks and tracking of
// the position in the full binary tree of depth c * ceil(lg max(2, n)).
// Stack reads are simulated by seeking the physical stack head past dummy
// blocks. A machine that already carries regularity metadata is returned
// unchanged.
StackMachine regularize_machine(const StackMachine& m, int s, int n, int c = 1);

// ---------------------------------------------------------------------------
// Programs.

enum class Builtin { three_col, max_is_threshold };

// Input encoding of a graph with a tree-depth decomposition: the forest is
// walked depth-first; entering v writes "d" followed by one bit per ancestor
// (root first, 1 = adjacent), leaving v writes "u". The independent-set
// program reads a prefix "1"^k "|" with the threshold k.
StackMachine make_builtin_program(Builtin kind);
std::vector<int> encode_builtin_input(const TuringMachine& tm, const Graph& g, const TreedepthDecomposition& d,
                                      int threshold = 0);
struct BuiltinInstance {
  StackMachine machine;  // bounds set for this input
  std::vector<int> input;
};
BuiltinInstance instantiate_builtin(Builtin kind, const Graph& g, const TreedepthDecomposition& d, int threshold = 0);

// Pushes '#', then every input bit, then pops back down checking that the
// number of 1s is even.
StackMachine parity_machine(int n);

// Regular machine for input length n: computes the parity while scanning,
// pushes it at the root, walks the full binary tree with dummy blocks, reads
// the parity back from the bottom of the stack, and ends in "acc" (even) or
// "rej" (odd). With accept_all every input is accepted.
StackMachine regular_parity_machine(int n, int c = 1, bool accept_all = false);

// ---------------------------------------------------------------------------
// Hardness compiler.

struct CompileResult {
  GadgetBundle bundle;
  BlockLayout layout;
  int accept_clause = -1;  // index of the clause asking for an accepting final state
  std::vector<int> final_block;  // variables of the final configuration
  int tree_depth = 0;      // depth of the push-pop skeleton
  long long depth_bound = 0;
};

// Throws std::invalid_argument when check_regular fails (a) or (b), and
// std::logic_error if the emitted tdd is invalid or deeper than depth_bound.
CompileResult compile_hardness(const StackMachine& m, const std::vector<int>& input);

}  // namespace tdl
