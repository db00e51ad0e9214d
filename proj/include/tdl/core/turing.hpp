#pragma once

#include <map>
#include <string>
#include <vector>

namespace tdl {

inline constexpr int kAny = -1;   // read wildcard
inline constexpr int kKeep = -1;  // write wildcard: leave the cell unchanged
inline constexpr int kBlank = 0;  // symbol 0 is always the blank "_"

enum class StackOp { none, push, pop };

// (from, a_in, a_stk, a_wk) -> (to, write_wk, d_in, d_stk, d_wk) [, stack op]
// The write happens at the old work-head cell, then all heads move.
struct Transition {
  int from = 0;
  int to = 0;
  int read_in = kAny;
  int read_stk = kAny;
  int read_wk = kAny;
  int write_wk = kKeep;
  int d_in = 0;
  int d_stk = 0;
  int d_wk = 0;
  StackOp op = StackOp::none;
  std::vector<int> push_block;  // bottom-first

  bool reads(int in, int stk, int wk) const {
    return (read_in == kAny || read_in == in) && (read_stk == kAny || read_stk == stk) &&
           (read_wk == kAny || read_wk == wk);
  }
  bool operator==(const Transition&) const = default;
};

// Machine with a read-only input tape, a second read-only tape (the stack
// tape for stack machines, the word w for computation gadgets) and a work tape.
struct TuringMachine {
  std::vector<std::string> states;
  std::vector<std::string> symbols{"_"};
  int init = 0;
  std::vector<int> accept;
  std::vector<Transition> transitions;

  int add_state(const std::string& name);
  int add_symbol(const std::string& name);
  int state(const std::string& name) const;    // throws if unknown
  int symbol(const std::string& name) const;   // throws if unknown
  int find_state(const std::string& name) const;  // -1 if unknown
  int find_symbol(const std::string& name) const;
  bool accepting(int q) const;
  int num_states() const { return static_cast<int>(states.size()); }
  int num_symbols() const { return static_cast<int>(symbols.size()); }

  // Bits per symbol in binary block codes (at least 1).
  int symbol_bits() const;

  void validate() const;  // throws std::invalid_argument
};

struct MachineText {
  TuringMachine tm;
  std::map<std::string, std::string> extra;  // unknown "section:" lines, raw payload
};

// Grammar:
//   // comment
//   states: <q> ...
//   alphabet: <sym> ...          (blank "_" is implicit and always symbol 0)
//   init: <q>
//   accept: <q> ...
//   <q> <a_in> <a_stk> <a_wk> -> <q'> <write> <d_in> <d_stk> <d_wk> [op]
// Reads may be "*" (any); write may be "=" (keep); moves are -1/0/1 or L/S/R;
// op is "-", "pop" or "push:<s>[,<s>...]".
MachineText parse_machine(const std::string& text);
std::string format_machine(const TuringMachine& tm, const std::map<std::string, std::string>& extra = {});

std::string format_transition(const TuringMachine& tm, const Transition& t);

}  // namespace tdl
