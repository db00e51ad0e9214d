#include "tdl/core/turing.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tdl {

int TuringMachine::add_state(const std::string& name) {
  int q = find_state(name);
  if (q >= 0) return q;
  states.push_back(name);
  return num_states() - 1;
}

int TuringMachine::add_symbol(const std::string& name) {
  int s = find_symbol(name);
  if (s >= 0) return s;
  symbols.push_back(name);
  return num_symbols() - 1;
}

int TuringMachine::find_state(const std::string& name) const {
  auto it = std::find(states.begin(), states.end(), name);
  return it == states.end() ? -1 : static_cast<int>(it - states.begin());
}

int TuringMachine::find_symbol(const std::string& name) const {
  auto it = std::find(symbols.begin(), symbols.end(), name);
  return it == symbols.end() ? -1 : static_cast<int>(it - symbols.begin());
}

int TuringMachine::state(const std::string& name) const {
  int q = find_state(name);
  if (q < 0) throw std::invalid_argument("unknown state " + name);
  return q;
}

int TuringMachine::symbol(const std::string& name) const {
  int s = find_symbol(name);
  if (s < 0) throw std::invalid_argument("unknown symbol " + name);
  return s;
}

bool TuringMachine::accepting(int q) const {
  return std::find(accept.begin(), accept.end(), q) != accept.end();
}

int TuringMachine::symbol_bits() const {
  int k = 1;
  while ((1 << k) < num_symbols()) ++k;
  return k;
}

void TuringMachine::validate() const {
  auto bad = [](const std::string& m) { throw std::invalid_argument(m); };
  if (states.empty()) bad("machine has no states");
  if (symbols.empty() || symbols[0] != "_") bad("symbol 0 must be the blank _");
  if (init < 0 || init >= num_states()) bad("initial state out of range");
  for (int q : accept)
    if (q < 0 || q >= num_states()) bad("accepting state out of range");
  auto sym_ok = [&](int s, bool wild) { return (wild && s == kAny) || (s >= 0 && s < num_symbols()); };
  for (size_t i = 0; i < transitions.size(); ++i) {
    const auto& t = transitions[i];
    std::string at = "transition " + std::to_string(i) + ": ";
    if (t.from < 0 || t.from >= num_states() || t.to < 0 || t.to >= num_states()) bad(at + "state out of range");
    if (!sym_ok(t.read_in, true) || !sym_ok(t.read_stk, true) || !sym_ok(t.read_wk, true)) bad(at + "read symbol out of range");
    if (!sym_ok(t.write_wk, true)) bad(at + "write symbol out of range");
    for (int d : {t.d_in, t.d_stk, t.d_wk})
      if (d < -1 || d > 1) bad(at + "head move outside {-1,0,1}");
    if (t.op == StackOp::push) {
      if (t.push_block.empty()) bad(at + "push without symbols");
      for (int s : t.push_block)
        if (s <= 0 || s >= num_symbols()) bad(at + "push of blank or unknown symbol");
    } else if (!t.push_block.empty()) {
      bad(at + "push symbols on a non-push transition");
    }
  }
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

int parse_move(const std::string& s) {
  if (s == "L" || s == "-1") return -1;
  if (s == "S" || s == "0") return 0;
  if (s == "R" || s == "1" || s == "+1") return 1;
  throw std::invalid_argument("bad head move " + s);
}

}  // namespace

MachineText parse_machine(const std::string& text) {
  MachineText out;
  auto& tm = out.tm;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::vector<std::vector<std::string>> pending;
  std::string init_name;
  std::vector<std::string> accept_names;
  bool have_states = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line.compare(first, 2, "//") == 0) continue;
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    const std::string& head = toks[0];
    if (head.back() == ':' && line.find("->") == std::string::npos) {
      std::string sec = head.substr(0, head.size() - 1);
      std::vector<std::string> rest(toks.begin() + 1, toks.end());
      if (sec == "states") {
        for (auto& s : rest) tm.add_state(s);
        have_states = true;
      } else if (sec == "alphabet") {
        for (auto& s : rest) tm.add_symbol(s);
      } else if (sec == "init") {
        if (rest.size() != 1) throw std::invalid_argument("line " + std::to_string(lineno) + ": init takes one state");
        init_name = rest[0];
      } else if (sec == "accept") {
        accept_names.insert(accept_names.end(), rest.begin(), rest.end());
      } else {
        std::string payload = line.substr(line.find(':') + 1);
        auto& slot = out.extra[sec];
        if (!slot.empty()) slot += '\n';
        slot += payload;
      }
      continue;
    }
    if (toks.size() < 10 || toks[4] != "->")
      throw std::invalid_argument("line " + std::to_string(lineno) + ": malformed transition");
    toks.push_back(std::to_string(lineno));
    pending.push_back(std::move(toks));
  }
  if (!have_states) throw std::invalid_argument("missing states: section");
  tm.init = tm.state(init_name);
  for (auto& a : accept_names) tm.accept.push_back(tm.state(a));
  std::sort(tm.accept.begin(), tm.accept.end());
  tm.accept.erase(std::unique(tm.accept.begin(), tm.accept.end()), tm.accept.end());
  for (auto& toks : pending) {
    std::string where = "line " + toks.back() + ": ";
    toks.pop_back();
    try {
      Transition t;
      t.from = tm.state(toks[0]);
      auto rd = [&](const std::string& s) { return s == "*" ? kAny : tm.symbol(s); };
      t.read_in = rd(toks[1]);
      t.read_stk = rd(toks[2]);
      t.read_wk = rd(toks[3]);
      t.to = tm.state(toks[5]);
      t.write_wk = toks[6] == "=" ? kKeep : tm.symbol(toks[6]);
      t.d_in = parse_move(toks[7]);
      t.d_stk = parse_move(toks[8]);
      t.d_wk = parse_move(toks[9]);
      if (toks.size() > 11) throw std::invalid_argument("trailing tokens");
      if (toks.size() == 11 && toks[10] != "-") {
        const std::string& op = toks[10];
        if (op == "pop") {
          t.op = StackOp::pop;
        } else if (op.rfind("push:", 0) == 0) {
          t.op = StackOp::push;
          std::string body = op.substr(5);
          std::istringstream ss(body);
          for (std::string s; std::getline(ss, s, ',');) t.push_block.push_back(tm.symbol(s));
        } else {
          throw std::invalid_argument("bad stack op " + op);
        }
      }
      tm.transitions.push_back(std::move(t));
    } catch (const std::exception& e) {
      throw std::invalid_argument(where + e.what());
    }
  }
  tm.validate();
  return out;
}

std::string format_transition(const TuringMachine& tm, const Transition& t) {
  auto sym = [&](int s, const char* wild) { return s < 0 ? std::string(wild) : tm.symbols[s]; };
  std::ostringstream o;
  o << tm.states[t.from] << ' ' << sym(t.read_in, "*") << ' ' << sym(t.read_stk, "*") << ' ' << sym(t.read_wk, "*")
    << " -> " << tm.states[t.to] << ' ' << sym(t.write_wk, "=") << ' ' << t.d_in << ' ' << t.d_stk << ' ' << t.d_wk;
  if (t.op == StackOp::pop) {
    o << " pop";
  } else if (t.op == StackOp::push) {
    o << " push:";
    for (size_t i = 0; i < t.push_block.size(); ++i) o << (i ? "," : "") << tm.symbols[t.push_block[i]];
  }
  return o.str();
}

std::string format_machine(const TuringMachine& tm, const std::map<std::string, std::string>& extra) {
  std::ostringstream o;
  o << "states:";
  for (auto& s : tm.states) o << ' ' << s;
  o << "\nalphabet:";
  for (size_t i = 1; i < tm.symbols.size(); ++i) o << ' ' << tm.symbols[i];
  o << "\ninit: " << tm.states[tm.init] << "\naccept:";
  for (int q : tm.accept) o << ' ' << tm.states[q];
  o << '\n';
  for (const auto& [k, v] : extra) o << k << ":" << (v.empty() || v[0] == ' ' ? "" : " ") << v << '\n';
  for (const auto& t : tm.transitions) o << format_transition(tm, t) << '\n';
  return o.str();
}

}  // namespace tdl
