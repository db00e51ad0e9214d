#include <sstream>
#include <stdexcept>

#include "tdl/auxsa/auxsa.hpp"
#include "tdl/decomp/transform.hpp"

namespace tdl {

void StackMachine::validate() const {
  tm.validate();
  if (work_bound < 1) throw std::invalid_argument("work bound must be positive");
  if (stack_bound < 1) throw std::invalid_argument("stack bound must be positive");
  if (regular && (regular->b < 1 || regular->c < 1)) throw std::invalid_argument("regularity metadata must be positive");
}

StackMachine parse_stack_machine(const std::string& text) {
  MachineText mt = parse_machine(text);
  StackMachine m;
  m.tm = std::move(mt.tm);
  auto it = mt.extra.find("meta");
  if (it == mt.extra.end()) throw std::invalid_argument("missing meta: line");
  std::istringstream in(it->second);
  int b = 0, c = 0;
  for (std::string tok; in >> tok;) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad meta token " + tok);
    std::string key = tok.substr(0, eq);
    int value = std::stoi(tok.substr(eq + 1));
    if (key == "work") m.work_bound = value;
    else if (key == "stack") m.stack_bound = value;
    else if (key == "steps") m.step_bound = value;
    else if (key == "b") b = value;
    else if (key == "c") c = value;
    else throw std::invalid_argument("unknown meta key " + key);
  }
  if (b || c) m.regular = RegularMeta{b, c};
  m.validate();
  return m;
}

std::string format_stack_machine(const StackMachine& m) {
  std::ostringstream meta;
  meta << "work=" << m.work_bound << " stack=" << m.stack_bound;
  if (m.step_bound) meta << " steps=" << m.step_bound;
  if (m.regular) meta << " b=" << m.regular->b << " c=" << m.regular->c;
  return format_machine(m.tm, {{"meta", meta.str()}});
}

int tree_depth_for(int c, int n) { return c * ceil_lg(std::max(2, n)); }

StackConfig initial_config(const StackMachine& m) {
  StackConfig c;
  c.state = m.tm.init;
  c.work.assign(m.work_bound, kBlank);
  return c;
}

std::vector<std::pair<int, StackConfig>> successors(const StackMachine& m, const std::vector<int>& input,
                                                    const StackConfig& c, int max_stack) {
  std::vector<std::pair<int, StackConfig>> out;
  const int n = static_cast<int>(input.size());
  const int in_sym = c.in < n ? input[c.in] : kBlank;
  const int stk_sym = c.stk < static_cast<int>(c.stack.size()) ? c.stack[c.stk] : kBlank;
  const int wk_sym = c.work[c.wk];
  const int cap = std::min(m.stack_bound, max_stack);
  for (size_t i = 0; i < m.tm.transitions.size(); ++i) {
    const Transition& t = m.tm.transitions[i];
    if (t.from != c.state || !t.reads(in_sym, stk_sym, wk_sym)) continue;
    StackConfig d = c;
    d.state = t.to;
    if (t.write_wk != kKeep) d.work[c.wk] = t.write_wk;
    d.in += t.d_in;
    d.stk += t.d_stk;
    d.wk += t.d_wk;
    if (d.in < 0 || d.in > n || d.stk < 0 || d.stk > m.stack_bound || d.wk < 0 || d.wk >= m.work_bound) continue;
    if (t.op == StackOp::push) {
      if (static_cast<int>(d.stack.size() + t.push_block.size()) > cap) continue;
      d.stack.insert(d.stack.end(), t.push_block.begin(), t.push_block.end());
    } else if (t.op == StackOp::pop) {
      if (static_cast<int>(d.stack.size()) < m.pop_size()) continue;
      d.stack.resize(d.stack.size() - m.pop_size());
    }
    out.emplace_back(static_cast<int>(i), std::move(d));
  }
  return out;
}

namespace {

std::string symbols_text(const TuringMachine& tm, const std::vector<int>& s) {
  std::string o;
  for (size_t i = 0; i < s.size(); ++i) o += (i ? "," : "") + tm.symbols[s[i]];
  return o.empty() ? "-" : o;
}

}  // namespace

std::string format_transcript(const StackMachine& m, const RunTranscript& t) {
  std::ostringstream o;
  auto config = [&](const StackConfig& c) {
    o << "c " << m.tm.states[c.state] << " in=" << c.in << " stk=" << c.stk << " wk=" << c.wk
      << " work=" << symbols_text(m.tm, c.work) << " stack=" << symbols_text(m.tm, c.stack) << "\n";
  };
  for (size_t i = 0; i < t.moves.size(); ++i) {
    config(t.configs[i]);
    o << "t " << t.moves[i] << " | " << format_transition(m.tm, m.tm.transitions[t.moves[i]]) << "\n";
  }
  if (!t.configs.empty()) config(t.configs.back());
  return o.str();
}

bool replay(const StackMachine& m, const std::vector<int>& input, const RunTranscript& t, int max_stack) {
  if (t.configs.size() != t.moves.size() + 1 || t.configs.front() != initial_config(m)) return false;
  for (size_t i = 0; i < t.moves.size(); ++i) {
    bool ok = false;
    for (const auto& [idx, next] : successors(m, input, t.configs[i], max_stack))
      if (idx == t.moves[i] && next == t.configs[i + 1]) ok = true;
    if (!ok) return false;
  }
  return true;
}

std::vector<int> word(const TuringMachine& tm, const std::vector<std::string>& names) {
  std::vector<int> w;
  for (const auto& s : names) w.push_back(tm.symbol(s));
  return w;
}

}  // namespace tdl
