#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "tdl/auxsa/auxsa.hpp"

namespace tdl {
namespace {

std::string key_of(const StackConfig& c) {
  std::string k;
  k.reserve(16 + c.work.size() + c.stack.size());
  for (int x : {c.state, c.in, c.stk, c.wk}) k.append(reinterpret_cast<const char*>(&x), sizeof x);
  for (int x : c.work) k.push_back(static_cast<char>(x));
  k.push_back('|');
  for (int x : c.stack) k.push_back(static_cast<char>(x));
  return k;
}

}  // namespace

SimResult simulate(const StackMachine& m, const std::vector<int>& input, int max_steps, int max_stack) {
  m.validate();
  struct Node {
    StackConfig config;
    int parent;
    int move;
    int depth;
  };
  std::vector<Node> nodes;
  std::unordered_map<std::string, int> seen;
  std::deque<int> queue;
  auto add = [&](StackConfig c, int parent, int move, int depth) {
    auto [it, fresh] = seen.emplace(key_of(c), static_cast<int>(nodes.size()));
    if (!fresh) return;
    if (nodes.size() >= kSimulateMaxConfigs) throw std::length_error("simulate: configuration limit exceeded");
    nodes.push_back({std::move(c), parent, move, depth});
    queue.push_back(it->second);
  };
  add(initial_config(m), -1, -1, 0);

  SimResult r;
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    if (m.tm.accepting(nodes[i].config.state)) {
      r.accepts = true;
      RunTranscript t;
      for (int j = i; j >= 0; j = nodes[j].parent) {
        t.configs.push_back(nodes[j].config);
        if (nodes[j].move >= 0) t.moves.push_back(nodes[j].move);
      }
      std::reverse(t.configs.begin(), t.configs.end());
      std::reverse(t.moves.begin(), t.moves.end());
      r.witness = std::move(t);
      break;
    }
    if (nodes[i].depth >= max_steps) continue;
    StackConfig cur = nodes[i].config;
    int depth = nodes[i].depth;
    for (auto& [move, next] : successors(m, input, cur, max_stack)) add(std::move(next), i, move, depth + 1);
  }
  r.explored = nodes.size();
  return r;
}

}  // namespace tdl
