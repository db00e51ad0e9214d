#include "tdl/core/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace tdl {

int CnfFormula::new_var(const std::string& label) {
  int v = new_var();
  name(v, label);
  return v;
}

void CnfFormula::name(int var, const std::string& label) {
  if (!named.emplace(label, var).second) throw std::invalid_argument("duplicate variable name " + label);
}

int CnfFormula::var(const std::string& label) const {
  auto it = named.find(label);
  if (it == named.end()) throw std::out_of_range("no variable named " + label);
  return it->second;
}

void CnfFormula::add(Clause c) {
  if (c.empty()) throw std::invalid_argument("empty clause");
  clauses.push_back(std::move(c));
}

size_t CnfFormula::max_clause_size() const {
  size_t k = 0;
  for (const auto& c : clauses) k = std::max(k, c.size());
  return k;
}

void CnfFormula::validate() const {
  for (size_t i = 0; i < clauses.size(); ++i) {
    if (clauses[i].empty()) throw std::invalid_argument("clause " + std::to_string(i) + " is empty");
    for (Lit l : clauses[i])
      if (l == 0 || std::abs(l) > num_vars)
        throw std::invalid_argument("clause " + std::to_string(i) + " has literal " + std::to_string(l) + " out of range");
  }
  for (const auto& [label, v] : named)
    if (v < 1 || v > num_vars) throw std::invalid_argument("named variable " + label + " out of range");
}

Graph primal_graph(const CnfFormula& f) {
  Graph g(f.num_vars);
  for (const auto& c : f.clauses)
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = i + 1; j < c.size(); ++j) {
        int a = std::abs(c[i]), b = std::abs(c[j]);
        if (a != b) g.add_edge(a, b);
      }
  return g;
}

Graph incidence_graph(const CnfFormula& f) {
  Graph g(f.num_vars + static_cast<int>(f.clauses.size()));
  for (size_t i = 0; i < f.clauses.size(); ++i)
    for (Lit l : f.clauses[i]) g.add_edge(std::abs(l), f.num_vars + 1 + static_cast<int>(i));
  return g;
}

}  // namespace tdl
