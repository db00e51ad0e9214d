#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tdl/core/graph.hpp"

namespace tdl {

using Lit = int;  // +v / -v, v >= 1
using Clause = std::vector<Lit>;

struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;
  std::map<std::string, int> named;

  int new_var() { return ++num_vars; }
  int new_var(const std::string& label);
  void name(int var, const std::string& label);
  int var(const std::string& label) const;  // throws if unknown
  bool has_name(const std::string& label) const { return named.count(label) != 0; }

  void add(Clause c);
  void add(std::initializer_list<Lit> c) { add(Clause(c)); }

  size_t max_clause_size() const;

  // Throws std::invalid_argument on the first broken invariant.
  void validate() const;
};

// A partial assignment: value[v] in {-1 unset, 0, 1}, indexed 1..num_vars.
struct Assignment {
  std::vector<signed char> value;
  explicit Assignment(int num_vars = 0) : value(static_cast<size_t>(num_vars) + 1, -1) {}
  void set(int v, bool b) { value[v] = b ? 1 : 0; }
  int get(int v) const { return value[v]; }
};

Graph primal_graph(const CnfFormula& f);

// Variables keep ids 1..num_vars; clause i (0-based) becomes num_vars+1+i.
Graph incidence_graph(const CnfFormula& f);

}  // namespace tdl
