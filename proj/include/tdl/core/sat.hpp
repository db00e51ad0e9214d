#pragma once

#include <cstdint>
#include <vector>

#include "tdl/core/cnf.hpp"

namespace tdl {

struct SatOutcome {
  bool sat = false;
  std::vector<signed char> model;  // 1..num_vars, 0/1 when sat
  std::uint64_t decisions = 0;
  std::uint64_t conflicts = 0;
};

// Chronological backtracking with unit propagation; no learning.
SatOutcome solve_dpll(const CnfFormula& f, const Assignment* fixed = nullptr);

// Conflict-driven clause learning (first-UIP, activity ordering, restarts).
// Used for the large formulas of the machine compiler.
SatOutcome solve_cdcl(const CnfFormula& f, const Assignment* fixed = nullptr);

bool check_model(const CnfFormula& f, const std::vector<signed char>& model);

}  // namespace tdl
