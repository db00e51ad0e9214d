#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "tdl/core/cnf.hpp"
#include "tdl/core/graph.hpp"

namespace tdl {

inline constexpr int kOracleMaxVertices = 25;

// True iff some total extension of fixed satisfies f.
bool sat_oracle(const CnfFormula& f, const Assignment& fixed);
bool sat_oracle(const CnfFormula& f);

// Plain 2^num_vars enumeration; num_vars <= 20.
bool sat_enumerate(const CnfFormula& f);

enum class Problem { three_col, count_ds, max_is };

using OracleAnswer = std::variant<bool, std::vector<std::uint64_t>, int>;

// Exhaustive ground truth; throws std::length_error when g.n() > 25.
OracleAnswer brute_force_oracle(Problem p, const Graph& g);

bool brute_three_col(const Graph& g);
std::vector<std::uint64_t> brute_count_ds(const Graph& g);  // q_0..q_n
int brute_max_is(const Graph& g);
int brute_min_vc(const Graph& g);
int brute_min_ds(const Graph& g);  // n+1 sentinel never occurs for n >= 1

}  // namespace tdl
