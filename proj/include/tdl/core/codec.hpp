#pragma once

#include <optional>
#include <string>

#include "tdl/core/cnf.hpp"
#include "tdl/core/graph.hpp"

namespace tdl {

// "p edge <n> <m>" then "e <u> <v>" lines; "c" lines are comments.
Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);

// DIMACS CNF; named variables as "c name <index> <label>".
CnfFormula parse_cnf(const std::string& text);
std::string format_cnf(const CnfFormula& f);

// Value of the first comment line "c <key> <value>", if any.
std::optional<long long> comment_value(const std::string& text, const std::string& key);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace tdl
