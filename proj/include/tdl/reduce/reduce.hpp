#pragma once

#include <optional>
#include <string>
#include <variant>

#include "tdl/core/cnf.hpp"
#include "tdl/core/graph.hpp"
#include "tdl/decomp/decomposition.hpp"

namespace tdl {

struct WidthCert {
  int input = 0;
  int output = 0;
  int constant = 0;  // output <= constant * (input + 1)
};

struct ReductionOutput {
  std::variant<Graph, CnfFormula> instance;
  std::optional<int> threshold;
  Decomposition decomposition;
  WidthCert cert;
  // Which graph of a CNF instance the decomposition belongs to.
  bool incidence = false;
};

// Certificate constants.
inline constexpr int kCnfToKsatC = 2;
inline constexpr int kSat3To3colC = 11;
inline constexpr int kThreecolTo3satC = 6;
inline constexpr int kSat3ToIsC = 5;
inline constexpr int kIsToVcC = 1;
inline constexpr int kVcToDsC = 1;  // additive: output <= input + 1

enum class GraphSide { primal, incidence };

// Every reduction validates its input decomposition (std::invalid_argument)
// and its output against the certificate (std::logic_error).

// Clauses longer than k become chains over fresh variables x_2, x_3, ...
ReductionOutput cnf_to_ksat(const CnfFormula& f, int k, const Decomposition& d);

// Same formula, decomposition moved from the `from` graph to the other one.
ReductionOutput ksat_decomp_convert(GraphSide from, const CnfFormula& f, int k, const Decomposition& d);

// Clauses shorter than three literals are padded by repeating a literal.
ReductionOutput sat3_to_3col(const CnfFormula& f, const Decomposition& incidence_decomp);
ReductionOutput threecol_to_3sat(const Graph& g, const Decomposition& d);
ReductionOutput sat3_to_is(const CnfFormula& f, const Decomposition& incidence_decomp);
ReductionOutput is_to_vc(const Graph& g, int k, const Decomposition& d);
// Throws std::invalid_argument on an isolated vertex.
ReductionOutput vc_to_ds(const Graph& g, int k, const Decomposition& d);

// The graph the decomposition is for.
Graph target_graph(const ReductionOutput& r);

// Instance text with a "c threshold" line when thresholded, the decomposition
// text, and the "c widthcert <in> <out> <const>" line.
struct ReductionFiles {
  std::string instance, decomposition, certificate;
};
ReductionFiles format_reduction(const ReductionOutput& r);

}  // namespace tdl
