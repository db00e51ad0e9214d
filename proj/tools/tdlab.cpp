// tdlab: command-line front end for the tree-depth library.
//
// Exit codes: 0 success, 1 negative answer, 2 usage error, 3 validation
// failure (invalid decomposition, malformed input file, violated bound).

#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "tdl/auxsa/auxsa.hpp"
#include "tdl/core/codec.hpp"
#include "tdl/decomp/transform.hpp"
#include "tdl/gadgets/gadgets.hpp"
#include "tdl/modcount/modcount.hpp"
#include "tdl/reduce/reduce.hpp"
#include "tdl/tdalg/tdalg.hpp"

using namespace tdl;

namespace {

constexpr int kOk = 0, kNo = 1, kUsage = 2, kInvalid = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool g_meter = false;

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }
Decomposition load_decomp(const std::string& path) { return parse_decomposition(read_file(path)); }

TreedepthDecomposition load_tdd(const std::string& path) {
  Decomposition d = load_decomp(path);
  if (auto* t = std::get_if<TreedepthDecomposition>(&d)) return *t;
  throw UsageError(path + " is not a tree-depth decomposition");
}

TreeDecomposition load_td(const std::string& path) {
  Decomposition d = load_decomp(path);
  if (auto* t = std::get_if<TreeDecomposition>(&d)) return *t;
  throw UsageError(path + " is not a tree or path decomposition");
}

void meter_lines(const SpaceMeter& m) {
  if (!g_meter) return;
  std::cout << "m frames " << m.peak_frames << "\n"
            << "m cells " << m.peak_aux_cells << "\n";
}

void emit(const std::string& prefix, const std::string& ext, const std::string& text) {
  if (prefix.empty())
    std::cout << text;
  else
    write_file(prefix + "." + ext, text);
}

void emit_bundle(const GadgetBundle& b, const std::string& prefix) {
  auto files = format_bundle(b);
  emit(prefix, "cnf", files.cnf);
  if (!prefix.empty()) {
    write_file(prefix + ".td", files.td);
    write_file(prefix + ".tdd", files.tdd);
  }
}

// Symbols separated by spaces or commas; a single token made of one-character
// symbols is split per character.
std::vector<int> parse_word(const TuringMachine& tm, const std::string& text) {
  std::string spaced = text;
  for (char& ch : spaced)
    if (ch == ',') ch = ' ';
  std::istringstream in(spaced);
  std::vector<std::string> toks;
  for (std::string t; in >> t;) toks.push_back(t);
  if (toks.size() == 1 && tm.find_symbol(toks[0]) < 0) {
    std::vector<std::string> chars;
    for (char ch : toks[0]) chars.emplace_back(1, ch);
    toks = chars;
  }
  return word(tm, toks);
}

int cmd_validate(const std::string& gpath, const std::string& dpath) {
  Graph g = load_graph(gpath);
  Decomposition d = load_decomp(dpath);
  Validation v = validate_decomposition(g, d);
  if (!v.valid) {
    std::cout << "s invalid\nc witness " << v.witness << "\n";
    return kInvalid;
  }
  std::cout << "s valid " << kind_name(kind_of(d)) << " " << v.value << "\n";
  return kOk;
}

int cmd_transform(const std::string& op, const std::string& gpath, const std::string& dpath) {
  Graph g = load_graph(gpath);
  if (op == "dfs") {
    std::cout << format_tdd(dfs_tdd(g));
    return kOk;
  }
  Decomposition d = load_decomp(dpath);
  Validation v = validate_decomposition(g, d);
  if (!v.valid) {
    std::cout << "c witness " << v.witness << "\n";
    return kInvalid;
  }
  if (op == "to-path") {
    auto* t = std::get_if<TreedepthDecomposition>(&d);
    if (!t) throw UsageError("to-path needs a tree-depth decomposition");
    std::cout << format_td(td_to_path(g, *t), g.n());
  } else if (op == "to-tdd") {
    auto* t = std::get_if<TreeDecomposition>(&d);
    if (!t) throw UsageError("to-tdd needs a tree or path decomposition");
    std::cout << format_tdd(tree_to_tdd(g, *t));
  } else if (op == "prune") {
    auto* t = std::get_if<TreeDecomposition>(&d);
    if (!t) throw UsageError("prune needs a tree or path decomposition");
    std::cout << format_td(prune_tree_decomposition(g, *t), g.n());
  } else {
    throw UsageError("unknown transform " + op);
  }
  return kOk;
}

int cmd_solve_3col(const std::string& mode, const std::string& gpath, const std::string& dpath) {
  Graph g = load_graph(gpath);
  ColorResult r;
  if (mode == "td")
    r = solve_3col_td(g, load_tdd(dpath));
  else if (mode == "pw")
    r = solve_3col_pw_baseline(g, load_td(dpath));
  else
    throw UsageError("solve-3col mode must be td or pw");
  std::cout << (r.colorable ? "s colorable\n" : "s not-colorable\n");
  meter_lines(r.meter);
  return r.colorable ? kOk : kNo;
}

int cmd_count_ds(const std::string& mode, const std::string& gpath, const std::string& dpath, unsigned threads) {
  Graph g = load_graph(gpath);
  TreedepthDecomposition d = load_tdd(dpath);
  if (mode == "exact") {
    SpaceMeter m;
    auto q = count_ds_exact(g, d, &m);
    std::cout << format_polynomial(q);
    meter_lines(m);
  } else if (mode == "lowspace") {
    LowspaceTrace trace;
    auto q = count_ds_lowspace(g, d, &trace, threads);
    if (trace.fallback) std::cout << "c fallback exact\n";
    for (auto [p, a] : trace.prime_alpha) std::cout << "c prime " << p << " alpha " << a << "\n";
    std::cout << format_polynomial(q);
    meter_lines(trace.meter);
  } else {
    throw UsageError("count-ds mode must be exact or lowspace");
  }
  return kOk;
}

int cmd_max_is(const std::string& gpath, const std::string& dpath, int threshold) {
  Graph g = load_graph(gpath);
  IsResult r = max_is_td(g, load_tdd(dpath));
  std::cout << "s " << r.size << "\n";
  meter_lines(r.meter);
  return threshold >= 0 && r.size < threshold ? kNo : kOk;
}

int cmd_gadget_ram(int n, const std::string& prefix) {
  if (n < 1) throw UsageError("ram gadget needs n >= 1");
  emit_bundle(ram_gadget(n), prefix);
  return kOk;
}

int cmd_gadget_comp(const std::string& mpath, const std::string& input, int s, int t, int h,
                    const std::string& prefix) {
  TuringMachine tm = parse_machine(read_file(mpath)).tm;
  auto g = computation_gadget(tm, parse_word(tm, input), s, t, h);
  emit_bundle(g.bundle, prefix);
  return kOk;
}

int cmd_reduce(const std::string& name, const std::string& ipath, const std::string& dpath, int k,
               const std::string& prefix) {
  const std::string text = read_file(ipath);
  Decomposition d = load_decomp(dpath);
  auto threshold = [&] {
    if (k >= 0) return k;
    if (auto v = comment_value(text, "threshold")) return static_cast<int>(*v);
    throw UsageError(name + " needs a threshold (--k or a 'c threshold' line)");
  };
  ReductionOutput r;
  if (name == "cnf-to-ksat")
    r = cnf_to_ksat(parse_cnf(text), k < 0 ? 3 : k, d);
  else if (name == "primal-to-incidence" || name == "incidence-to-primal") {
    CnfFormula f = parse_cnf(text);
    int width = k < 0 ? static_cast<int>(f.max_clause_size()) : k;
    r = ksat_decomp_convert(name[0] == 'p' ? GraphSide::primal : GraphSide::incidence, f, width, d);
  } else if (name == "3sat-to-3col")
    r = sat3_to_3col(parse_cnf(text), d);
  else if (name == "3col-to-3sat")
    r = threecol_to_3sat(parse_graph(text), d);
  else if (name == "3sat-to-is")
    r = sat3_to_is(parse_cnf(text), d);
  else if (name == "is-to-vc")
    r = is_to_vc(parse_graph(text), threshold(), d);
  else if (name == "vc-to-ds")
    r = vc_to_ds(parse_graph(text), threshold(), d);
  else
    throw UsageError("unknown reduction " + name);
  auto files = format_reduction(r);
  const bool cnf = std::holds_alternative<CnfFormula>(r.instance);
  emit(prefix, cnf ? "cnf" : "gr", files.instance);
  emit(prefix, kind_of(r.decomposition) == DecompKind::td ? "tdd" : "td", files.decomposition);
  emit(prefix, "cert", files.certificate);
  return kOk;
}

StackMachine load_machine(const std::string& spec, const std::string& gpath, const std::string& dpath, int threshold,
                          std::vector<int>* input) {
  if (spec == "three-col" || spec == "max-is") {
    if (gpath.empty() || dpath.empty()) throw UsageError("builtin programs need --graph and --tdd");
    auto inst = instantiate_builtin(spec == "three-col" ? Builtin::three_col : Builtin::max_is_threshold,
                                    load_graph(gpath), load_tdd(dpath), std::max(threshold, 0));
    if (input) *input = inst.input;
    return inst.machine;
  }
  return parse_stack_machine(read_file(spec));
}

struct AuxsaArgs {
  std::string machine, input, graph, tdd, out;
  int threshold = 0, steps = -1, max_stack = -1, s = 0, n = -1, c = 1;
  bool transcript = false;
};

int cmd_auxsa(const std::string& action, const AuxsaArgs& a) {
  std::vector<int> input;
  bool builtin = a.machine == "three-col" || a.machine == "max-is";
  StackMachine m = load_machine(a.machine, a.graph, a.tdd, a.threshold, &input);
  if (!builtin) input = parse_word(m.tm, a.input);
  const int n = a.n >= 0 ? a.n : static_cast<int>(input.size());
  auto run = [&] {
    int steps = a.steps >= 0 ? a.steps : (m.step_bound ? m.step_bound : 1 << 20);
    int cap = a.max_stack >= 0 ? a.max_stack : m.stack_bound;
    return simulate(m, input, steps, cap);
  };

  if (action == "sim") {
    SimResult r = run();
    std::cout << (r.accepts ? "s accept\n" : "s reject\n") << "c explored " << r.explored << "\n";
    if (r.accepts && a.transcript) std::cout << format_transcript(m, *r.witness);
    return r.accepts ? kOk : kNo;
  }
  if (action == "regularize") {
    if (a.s < 1 || a.n < 0) throw UsageError("regularize needs --space and --n");
    std::cout << format_stack_machine(regularize_machine(m, a.s, a.n, a.c));
    return kOk;
  }
  if (action == "check") {
    SimResult r;
    bool with_run = !input.empty() || !a.input.empty() || builtin;
    if (with_run) r = run();
    RegularityReport rep = check_regular(m, n, r.accepts ? &*r.witness : nullptr);
    std::cout << "r a " << (rep.a ? "ok" : "fail " + rep.a_msg) << "\n"
              << "r b " << (rep.b ? "ok" : "fail " + rep.b_msg) << "\n";
    if (rep.c_checked)
      std::cout << "r c " << (rep.c ? "ok" : "fail " + rep.c_msg) << "\n";
    else
      std::cout << "r c unchecked\n";
    return rep.a && rep.b && (!rep.c_checked || rep.c) ? kOk : kNo;
  }
  if (action == "compile") {
    CompileResult r = compile_hardness(m, input);
    emit_bundle(r.bundle, a.out);
    std::cerr << "c vars " << r.bundle.formula.num_vars << " clauses " << r.bundle.formula.clauses.size()
              << " depth " << r.bundle.tdd.depth() << " bound " << r.depth_bound << "\n";
    return kOk;
  }
  throw UsageError("unknown auxsa action " + action);
}

int cmd_primes(long long n) {
  if (n < 1) throw UsageError("primes needs n >= 1");
  BigInt product = 1;
  for (auto p : primes_in_open_interval(n, 2 * n)) {
    std::cout << "p " << p << "\n";
    product *= p;
  }
  BigInt bound = BigInt(1) << n;
  std::cout << "c product " << product << "\n"
            << "s " << (product > bound ? "exceeds" : "below") << " 2^" << n << "\n";
  return product > bound ? kOk : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tdlab: bounded tree-depth algorithms, reductions and machine compilers"};
  app.require_subcommand(1);
  app.add_flag("--meter", g_meter, "print space meter lines");
  std::function<int()> action;

  std::string gpath, dpath, mode, name, prefix, op;
  int threshold = -1, k = -1, n = 0, s = 1, t = 1, h = 0;
  unsigned threads = 0;
  long long pn = 0;
  std::string machine, input;
  AuxsaArgs aux;

  auto* validate = app.add_subcommand("validate", "validate a decomposition (exit 3 when invalid)");
  validate->add_option("graph", gpath)->required();
  validate->add_option("decomposition", dpath)->required();
  validate->callback([&] { action = [&] { return cmd_validate(gpath, dpath); }; });

  auto* transform = app.add_subcommand("transform", "to-path | to-tdd | prune | dfs");
  transform->add_option("op", op)->required()->check(CLI::IsMember({"to-path", "to-tdd", "prune", "dfs"}));
  transform->add_option("graph", gpath)->required();
  transform->add_option("decomposition", dpath);
  transform->callback([&] {
    if (op != "dfs" && dpath.empty()) throw CLI::ValidationError("transform " + op + " needs a decomposition");
    action = [&] { return cmd_transform(op, gpath, dpath); };
  });

  auto* col = app.add_subcommand("solve-3col", "3-colourability from a tdd (td) or path decomposition (pw)");
  col->add_option("mode", mode)->required()->check(CLI::IsMember({"td", "pw"}));
  col->add_option("graph", gpath)->required();
  col->add_option("decomposition", dpath)->required();
  col->callback([&] { action = [&] { return cmd_solve_3col(mode, gpath, dpath); }; });

  auto* ds = app.add_subcommand("count-ds", "domination polynomial (exact | lowspace)");
  ds->add_option("mode", mode)->required()->check(CLI::IsMember({"exact", "lowspace"}));
  ds->add_option("graph", gpath)->required();
  ds->add_option("tdd", dpath)->required();
  ds->add_option("--threads", threads, "worker threads for lowspace (0 = hardware)");
  ds->callback([&] { action = [&] { return cmd_count_ds(mode, gpath, dpath, threads); }; });

  auto* is = app.add_subcommand("max-is", "maximum independent set size");
  is->add_option("graph", gpath)->required();
  is->add_option("tdd", dpath)->required();
  is->add_option("--threshold", threshold, "exit 1 when the maximum is below this");
  is->callback([&] { action = [&] { return cmd_max_is(gpath, dpath, threshold); }; });

  auto* gadget = app.add_subcommand("gadget", "emit a gadget CNF with decompositions");
  gadget->require_subcommand(1);
  auto* ram = gadget->add_subcommand("ram", "random-access gadget");
  ram->add_option("n", n)->required();
  ram->add_option("-o,--out", prefix, "write <prefix>.cnf/.td/.tdd");
  ram->callback([&] { action = [&] { return cmd_gadget_ram(n, prefix); }; });
  auto* comp = gadget->add_subcommand("comp", "computation gadget");
  comp->add_option("machine", machine)->required();
  comp->add_option("--input", input, "input word");
  comp->add_option("--space", s, "work cells")->required();
  comp->add_option("--steps", t, "steps")->required();
  comp->add_option("--height", h, "length of the second tape")->required();
  comp->add_option("-o,--out", prefix, "write <prefix>.cnf/.td/.tdd");
  comp->callback([&] { action = [&] { return cmd_gadget_comp(machine, input, s, t, h, prefix); }; });

  auto* reduce = app.add_subcommand("reduce", "decomposition-carrying reductions");
  reduce->add_option("name", name)
      ->required()
      ->check(CLI::IsMember({"cnf-to-ksat", "primal-to-incidence", "incidence-to-primal", "3sat-to-3col",
                             "3col-to-3sat", "3sat-to-is", "is-to-vc", "vc-to-ds"}));
  reduce->add_option("instance", gpath)->required();
  reduce->add_option("decomposition", dpath)->required();
  reduce->add_option("--k", k, "clause width or threshold");
  reduce->add_option("-o,--out", prefix, "write <prefix>.{gr|cnf}, .td/.tdd and .cert");
  reduce->callback([&] { action = [&] { return cmd_reduce(name, gpath, dpath, k, prefix); }; });

  auto* auxsa = app.add_subcommand("auxsa", "auxiliary-stack machines: sim | regularize | compile | check");
  auxsa->add_option("action", op)->required()->check(CLI::IsMember({"sim", "regularize", "compile", "check"}));
  auxsa->add_option("machine", aux.machine, "machine file, or three-col / max-is")->required();
  auxsa->add_option("--input", aux.input, "input word");
  auxsa->add_option("--graph", aux.graph, "graph for a builtin program");
  auxsa->add_option("--tdd", aux.tdd, "tdd for a builtin program");
  auxsa->add_option("--threshold", aux.threshold, "threshold for max-is");
  auxsa->add_option("--steps", aux.steps, "simulation step limit");
  auxsa->add_option("--max-stack", aux.max_stack, "simulation stack limit");
  auxsa->add_option("--space", aux.s, "space bound for regularize");
  auxsa->add_option("--n", aux.n, "input length");
  auxsa->add_option("--c", aux.c, "tree depth constant");
  auxsa->add_flag("--transcript", aux.transcript, "print the accepting run");
  auxsa->add_option("-o,--out", aux.out, "write <prefix>.cnf/.td/.tdd (compile)");
  auxsa->callback([&] { action = [&] { return cmd_auxsa(op, aux); }; });

  auto* primes = app.add_subcommand("primes", "primes in (n, 2n) and their product against 2^n");
  primes->add_option("n", pn)->required();
  primes->callback([&] { action = [&] { return cmd_primes(pn); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {  // invalid_argument, out_of_range, length_error
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::runtime_error& e) {  // unreadable files
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
