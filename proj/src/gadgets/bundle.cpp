#include <stdexcept>

#include "tdl/core/codec.hpp"
#include "tdl/decomp/transform.hpp"
#include "tdl/gadgets/gadgets.hpp"

namespace tdl {

GadgetBundle bundle_from_bags(CnfFormula f, const std::vector<std::vector<int>>& bags, const std::vector<int>& top) {
  GadgetBundle b;
  Graph g = primal_graph(f);
  b.path_decomp.is_path = true;
  b.path_decomp.bags = bags;
  if (b.path_decomp.bags.empty()) b.path_decomp.bags.emplace_back();
  for (int i = 0; i + 1 < b.path_decomp.num_bags(); ++i) b.path_decomp.tree_edges.emplace_back(i, i + 1);
  b.path_decomp.normalize();
  auto vp = validate_tree_or_path(g, b.path_decomp);
  if (!vp.valid) throw std::logic_error("emitted path decomposition invalid: " + vp.witness);

  std::vector<char> is_top(f.num_vars + 1, 0);
  for (int x : top) is_top[x] = 1;
  std::vector<int> keep, id(f.num_vars + 1, 0);
  for (int x = 1; x <= f.num_vars; ++x)
    if (!is_top[x]) {
      keep.push_back(x);
      id[x] = static_cast<int>(keep.size());
    }
  Graph h = induced_subgraph(g, keep);
  TreeDecomposition rest;
  rest.is_path = true;
  for (const auto& bag : b.path_decomp.bags) {
    std::vector<int> nb;
    for (int x : bag)
      if (!is_top[x]) nb.push_back(id[x]);
    rest.bags.push_back(std::move(nb));
  }
  rest.tree_edges = b.path_decomp.tree_edges;
  auto inner = tree_to_tdd(h, rest);
  b.tdd = TreedepthDecomposition(f.num_vars);
  int last = 0;
  for (int x : top) {
    b.tdd.parent[x] = last;
    last = x;
  }
  for (int i = 1; i <= h.n(); ++i) b.tdd.parent[keep[i - 1]] = inner.parent[i] ? keep[inner.parent[i] - 1] : last;
  auto vt = validate_tdd(g, b.tdd);
  if (!vt.valid) throw std::logic_error("emitted tdd invalid: " + vt.witness);
  b.formula = std::move(f);
  return b;
}

BundleFiles format_bundle(const GadgetBundle& b) {
  return {format_cnf(b.formula), format_td(b.path_decomp, b.formula.num_vars), format_tdd(b.tdd)};
}

}  // namespace tdl
