#include <stdexcept>

#include "tdl/decomp/transform.hpp"
#include "tdl/gadgets/gadgets.hpp"

namespace tdl {

RamParts add_ram(CnfFormula& f, const std::vector<int>& index, const std::vector<int>& leaves,
                 const std::vector<int>& fixed) {
  const int L = static_cast<int>(index.size());
  const size_t N = size_t{1} << L;
  if (leaves.size() > N) throw std::invalid_argument("more leaves than index values");
  RamParts r;
  auto fresh = [&] {
    int x = f.new_var();
    r.fresh.push_back(x);
    return x;
  };
  auto leaf = [&](size_t i) {
    if (i < leaves.size() && leaves[i] != 0) return leaves[i];
    int x = fresh();
    bool one = i < leaves.size() && i < fixed.size() && fixed[i] == 1;
    f.add({one ? x : -x});
    return x;
  };
  if (L == 0) {
    int z = fresh();
    int x = leaf(0);
    f.add({-z, x});
    f.add({z, -x});
    r.tree = {z, x};
    return r;
  }
  r.tree.assign(2 * N - 1, 0);
  for (size_t i = 0; i + 1 < N; ++i) r.tree[i] = fresh();
  for (size_t i = 0; i < N; ++i) r.tree[N - 1 + i] = leaf(i);
  // node at depth d selects on index bit L-1-d
  for (size_t i = 0, depth = 0; i + 1 < N; ++i) {
    while ((size_t{1} << (depth + 1)) - 1 <= i) ++depth;
    const int y = index[L - 1 - depth], v = r.tree[i], v0 = r.tree[2 * i + 1], v1 = r.tree[2 * i + 2];
    f.add({y, -v0, v});
    f.add({y, v0, -v});
    f.add({-y, -v1, v});
    f.add({-y, v1, -v});
  }
  return r;
}

GadgetBundle ram_gadget(int n) {
  if (n < 1) throw std::invalid_argument("ram_gadget needs n >= 1");
  const int L = ceil_lg(n);
  GadgetBundle b;
  CnfFormula& f = b.formula;
  std::vector<int> x, y;
  for (int i = 0; i < n; ++i) x.push_back(f.new_var("x_" + std::to_string(i)));
  for (int j = 0; j < L; ++j) y.push_back(f.new_var("y_" + std::to_string(j)));
  auto parts = add_ram(f, y, x, {});
  f.name(parts.tree[0], "z");

  b.tdd = TreedepthDecomposition(f.num_vars);
  for (int j = 1; j < L; ++j) b.tdd.parent[y[j]] = y[j - 1];
  b.tdd.parent[parts.tree[0]] = L ? y[L - 1] : 0;
  for (size_t i = 1; i < parts.tree.size(); ++i) b.tdd.parent[parts.tree[i]] = parts.tree[L ? (i - 1) / 2 : 0];
  Graph g = primal_graph(f);
  b.path_decomp = td_to_path(g, b.tdd);

  const int Lb = ceil_lg(std::max(2, n));
  if (!validate_tdd(g, b.tdd).valid || b.tdd.depth() > kRamDepthC * Lb + Lb)
    throw std::logic_error("random-access gadget decomposition out of bounds");
  if (f.num_vars > kRamVarsC * n) throw std::logic_error("random-access gadget too large");
  return b;
}

}  // namespace tdl
