#pragma once

#include "tdl/decomp/decomposition.hpp"

namespace tdl {

// Depth bound of tree_to_tdd: depth <= kTreeToTddC * (w+1) * ceil(lg max(2,n)).
inline constexpr int kTreeToTddC = 4;

int ceil_lg(long long x);  // ceil(log2 x) for x >= 1, 0 for x <= 1

// One bag per root-to-leaf path, in left-to-right depth-first order.
TreeDecomposition td_to_path(const Graph& g, const TreedepthDecomposition& d);

// Prunes d, then splits the bag tree at centroids; each centroid's unplaced
// vertices become a chain above the recursively built subtrees.
TreedepthDecomposition tree_to_tdd(const Graph& g, const TreeDecomposition& d);

long long tree_to_tdd_bound(int width, int n);

// Contracts every bag that is a subset of a neighbouring bag.
TreeDecomposition prune_tree_decomposition(const Graph& g, const TreeDecomposition& d);

// Depth-first spanning forest, roots and children in ascending order.
TreedepthDecomposition dfs_tdd(const Graph& g);

// TW/PW: C'_t = union of B_h over h in C_t. TD: lowest-common-ancestor
// placement followed by path expansion.
// Throws std::logic_error if the width/depth bound w*(w_h+1) (w*depth for TD)
// is ever exceeded.
Decomposition lift_via_deconstruction(DecompKind kind, const Graph& g, const Deconstruction& dc, const Decomposition& dh);

// g must equal the subgraph of g2 induced by 1..g.n(); every component of
// g2 - V(g) must have at most c vertices and a clique neighbourhood in g.
Decomposition extend_clique_attached(DecompKind kind, const Graph& g, const Graph& g2, const Decomposition& d, int c);

}  // namespace tdl
