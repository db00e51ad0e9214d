#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tdl/core/graph.hpp"

namespace tdl {

enum class DecompKind { tw, pw, td };

const char* kind_name(DecompKind k);

// Bags are indexed 0..B-1 in memory and 1..B in files.
struct TreeDecomposition {
  std::vector<std::vector<int>> bags;  // each sorted ascending
  std::vector<std::pair<int, int>> tree_edges;
  bool is_path = false;

  int num_bags() const { return static_cast<int>(bags.size()); }
  int width() const;  // max |bag| - 1, or -1
  std::vector<std::vector<int>> bag_adjacency() const;
  void normalize();   // sort bags and edges
  bool operator==(const TreeDecomposition& o) const {
    return bags == o.bags && tree_edges == o.tree_edges;
  }
};

// parent[v] for v = 1..n; 0 marks a root.
struct TreedepthDecomposition {
  std::vector<int> parent{0};

  TreedepthDecomposition() = default;
  explicit TreedepthDecomposition(int n) : parent(static_cast<size_t>(n) + 1, 0) {}

  int n() const { return static_cast<int>(parent.size()) - 1; }
  std::vector<std::vector<int>> children() const;  // ascending; index 0 holds the roots
  std::vector<int> node_depths() const;  // 1 for roots; assumes acyclic
  int depth() const;                     // max node count on a root-leaf path
  bool is_ancestor(int a, int v) const;  // a == v counts
  bool operator==(const TreedepthDecomposition& o) const { return parent == o.parent; }
};

// Bag indices along a path decomposition, starting at the smaller-id endpoint.
// Throws std::invalid_argument if the bag tree is not a path.
std::vector<int> path_order(const TreeDecomposition& d);

using Decomposition = std::variant<TreeDecomposition, TreedepthDecomposition>;

DecompKind kind_of(const Decomposition& d);

// width for tree/path decompositions, depth for tree-depth decompositions
int measure(const Decomposition& d);

struct Validation {
  bool valid = false;
  int value = 0;        // width or depth when valid
  std::string witness;  // first violated condition when invalid
};

Validation validate_tree_or_path(const Graph& g, const TreeDecomposition& d);
Validation validate_tdd(const Graph& g, const TreedepthDecomposition& d);
Validation validate_decomposition(const Graph& g, const Decomposition& d);

// Deconstruction of g into the host graph: bags[h] for h = 1..host.n().
struct Deconstruction {
  Graph host;
  std::vector<std::vector<int>> bags{{}};
};

// Width = max size of a bag or of the union of two host-adjacent bags.
Validation validate_deconstruction(const Graph& g, const Deconstruction& dc);

// File formats.
std::string format_td(const TreeDecomposition& d, int n);
TreeDecomposition parse_td(const std::string& text);
std::string format_tdd(const TreedepthDecomposition& d);
TreedepthDecomposition parse_tdd(const std::string& text);
std::string format_deconstruction(const Deconstruction& dc);
Deconstruction parse_deconstruction(const std::string& text);

// Detects the format from the "s td" / "s tdd" header.
Decomposition parse_decomposition(const std::string& text);
std::string format_decomposition(const Decomposition& d, int n);

}  // namespace tdl
