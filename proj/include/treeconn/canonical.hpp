#pragma once

#include <string>
#include <vector>

#include "treeconn/graph.hpp"

namespace treeconn {

/// Largest graph the canonical-labeling search accepts.
inline constexpr int kCanonicalLimit = 32;

/// Canonical relabeling of g (perm[old] = new): equitable degree refinement,
/// then backtracking over the first non-singleton cell, keeping the labeling
/// whose adjacency bit string is lexicographically least. Isomorphic graphs
/// get identical canonical relabelings of themselves.
std::vector<int> canonical_labeling(const Graph& g);

/// Byte key shared by exactly the graphs isomorphic to g: the graph6 line of
/// the canonically relabeled graph.
std::string canonical_form(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace treeconn
