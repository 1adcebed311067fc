#pragma once

#include "treeconn/graph.hpp"

namespace treeconn {

// Family member on 5k vertices with 6k edges: a cycle of length 4k whose
// even-labeled vertices x_1..x_2k alternate with odd-labeled y_1..y_2k, plus
// vertices z_1..z_k where z_i joins x_i and x_{i+k}.
Graph build_h(int k);

// Suppresses a degree-2 vertex: removes it and joins its neighbors directly.
// Labels above u shift down by one. Fails when the neighbors are already
// adjacent, since that would need a parallel edge.
Graph smooth(const Graph& g, int u);

// Runs smooth t times, each time at the least label that admits it.
Graph smooth_many(const Graph& g, int t);

// The six hand-checked witness graphs, also shipped under fixtures/.
Graph figure_fixture(int id);

// A graph of order n meeting the minimum edge count among graphs whose
// three-set connectivity is 2. Dispatches to the fixtures for 8..10 and to
// smoothed family members elsewhere.
Graph build_extremal(int n);

}  // namespace treeconn
