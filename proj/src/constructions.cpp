#include "treeconn/constructions.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace treeconn {

Graph build_h(int k) {
  if (k < 1) throw std::invalid_argument("the family needs k >= 1");
  const int cycle = 4 * k;
  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j < cycle; ++j) edges.emplace_back(j, (j + 1) % cycle);
  for (int i = 1; i <= k; ++i) {
    const int z = cycle - 1 + i;
    edges.emplace_back(z, 2 * (i - 1));
    edges.emplace_back(z, 2 * (i + k - 1));
  }
  return Graph(5 * k, std::move(edges));
}

Graph smooth(const Graph& g, int u) {
  if (u < 0 || u >= g.vertex_count()) {
    throw std::invalid_argument("vertex " + std::to_string(u) + " out of range");
  }
  if (g.degree(u) != 2) {
    throw std::invalid_argument("vertex " + std::to_string(u) + " does not have degree 2");
  }
  const auto nbrs = g.neighbors(u);
  if (g.has_edge(nbrs[0], nbrs[1])) {
    throw std::invalid_argument("smoothing vertex " + std::to_string(u) +
                                " would create a parallel edge");
  }
  const auto shift = [u](int v) { return v > u ? v - 1 : v; };
  std::vector<std::pair<int, int>> edges;
  for (const auto& [a, b] : g.edges()) {
    if (a == u || b == u) continue;
    edges.emplace_back(shift(a), shift(b));
  }
  edges.emplace_back(shift(nbrs[0]), shift(nbrs[1]));
  return Graph(g.vertex_count() - 1, std::move(edges));
}

Graph smooth_many(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("the number of smoothing steps must be positive");
  Graph out = g;
  for (int step = 0; step < t; ++step) {
    int pick = -1;
    for (int v = 0; v < out.vertex_count(); ++v) {
      if (out.degree(v) != 2) continue;
      const auto nbrs = out.neighbors(v);
      if (out.has_edge(nbrs[0], nbrs[1])) continue;
      pick = v;
      break;
    }
    if (pick < 0) throw std::invalid_argument("no vertex is left to smooth");
    out = smooth(out, pick);
  }
  return out;
}

Graph figure_fixture(int id) {
  switch (id) {
    case 1:
      // Cycle 0..7, one long chord, two apex vertices over antipodal pairs.
      return Graph(10, {{0, 1},
                        {1, 2},
                        {2, 3},
                        {3, 4},
                        {4, 5},
                        {5, 6},
                        {6, 7},
                        {0, 7},
                        {3, 7},
                        {0, 8},
                        {4, 8},
                        {2, 9},
                        {6, 9}});
    case 2:
      // Degree-2 class 0..4 over the four-vertex class 5..8; 5 and 6 adjacent.
      return Graph(9, {{0, 5},
                       {1, 5},
                       {0, 6},
                       {2, 6},
                       {1, 7},
                       {3, 7},
                       {4, 7},
                       {2, 8},
                       {3, 8},
                       {4, 8},
                       {5, 6}});
    case 3:
      return Graph(9, {{0, 5},
                       {1, 5},
                       {2, 6},
                       {3, 6},
                       {0, 7},
                       {2, 7},
                       {4, 7},
                       {1, 8},
                       {3, 8},
                       {4, 8},
                       {5, 6}});
    case 4:
      return Graph(9, {{0, 5},
                       {1, 5},
                       {2, 6},
                       {3, 6},
                       {0, 7},
                       {1, 7},
                       {4, 7},
                       {2, 8},
                       {3, 8},
                       {4, 8},
                       {5, 6}});
    case 5:
      // Cycle 0..7, chords {2,6} and {3,7}, apex vertex over {0,4}.
      return Graph(9, {{0, 1},
                       {1, 2},
                       {2, 3},
                       {3, 4},
                       {4, 5},
                       {5, 6},
                       {6, 7},
                       {0, 7},
                       {2, 6},
                       {3, 7},
                       {0, 8},
                       {4, 8}});
    case 6:
      return Graph(8, {{0, 1},
                       {1, 2},
                       {2, 3},
                       {3, 4},
                       {4, 5},
                       {5, 6},
                       {6, 7},
                       {0, 7},
                       {0, 4},
                       {2, 6}});
    default:
      throw std::invalid_argument("figure id " + std::to_string(id) + " is outside 1..6");
  }
}

Graph build_extremal(int n) {
  if (n < 4) throw std::invalid_argument("extremal graphs start at four vertices");
  switch (n) {
    case 4:
      return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    case 5:
      return build_h(1);
    case 6:
      return smooth_many(figure_fixture(6), 2);
    case 7:
      return smooth_many(figure_fixture(6), 1);
    case 8:
      return figure_fixture(6);
    case 9:
      return figure_fixture(5);
    case 10:
      return figure_fixture(1);
    default: {
      const int k = (n + 4) / 5;
      const int t = 5 * k - n;
      Graph h = build_h(k);
      return t == 0 ? h : smooth_many(h, t);
    }
  }
}

}  // namespace treeconn
