#include "treeconn/steiner.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace treeconn {
namespace {

// One subtree spanning the terminals, leaf-pruned: every leaf is a terminal.
// Edges are recorded as bits over the graph's edge list.
struct SubtreeCandidate {
  std::uint64_t extra_vertices = 0;
  std::uint32_t edge_bits = 0;
};

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

struct OracleEnumerator {
  const Graph& g;
  std::uint64_t terminal_bits;
  std::vector<SubtreeCandidate> candidates;
  std::vector<int> edge_pool;
  int target_edges = 0;
  std::uint64_t pool_vertices = 0;

  OracleEnumerator(const Graph& graph, std::uint64_t terminals)
      : g(graph), terminal_bits(terminals) {}

  void collect_for(std::uint64_t vertex_bits) {
    edge_pool.clear();
    const auto& edges = g.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if ((vertex_bits >> edges[e].first & 1) && (vertex_bits >> edges[e].second & 1)) {
        edge_pool.push_back(static_cast<int>(e));
      }
    }
    target_edges = std::popcount(vertex_bits) - 1;
    pool_vertices = vertex_bits;
    if (static_cast<int>(edge_pool.size()) < target_edges) return;
    std::vector<int> parent(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) parent[v] = v;
    grow(0, 0, 0, parent);
  }

  void grow(std::size_t pos, int chosen, std::uint32_t edge_bits, const std::vector<int>& parent) {
    if (chosen == target_edges) {
      finish(edge_bits);
      return;
    }
    if (edge_pool.size() - pos < static_cast<std::size_t>(target_edges - chosen)) return;
    for (std::size_t i = pos; i < edge_pool.size(); ++i) {
      const auto& [u, v] = g.edges()[edge_pool[i]];
      std::vector<int> next = parent;
      const int ru = find_root(next, u);
      const int rv = find_root(next, v);
      if (ru == rv) continue;
      next[ru] = rv;
      grow(i + 1, chosen + 1, edge_bits | (std::uint32_t{1} << edge_pool[i]), next);
    }
  }

  // An acyclic edge set of the right size spans the vertex pool, so only the
  // leaf condition is left to check.
  void finish(std::uint32_t edge_bits) {
    int degree[Graph::kMaxVertices] = {};
    std::uint32_t rest = edge_bits;
    while (rest) {
      const int e = std::countr_zero(rest);
      rest &= rest - 1;
      ++degree[g.edges()[e].first];
      ++degree[g.edges()[e].second];
    }
    std::uint64_t vertices = pool_vertices;
    while (vertices) {
      const int v = std::countr_zero(vertices);
      vertices &= vertices - 1;
      if (degree[v] == 1 && !(terminal_bits >> v & 1)) return;
    }
    candidates.push_back(SubtreeCandidate{pool_vertices & ~terminal_bits, edge_bits});
  }
};

struct FamilySearch {
  const std::vector<SubtreeCandidate>& candidates;
  const std::vector<std::uint32_t>& terminal_edge_bits;
  int best = 0;
  int cap = 0;

  void run(std::size_t from, int count, std::uint64_t used_vertices, std::uint32_t used_edges) {
    best = std::max(best, count);
    if (best >= cap) return;
    if (count + static_cast<int>(candidates.size() - from) <= best) return;
    int headroom = cap;
    for (std::uint32_t incident : terminal_edge_bits) {
      headroom = std::min(headroom, std::popcount(incident & ~used_edges));
    }
    if (count + headroom <= best) return;
    for (std::size_t i = from; i < candidates.size(); ++i) {
      if (candidates[i].extra_vertices & used_vertices) continue;
      if (candidates[i].edge_bits & used_edges) continue;
      run(i + 1, count + 1, used_vertices | candidates[i].extra_vertices,
          used_edges | candidates[i].edge_bits);
      if (best >= cap) return;
    }
  }
};

}  // namespace

int brute_force_kappa_of_set(const Graph& g, const VertexSet& terminals) {
  if (g.vertex_count() > 8) {
    throw std::invalid_argument("the reference search handles at most 8 vertices");
  }
  if (terminals.size() < 2) {
    throw std::invalid_argument("a tree packing needs at least two terminals");
  }
  for (int v : terminals.members()) {
    if (v < 0 || v >= g.vertex_count()) {
      throw std::invalid_argument("terminal " + std::to_string(v) + " out of range");
    }
  }
  const std::uint64_t smask = terminals.mask();
  if ((g.reachable_mask(terminals[0], g.full_mask()) & smask) != smask) return 0;

  std::vector<int> others;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!(smask >> v & 1)) others.push_back(v);
  }
  OracleEnumerator enumerator(g, smask);
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << others.size()); ++pick) {
    std::uint64_t vertex_bits = smask;
    for (std::size_t i = 0; i < others.size(); ++i) {
      if (pick >> i & 1) vertex_bits |= std::uint64_t{1} << others[i];
    }
    enumerator.collect_for(vertex_bits);
  }

  std::vector<std::uint32_t> terminal_edge_bits;
  for (int x : terminals.members()) {
    std::uint32_t incident = 0;
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
      if (g.edges()[e].first == x || g.edges()[e].second == x) {
        incident |= std::uint32_t{1} << e;
      }
    }
    terminal_edge_bits.push_back(incident);
  }
  int cap = g.vertex_count();
  for (std::uint32_t incident : terminal_edge_bits) {
    cap = std::min(cap, std::popcount(incident));
  }

  FamilySearch search{enumerator.candidates, terminal_edge_bits, 0, cap};
  search.run(0, 0, 0, 0);
  return search.best;
}

}  // namespace treeconn
