#include "treeconn/steiner.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>

namespace treeconn {
namespace {

std::string edge_text(int u, int v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

void check_terminals(const Graph& g, const VertexSet& terminals) {
  if (terminals.size() < 2) {
    throw std::invalid_argument("a tree packing needs at least two terminals");
  }
  for (int v : terminals.members()) {
    if (v < 0 || v >= g.vertex_count()) {
      throw std::invalid_argument("terminal " + std::to_string(v) + " out of range");
    }
  }
}

void check_limit(const Graph& g, int solver_limit) {
  if (g.vertex_count() > solver_limit) {
    throw std::invalid_argument("graph has " + std::to_string(g.vertex_count()) +
                                " vertices, above the solver limit of " +
                                std::to_string(solver_limit));
  }
}

int min_terminal_degree(const Graph& g, const VertexSet& terminals) {
  int best = Graph::kMaxVertices;
  for (int v : terminals.members()) best = std::min(best, g.degree(v));
  return best;
}

// Exhaustive slot-assignment search. Slot values for vertices and
// terminal-terminal edges: 0..t-1 a tree slot, t unused, -1 undecided (edges
// only; vertices are decided in label order, so position implies decidedness).
struct PackingSearch {
  const Graph& g;
  const int tree_count;
  const std::vector<int>& terminals;
  std::uint64_t terminal_mask = 0;
  std::vector<int> free_vertices;
  std::vector<std::pair<int, int>> terminal_edges;
  std::vector<int> edge_choice;
  std::vector<std::uint64_t> slot_masks;
  std::uint64_t undecided_mask = 0;
  std::uint64_t unused_mask = 0;
  int slots_in_use = 0;

  PackingSearch(const Graph& graph, const VertexSet& s, int t)
      : g(graph), tree_count(t), terminals(s.members()) {
    terminal_mask = s.mask();
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (!(terminal_mask >> v & 1)) {
        free_vertices.push_back(v);
        undecided_mask |= std::uint64_t{1} << v;
      }
    }
    for (const auto& [u, v] : g.edges()) {
      if ((terminal_mask >> u & 1) && (terminal_mask >> v & 1)) {
        terminal_edges.emplace_back(u, v);
      }
    }
    edge_choice.assign(terminal_edges.size(), -1);
    slot_masks.assign(tree_count, 0);
  }

  bool edge_usable(std::size_t e, int slot) const {
    return edge_choice[e] == -1 || edge_choice[e] == slot;
  }

  // Optimistic connectivity: can this slot still reach every terminal using
  // its own vertices plus everything undecided?
  bool slot_can_connect(int slot) const {
    const std::uint64_t allowed = terminal_mask | slot_masks[slot] | undecided_mask;
    std::uint64_t visited = std::uint64_t{1} << terminals[0];
    std::uint64_t frontier = visited;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      std::uint64_t fresh = g.neighbor_mask(v) & allowed & ~visited;
      if (terminal_mask >> v & 1) {
        for (std::size_t e = 0; e < terminal_edges.size(); ++e) {
          if (edge_usable(e, slot)) continue;
          if (terminal_edges[e].first == v) fresh &= ~(std::uint64_t{1} << terminal_edges[e].second);
          if (terminal_edges[e].second == v) fresh &= ~(std::uint64_t{1} << terminal_edges[e].first);
        }
      }
      visited |= fresh;
      frontier |= fresh;
    }
    return (visited & terminal_mask) == terminal_mask;
  }

  bool feasible() const {
    for (int slot = 0; slot < tree_count; ++slot) {
      if (!slot_can_connect(slot)) return false;
    }
    // Each slot consumes a private edge at every terminal, so the edges still
    // open at a terminal bound the number of slots.
    for (int x : terminals) {
      int budget = std::popcount(g.neighbor_mask(x) & ~terminal_mask & ~unused_mask);
      for (std::size_t e = 0; e < terminal_edges.size(); ++e) {
        if (edge_choice[e] == tree_count) continue;
        if (terminal_edges[e].first == x || terminal_edges[e].second == x) ++budget;
      }
      if (budget < tree_count) return false;
    }
    return true;
  }

  int slot_cap() const { return std::min(slots_in_use, tree_count - 1); }

  bool assign_edges(std::size_t e) {
    if (e == terminal_edges.size()) return assign_vertices(0);
    for (int slot = 0; slot <= slot_cap(); ++slot) {
      edge_choice[e] = slot;
      const int saved = slots_in_use;
      slots_in_use = std::max(slots_in_use, slot + 1);
      if (feasible() && assign_edges(e + 1)) return true;
      slots_in_use = saved;
    }
    edge_choice[e] = tree_count;
    if (feasible() && assign_edges(e + 1)) return true;
    edge_choice[e] = -1;
    return false;
  }

  bool assign_vertices(std::size_t i) {
    if (i == free_vertices.size()) return true;
    const std::uint64_t bit = std::uint64_t{1} << free_vertices[i];
    undecided_mask &= ~bit;
    for (int slot = 0; slot <= slot_cap(); ++slot) {
      slot_masks[slot] |= bit;
      const int saved = slots_in_use;
      slots_in_use = std::max(slots_in_use, slot + 1);
      if (feasible() && assign_vertices(i + 1)) return true;
      slots_in_use = saved;
      slot_masks[slot] &= ~bit;
    }
    unused_mask |= bit;
    if (feasible() && assign_vertices(i + 1)) return true;
    unused_mask &= ~bit;
    undecided_mask |= bit;
    return false;
  }

  // Build one tree per slot from the final assignment: breadth-first spanning
  // tree of the slot's subgraph, then strip non-terminal leaves until only
  // terminal leaves remain.
  DisjointTreeFamily extract() const {
    DisjointTreeFamily family;
    family.terminals = VertexSet(terminals);
    const int n = g.vertex_count();
    for (int slot = 0; slot < tree_count; ++slot) {
      const std::uint64_t allowed = terminal_mask | slot_masks[slot];
      std::vector<int> parent(n, -1);
      std::vector<int> queue{terminals[0]};
      std::uint64_t visited = std::uint64_t{1} << terminals[0];
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        std::uint64_t fresh = g.neighbor_mask(v) & allowed & ~visited;
        if (terminal_mask >> v & 1) {
          for (std::size_t e = 0; e < terminal_edges.size(); ++e) {
            if (edge_choice[e] == slot) continue;
            if (terminal_edges[e].first == v) fresh &= ~(std::uint64_t{1} << terminal_edges[e].second);
            if (terminal_edges[e].second == v) fresh &= ~(std::uint64_t{1} << terminal_edges[e].first);
          }
        }
        visited |= fresh;
        while (fresh) {
          const int w = std::countr_zero(fresh);
          fresh &= fresh - 1;
          parent[w] = v;
          queue.push_back(w);
        }
      }
      std::vector<int> tree_degree(n, 0);
      std::vector<std::pair<int, int>> edges;
      for (int w : queue) {
        if (parent[w] < 0) continue;
        edges.emplace_back(std::min(w, parent[w]), std::max(w, parent[w]));
        ++tree_degree[w];
        ++tree_degree[parent[w]];
      }
      for (bool pruned = true; pruned;) {
        pruned = false;
        for (std::size_t i = 0; i < edges.size(); ++i) {
          const auto [a, b] = edges[i];
          const int leaf = tree_degree[a] == 1 ? a : (tree_degree[b] == 1 ? b : -1);
          if (leaf < 0 || (terminal_mask >> leaf & 1)) continue;
          --tree_degree[a];
          --tree_degree[b];
          edges.erase(edges.begin() + i);
          pruned = true;
          break;
        }
      }
      std::sort(edges.begin(), edges.end());
      std::vector<int> vertices;
      for (int v = 0; v < n; ++v) {
        if (tree_degree[v] > 0) vertices.push_back(v);
      }
      family.trees.push_back(TreeCertificate{VertexSet(std::move(vertices)), std::move(edges),
                                             VertexSet(terminals)});
    }
    return family;
  }
};

struct CappedKappa {
  int value = 0;
  DisjointTreeFamily family;
};

// Exact kappa(S) unless it exceeds cap, in which case cap is returned.
CappedKappa capped_kappa(const Graph& g, const VertexSet& terminals, int cap, int solver_limit) {
  CappedKappa out;
  out.family.terminals = terminals;
  const int high = std::min(cap, min_terminal_degree(g, terminals));
  for (int t = 1; t <= high; ++t) {
    auto family = find_disjoint_trees(g, terminals, t, solver_limit);
    if (!family) break;
    out.value = t;
    out.family = std::move(*family);
  }
  return out;
}

}  // namespace

CertificateCheck validate_certificate(const Graph& g, const DisjointTreeFamily& family) {
  CertificateCheck check;
  auto fail = [&check](std::string message) {
    check.ok = false;
    check.diagnostics.push_back(std::move(message));
  };

  for (int v : family.terminals.members()) {
    if (v < 0 || v >= g.vertex_count()) {
      fail("terminal " + std::to_string(v) + " out of range");
      return check;
    }
  }

  for (std::size_t i = 0; i < family.trees.size(); ++i) {
    const auto& tree = family.trees[i];
    const std::string name = "tree " + std::to_string(i);
    if (tree.terminals != family.terminals) {
      fail(name + " carries a different terminal set than the family");
    }
    for (int v : tree.vertices.members()) {
      if (v < 0 || v >= g.vertex_count()) {
        fail(name + " lists vertex " + std::to_string(v) + " out of range");
        return check;
      }
    }
    std::map<int, int> degree;
    bool edges_ok = true;
    for (const auto& [u, v] : tree.edges) {
      if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() || !g.has_edge(u, v)) {
        fail(name + " uses edge " + edge_text(u, v) + " that the graph does not have");
        edges_ok = false;
        continue;
      }
      if (!tree.vertices.contains(u) || !tree.vertices.contains(v)) {
        fail(name + " edge " + edge_text(u, v) + " leaves its own vertex set");
        edges_ok = false;
        continue;
      }
      ++degree[u];
      ++degree[v];
    }
    if (!edges_ok) continue;
    if (tree.edges.size() + 1 != tree.vertices.size()) {
      fail(name + " has " + std::to_string(tree.edges.size()) + " edges on " +
           std::to_string(tree.vertices.size()) + " vertices, so it is not a tree");
      continue;
    }
    // |E| = |V| - 1 plus connectivity rules out cycles and stray vertices.
    if (!tree.vertices.empty()) {
      std::uint64_t allowed = 0;
      std::map<int, std::vector<int>> tree_adj;
      for (const auto& [u, v] : tree.edges) {
        tree_adj[u].push_back(v);
        tree_adj[v].push_back(u);
      }
      std::vector<int> stack{tree.vertices[0]};
      std::uint64_t seen = std::uint64_t{1} << tree.vertices[0];
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : tree_adj[v]) {
          if (!(seen >> w & 1)) {
            seen |= std::uint64_t{1} << w;
            stack.push_back(w);
          }
        }
      }
      allowed = seen;
      if (allowed != tree.vertices.mask()) {
        fail(name + " is not connected");
        continue;
      }
    }
    for (int t : family.terminals.members()) {
      if (!tree.vertices.contains(t)) {
        fail(name + " does not contain terminal " + std::to_string(t));
      }
    }
    for (int v : tree.vertices.members()) {
      if (degree[v] == 1 && !family.terminals.contains(v)) {
        fail(name + " has non-terminal leaf " + std::to_string(v));
      }
    }
  }

  for (std::size_t i = 0; i < family.trees.size(); ++i) {
    for (std::size_t j = i + 1; j < family.trees.size(); ++j) {
      const std::uint64_t shared =
          family.trees[i].vertices.mask() & family.trees[j].vertices.mask();
      std::uint64_t extra = shared & ~family.terminals.mask();
      while (extra) {
        fail("trees " + std::to_string(i) + " and " + std::to_string(j) +
             " share non-terminal vertex " + std::to_string(std::countr_zero(extra)));
        extra &= extra - 1;
      }
      for (const auto& e : family.trees[i].edges) {
        if (std::find(family.trees[j].edges.begin(), family.trees[j].edges.end(), e) !=
            family.trees[j].edges.end()) {
          fail("trees " + std::to_string(i) + " and " + std::to_string(j) + " share edge " +
               edge_text(e.first, e.second));
        }
      }
    }
  }
  return check;
}

std::optional<DisjointTreeFamily> find_disjoint_trees(const Graph& g, const VertexSet& terminals,
                                                      int tree_count, int solver_limit) {
  if (tree_count < 1) throw std::invalid_argument("tree count must be positive");
  check_terminals(g, terminals);
  check_limit(g, solver_limit);
  if (tree_count > min_terminal_degree(g, terminals)) return std::nullopt;

  PackingSearch search(g, terminals, tree_count);
  if (!search.feasible()) return std::nullopt;
  if (!search.assign_edges(0)) return std::nullopt;
  auto family = search.extract();
  auto check = validate_certificate(g, family);
  if (!check.ok) {
    throw std::logic_error("extracted family failed validation: " + check.diagnostics.front());
  }
  return family;
}

KappaResult kappa_of_set(const Graph& g, const VertexSet& terminals, int solver_limit) {
  check_terminals(g, terminals);
  check_limit(g, solver_limit);
  KappaResult result;
  result.witness_set = terminals;
  result.family.terminals = terminals;
  const std::uint64_t component = g.reachable_mask(terminals[0], g.full_mask());
  if ((component & terminals.mask()) != terminals.mask()) return result;
  auto capped = capped_kappa(g, terminals, Graph::kMaxVertices, solver_limit);
  result.kappa = capped.value;
  result.family = std::move(capped.family);
  return result;
}

KappaResult kappa3(const Graph& g, int solver_limit) {
  const int n = g.vertex_count();
  if (n < 3) throw std::invalid_argument("kappa3 needs at least three vertices");
  check_limit(g, solver_limit);

  if (!g.is_connected()) {
    // The least triple meeting two components wins; kappa of such a set is 0.
    for (int i = 0; i < n - 2; ++i) {
      const std::uint64_t component = g.reachable_mask(i, g.full_mask());
      for (int j = i + 1; j < n - 1; ++j) {
        for (int k = j + 1; k < n; ++k) {
          if ((component >> j & 1) && (component >> k & 1)) continue;
          KappaResult result;
          result.witness_set = VertexSet({i, j, k});
          result.family.terminals = result.witness_set;
          return result;
        }
      }
    }
  }

  // Any triple through a minimum-degree vertex has kappa at most that degree,
  // so the sweep can start capped there without assuming anything deeper.
  // Once a witness is in hand only strictly smaller values matter, so the cap
  // drops to best and equal-or-larger triples are dismissed by one success.
  int best = g.min_degree();
  bool have_witness = false;
  KappaResult result;
  for (int i = 0; i < n - 2; ++i) {
    for (int j = i + 1; j < n - 1; ++j) {
      for (int k = j + 1; k < n; ++k) {
        auto capped =
            capped_kappa(g, VertexSet({i, j, k}), have_witness ? best : best + 1, solver_limit);
        if (capped.value > best) continue;
        if (capped.value < best || !have_witness) {
          best = capped.value;
          result.witness_set = VertexSet({i, j, k});
          result.family = std::move(capped.family);
          have_witness = true;
        }
        if (best <= 1 && have_witness) {
          result.kappa = best;
          return result;
        }
      }
    }
  }
  if (!have_witness) {
    throw std::logic_error("kappa3 sweep finished without a witness triple");
  }
  result.kappa = best;
  return result;
}

int kappa3_upper_bound(const Graph& g) {
  if (g.vertex_count() < 3) {
    throw std::invalid_argument("the bound needs at least three vertices");
  }
  if (!g.is_connected()) {
    throw std::invalid_argument("the bound applies to connected graphs only");
  }
  const int delta = g.min_degree();
  for (const auto& [u, v] : g.edges()) {
    if (g.degree(u) == delta && g.degree(v) == delta) return delta - 1;
  }
  return delta;
}

}  // namespace treeconn
