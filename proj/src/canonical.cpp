#include "treeconn/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "treeconn/io.hpp"

namespace treeconn {
namespace {

using Cells = std::vector<std::vector<int>>;

std::uint64_t cell_mask(const std::vector<int>& cell) {
  std::uint64_t m = 0;
  for (int v : cell) m |= std::uint64_t{1} << v;
  return m;
}

// Split cells by neighbor counts into each splitter cell until the partition
// is equitable. Fragments are ordered by ascending count, so the resulting
// ordered partition depends only on the isomorphism type.
void refine(const Graph& g, Cells& cells) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t splitter = 0; splitter < cells.size(); ++splitter) {
      const std::uint64_t mask = cell_mask(cells[splitter]);
      Cells next;
      next.reserve(cells.size() + 2);
      for (auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(std::move(cell));
          continue;
        }
        std::map<int, std::vector<int>> by_count;
        for (int v : cell) {
          by_count[std::popcount(g.neighbor_mask(v) & mask)].push_back(v);
        }
        if (by_count.size() > 1) changed = true;
        for (auto& [count, part] : by_count) next.push_back(std::move(part));
      }
      cells = std::move(next);
      if (changed) break;
    }
  }
}

// True when adjacency between any two vertices depends only on their cells:
// every cell is internally complete or empty, every cell pair fully joined or
// fully separated. Any cell-respecting bijection is then an automorphism, so
// one leaf below this node represents them all. The partition must already be
// equitable, which is why checking one representative per cell suffices.
bool homogeneous(const Graph& g, const Cells& cells) {
  std::vector<std::uint64_t> masks(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) masks[i] = cell_mask(cells[i]);
  for (std::size_t j = 0; j < cells.size(); ++j) {
    const int rep = cells[j][0];
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const int d = std::popcount(g.neighbor_mask(rep) & masks[i]);
      const int full = static_cast<int>(cells[i].size()) - (i == j ? 1 : 0);
      if (d != 0 && d != full) return false;
    }
  }
  return true;
}

// Upper-triangle adjacency bits in column order under the labeling that puts
// order[p] at position p. Matches the graph6 bit order, so the minimum over
// leaves is exactly the minimum graph6 string.
std::vector<std::uint8_t> encode(const Graph& g, const std::vector<int>& order) {
  const int n = g.vertex_count();
  std::vector<std::uint8_t> bits;
  bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      bits.push_back(g.has_edge(order[i], order[j]) ? 1 : 0);
    }
  }
  return bits;
}

struct CanonicalSearch {
  const Graph& g;
  std::vector<std::uint8_t> best_bits;
  std::vector<int> best_order;
  bool have_best = false;
  long long nodes = 0;
  static constexpr long long kNodeBudget = 20'000'000;

  void run(Cells cells) {
    if (++nodes > kNodeBudget) {
      throw std::runtime_error("canonical labeling search exceeded its node budget");
    }
    refine(g, cells);
    if (homogeneous(g, cells)) {
      std::vector<int> order;
      order.reserve(g.vertex_count());
      for (const auto& cell : cells) order.insert(order.end(), cell.begin(), cell.end());
      auto bits = encode(g, order);
      if (!have_best || bits < best_bits) {
        best_bits = std::move(bits);
        best_order = std::move(order);
        have_best = true;
      }
      return;
    }
    std::size_t target = 0;
    while (cells[target].size() < 2) ++target;
    for (int v : cells[target]) {
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != target) {
          child.push_back(cells[i]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        rest.reserve(cells[i].size() - 1);
        for (int w : cells[i]) {
          if (w != v) rest.push_back(w);
        }
        child.push_back(std::move(rest));
      }
      run(std::move(child));
    }
  }
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kCanonicalLimit) {
    throw std::invalid_argument("canonical labeling is limited to " +
                                std::to_string(kCanonicalLimit) + " vertices");
  }
  if (n == 0) return {};
  std::vector<int> all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  CanonicalSearch search{g, {}, {}, false, 0};
  search.run(Cells{all});
  std::vector<int> perm(n);
  for (int p = 0; p < n; ++p) perm[search.best_order[p]] = p;
  return perm;
}

std::string canonical_form(const Graph& g) {
  return emit_graph6(g.permuted(canonical_labeling(g)));
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.vertex_count(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace treeconn
