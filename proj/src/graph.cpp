#include "treeconn/graph.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>

namespace treeconn {

VertexSet::VertexSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] < 0) {
      throw std::invalid_argument("vertex set contains negative label " +
                                  std::to_string(members_[i]));
    }
    if (i > 0 && members_[i] == members_[i - 1]) {
      throw std::invalid_argument("vertex set contains duplicate label " +
                                  std::to_string(members_[i]));
    }
  }
}

bool VertexSet::contains(int v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::uint64_t VertexSet::mask() const {
  std::uint64_t m = 0;
  for (int v : members_) {
    if (v >= 64) {
      throw std::invalid_argument("vertex label " + std::to_string(v) +
                                  " does not fit a 64-bit mask");
    }
    m |= std::uint64_t{1} << v;
  }
  return m;
}

Graph::Graph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)), adj_(n > 0 ? n : 0, 0) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  if (n > kMaxVertices) {
    throw std::invalid_argument("at most " + std::to_string(kMaxVertices) +
                                " vertices are supported, got " + std::to_string(n));
  }
  for (auto& [u, v] : edges_) {
    if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n_) {
      throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                  "} out of range for " + std::to_string(n_) + " vertices");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i] == edges_[i - 1]) {
      throw std::invalid_argument("duplicate edge {" + std::to_string(edges_[i].first) + "," +
                                  std::to_string(edges_[i].second) + "}");
    }
  }
  for (const auto& [u, v] : edges_) {
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
  }
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for " +
                                std::to_string(n_) + " vertices");
  }
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] >> v) & 1;
}

std::uint64_t Graph::neighbor_mask(int v) const {
  check_vertex(v);
  return adj_[v];
}

std::vector<int> Graph::neighbors(int v) const {
  std::uint64_t m = neighbor_mask(v);
  std::vector<int> out;
  out.reserve(std::popcount(m));
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

int Graph::degree(int v) const { return std::popcount(neighbor_mask(v)); }

int Graph::min_degree() const {
  if (n_ == 0) throw std::invalid_argument("minimum degree of an empty graph is undefined");
  int best = kMaxVertices;
  for (int v = 0; v < n_; ++v) best = std::min(best, std::popcount(adj_[v]));
  return best;
}

std::uint64_t Graph::full_mask() const {
  return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

std::uint64_t Graph::reachable_mask(int start, std::uint64_t allowed) const {
  check_vertex(start);
  std::uint64_t bit = std::uint64_t{1} << start;
  if (!(allowed & bit)) return 0;
  std::uint64_t visited = bit;
  std::uint64_t frontier = bit;
  while (frontier) {
    int v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    std::uint64_t fresh = adj_[v] & allowed & ~visited;
    visited |= fresh;
    frontier |= fresh;
  }
  return visited;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  return reachable_mask(0, full_mask()) == full_mask();
}

bool Graph::is_stable_set(const VertexSet& s) const {
  for (int v : s.members()) check_vertex(v);
  std::uint64_t m = s.mask();
  for (int v : s.members()) {
    if (adj_[v] & m) return false;
  }
  return true;
}

VertexSet Graph::degree_two_set() const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v) {
    if (std::popcount(adj_[v]) == 2) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

Graph Graph::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw std::invalid_argument("permutation size does not match vertex count");
  }
  std::vector<bool> seen(n_, false);
  for (int p : perm) {
    if (p < 0 || p >= n_ || seen[p]) throw std::invalid_argument("not a permutation of 0..n-1");
    seen[p] = true;
  }
  std::vector<std::pair<int, int>> mapped;
  mapped.reserve(edges_.size());
  for (const auto& [u, v] : edges_) mapped.emplace_back(perm[u], perm[v]);
  return Graph(n_, std::move(mapped));
}

}  // namespace treeconn
