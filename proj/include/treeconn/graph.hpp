#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace treeconn {

/// Sorted, duplicate-free set of vertex labels. Membership against a concrete
/// graph (labels < n) is checked at use sites, not here.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<int> members);

  const std::vector<int>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(int v) const;
  std::uint64_t mask() const;
  int operator[](std::size_t i) const { return members_[i]; }
  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<int> members_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept twice: as a sorted edge list and as per-vertex neighbor
/// bitmasks, so neighborhood intersections and reachability sweeps are a few
/// word operations for n <= 64. Construction validates simplicity (no loops,
/// no parallel edges, labels in range); there are no mutators, so values can
/// be shared freely across threads.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph(int n, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Edges normalized to u < v, sorted lexicographically.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool has_edge(int u, int v) const;
  std::uint64_t neighbor_mask(int v) const;
  std::vector<int> neighbors(int v) const;

  int degree(int v) const;
  int min_degree() const;
  bool is_connected() const;
  bool is_stable_set(const VertexSet& s) const;
  VertexSet degree_two_set() const;

  /// Vertices reachable from start while staying inside the allowed mask.
  /// Returns 0 if start itself is not allowed.
  std::uint64_t reachable_mask(int start, std::uint64_t allowed) const;

  /// Mask with one bit per vertex.
  std::uint64_t full_mask() const;

  /// Relabeled copy; perm[old] = new, perm must be a permutation of 0..n-1.
  Graph permuted(const std::vector<int>& perm) const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::uint64_t> adj_;
};

}  // namespace treeconn
