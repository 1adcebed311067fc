#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treeconn/graph.hpp"

namespace treeconn {

/// Default cap on the solver's exhaustive search; override per call, or via
/// TREECONN_SOLVER_LIMIT when driving the command-line tool.
inline constexpr int kDefaultSolverLimit = 20;

/// One tree of a packing: a subtree of the host graph that contains every
/// terminal, with all of its leaves terminals.
struct TreeCertificate {
  VertexSet vertices;
  std::vector<std::pair<int, int>> edges;
  VertexSet terminals;
};

/// Trees that pairwise intersect exactly in the terminal set and share no
/// edge. This is the certificate shape for kappa(S) lower bounds.
struct DisjointTreeFamily {
  VertexSet terminals;
  std::vector<TreeCertificate> trees;
};

struct KappaResult {
  int kappa = 0;
  VertexSet witness_set;       // for whole-graph results: the minimizing subset
  DisjointTreeFamily family;   // |trees| == kappa; empty when kappa == 0
};

struct CertificateCheck {
  bool ok = true;
  std::vector<std::string> diagnostics;
};

/// Checks a claimed family against the graph: each tree must be a subgraph,
/// acyclic, connected, contain every terminal, have only terminal leaves; the
/// trees must pairwise share exactly the terminals and no edge. Diagnostics
/// name the offending tree and vertex or edge.
CertificateCheck validate_certificate(const Graph& g, const DisjointTreeFamily& family);

/// Decides whether tree_count pairwise internally disjoint trees connecting
/// the terminals exist, and returns a validating family when they do.
///
/// The search assigns each non-terminal vertex to one of the tree slots or to
/// "unused", and each terminal-terminal edge to at most one slot; a partial
/// assignment dies as soon as some slot can no longer connect the terminals
/// through its own plus the still-undecided vertices. Slots are filled in
/// first-use order and vertices are considered by increasing label, so the
/// first family found is deterministic. An empty result is a proof of
/// absence, not a timeout.
std::optional<DisjointTreeFamily> find_disjoint_trees(const Graph& g, const VertexSet& terminals,
                                                      int tree_count,
                                                      int solver_limit = kDefaultSolverLimit);

/// Largest t with a family of t internally disjoint trees connecting the
/// terminals; 0 exactly when the terminals do not share a component. Never
/// searches above min degree over the terminals.
KappaResult kappa_of_set(const Graph& g, const VertexSet& terminals,
                         int solver_limit = kDefaultSolverLimit);

/// Minimum of kappa_of_set over all vertex triples, with the
/// lexicographically least minimizing triple as witness and a family of that
/// size as certificate. Disconnected graphs give 0.
KappaResult kappa3(const Graph& g, int solver_limit = kDefaultSolverLimit);

/// Cheap cutoff for kappa3 on a connected graph: the minimum degree, less one
/// when two minimum-degree vertices are adjacent.
int kappa3_upper_bound(const Graph& g);

/// Independent reference for kappa_of_set on graphs with n <= 8: enumerates
/// every subtree whose leaves lie in the terminal set, then finds a largest
/// pairwise-compatible family by branch and bound. Shares no code with the
/// slot-assignment search above; used to cross-check it.
int brute_force_kappa_of_set(const Graph& g, const VertexSet& terminals);

}  // namespace treeconn
