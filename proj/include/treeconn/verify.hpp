#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "treeconn/graph.hpp"
#include "treeconn/steiner.hpp"

namespace treeconn {

// ceil(6n/5), the edge count no graph with three-set connectivity 2 can beat.
int lower_bound_size(int n);

// The attained minimum for order n: one above the bound at n = 9 and 10,
// the bound itself everywhere else.
int extremal_size(int n);

enum class BoundVerdict { kNotApplicable, kHoldsStrictly, kHoldsWithEquality, kViolated };

// Solves for kappa3 and compares the edge count against the bound. Only
// graphs with kappa3 = 2 are in scope; a kViolated verdict would refute the
// bound and is treated as a reportable event, never ignored.
BoundVerdict check_bound(const Graph& g, int solver_limit = kDefaultSolverLimit);

// Forced shape of a hypothetical kappa3 = 2 graph: X the degree-2 vertices
// (a stable set), Y the rest, m' the edge count inside Y.
struct ConstraintProfile {
  int n = 0;
  int m = 0;
  int x_size = 0;
  int y_size = 0;
  int y_internal_edges = 0;
  int y_degree = 0;
};

enum class ProfileStatus { kPinned, kInfeasible, kUnderdetermined };

struct ProfileDerivation {
  ProfileStatus status = ProfileStatus::kUnderdetermined;
  std::optional<ConstraintProfile> profile;
  std::string reason;
};

// Chains the degree-sum and stability constraints to pin |X|, |Y|, m' and the
// Y-degrees for a given order and size, or reports that the constraints clash
// (kInfeasible) or leave slack (kUnderdetermined).
ProfileDerivation derive_profile(int n, int m);

// All connected graphs realizing the profile, up to isomorphism, in a fixed
// deterministic order. X vertices get labels 0..x-1, Y vertices follow, and
// with m' = 1 the internal edge joins the first two Y vertices.
std::vector<Graph> enumerate_candidates(const ConstraintProfile& profile);

struct CampaignReport {
  std::string campaign;
  long examined = 0;
  std::vector<std::string> violations;
  std::vector<std::string> details;
  double elapsed_seconds = 0.0;
  bool passed() const { return violations.empty(); }
};

// JSON document for a report. Elapsed time is deliberately left out so that
// reruns and different worker counts give byte-identical output.
std::string emit_campaign_report(const CampaignReport& report);

// Campaigns. Each returns a deterministic report; parallelism only changes
// the wall time, never the content.
CampaignReport verify_lemma4(int parallelism = 1, int solver_limit = kDefaultSolverLimit);
CampaignReport verify_lemma3(int parallelism = 1, int solver_limit = kDefaultSolverLimit);
CampaignReport verify_lemma5(int samples, std::uint64_t seed, int parallelism = 1,
                             int solver_limit = kDefaultSolverLimit);
CampaignReport verify_theorem1(int max_k, int parallelism = 1,
                               int solver_limit = kDefaultSolverLimit);

// Uniform pair coin flips at the given probability, resampled until the
// result is connected. Consumes rng deterministically.
Graph random_connected_graph(std::mt19937_64& rng, int n, double edge_probability);

enum class KappaPredicateKind { kExact, kAtLeast, kAtMost };

struct KappaPredicate {
  KappaPredicateKind kind = KappaPredicateKind::kExact;
  int value = 0;
};

struct FilterStats {
  long lines = 0;
  long matched = 0;
  long parse_errors = 0;
};

// Reads graph6 lines, keeps those whose kappa3 satisfies the predicate,
// echoes them in input order, and writes one summary line to diagnostics.
// Bad lines are reported and skipped unless strict, which rethrows.
FilterStats filter_kappa(std::istream& in, std::ostream& out, std::ostream& diagnostics,
                         const KappaPredicate& predicate, bool strict = false,
                         int solver_limit = kDefaultSolverLimit, int parallelism = 1);

}  // namespace treeconn
