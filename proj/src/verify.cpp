#include "treeconn/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <istream>
#include <ostream>
#include <set>
#include <stdexcept>
#include <utility>

#include "json.hpp"

#include "treeconn/canonical.hpp"
#include "treeconn/constructions.hpp"
#include "treeconn/io.hpp"
#include "treeconn/parallel.hpp"

namespace treeconn {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string set_text(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

std::string graph_key(const Graph& g) {
  return g.vertex_count() <= kCanonicalLimit ? canonical_form(g) : emit_graph6(g);
}

// Shared engine for the two profile-driven campaigns: enumerate the forced
// search space, solve every candidate, flag anything whose kappa3 is not <= 1.
CampaignReport profile_campaign(const std::string& name, int n, int m,
                                const std::vector<std::pair<std::string, Graph>>& probes,
                                int parallelism, int solver_limit) {
  const auto start = Clock::now();
  CampaignReport report;
  report.campaign = name;

  const auto derived = derive_profile(n, m);
  if (derived.status != ProfileStatus::kPinned) {
    throw std::logic_error("profile (" + std::to_string(n) + "," + std::to_string(m) +
                           ") failed to pin down: " + derived.reason);
  }
  const auto& profile = *derived.profile;
  report.details.push_back("profile: n=" + std::to_string(profile.n) +
                           " m=" + std::to_string(profile.m) +
                           " x=" + std::to_string(profile.x_size) +
                           " y=" + std::to_string(profile.y_size) +
                           " internal=" + std::to_string(profile.y_internal_edges) +
                           " ydeg=" + std::to_string(profile.y_degree));

  const auto candidates = enumerate_candidates(profile);
  report.examined = static_cast<long>(candidates.size());
  const auto results =
      parallel_map(static_cast<int>(candidates.size()), parallelism,
                   [&](int i) { return kappa3(candidates[i], solver_limit); });

  std::vector<std::string> canon(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) canon[i] = canonical_form(candidates[i]);

  for (std::size_t i = 0; i < candidates.size(); ++i) {
    report.details.push_back("candidate " + std::to_string(i) + ": " + canon[i] +
                             " kappa3=" + std::to_string(results[i].kappa) +
                             " witness=" + set_text(results[i].witness_set));
    if (results[i].kappa > 1) report.violations.push_back(canon[i]);
  }
  for (const auto& [label, probe] : probes) {
    const auto key = canonical_form(probe);
    const auto hit = std::find(canon.begin(), canon.end(), key);
    if (hit == canon.end()) {
      report.details.push_back("stream contains " + label + ": missing");
      report.violations.push_back(key + " expected in the stream but absent");
    } else {
      report.details.push_back("stream contains " + label + ": candidate " +
                               std::to_string(hit - canon.begin()));
    }
  }
  std::sort(report.violations.begin(), report.violations.end());
  report.elapsed_seconds = seconds_since(start);
  return report;
}

}  // namespace

int lower_bound_size(int n) {
  if (n < 1) throw std::invalid_argument("the bound needs at least one vertex");
  return (6 * n + 4) / 5;
}

int extremal_size(int n) {
  if (n < 4) throw std::invalid_argument("the minimum size starts at four vertices");
  return lower_bound_size(n) + (n == 9 || n == 10 ? 1 : 0);
}

BoundVerdict check_bound(const Graph& g, int solver_limit) {
  if (kappa3(g, solver_limit).kappa != 2) return BoundVerdict::kNotApplicable;
  const int bound = lower_bound_size(g.vertex_count());
  if (g.edge_count() < bound) return BoundVerdict::kViolated;
  return g.edge_count() == bound ? BoundVerdict::kHoldsWithEquality : BoundVerdict::kHoldsStrictly;
}

ProfileDerivation derive_profile(int n, int m) {
  // Shape forced on any connected graph with kappa3 = 2: minimum degree at
  // least 2, and no two degree-2 vertices adjacent, so X (the degree-2 class)
  // is stable and spends 2|X| edge endpoints on Y.
  ProfileDerivation out;
  if (n < 3) {
    out.status = ProfileStatus::kInfeasible;
    out.reason = "kappa3 needs at least three vertices";
    return out;
  }
  if (m < n) {
    out.status = ProfileStatus::kInfeasible;
    out.reason = "minimum degree 2 forces at least " + std::to_string(n) + " edges, only " +
                 std::to_string(m) + " given";
    return out;
  }
  const int x_low = std::max(0, 3 * n - 2 * m);
  const int x_high = std::min(n, m / 2);
  if (x_low > x_high) {
    out.status = ProfileStatus::kInfeasible;
    out.reason = "degree counting forces |X| >= " + std::to_string(x_low) +
                 " but a stable degree-2 class can hold at most " + std::to_string(x_high);
    return out;
  }
  if (x_low != x_high) {
    out.status = ProfileStatus::kUnderdetermined;
    out.reason = "counting leaves |X| anywhere in " + std::to_string(x_low) + ".." +
                 std::to_string(x_high);
    return out;
  }
  const int x = x_low;
  const int y = n - x;
  const int m_prime = m - 2 * x;
  if (x > 0 && y < 2) {
    out.status = ProfileStatus::kInfeasible;
    out.reason = "a degree-2 vertex needs two distinct neighbors outside the stable class";
    return out;
  }
  if (m_prime > y * (y - 1) / 2) {
    out.status = ProfileStatus::kInfeasible;
    out.reason = "m'=" + std::to_string(m_prime) + " exceeds the " +
                 std::to_string(y * (y - 1) / 2) + " pairs available inside Y";
    return out;
  }
  if (2 * m - 2 * x != 3 * y) {
    out.status = ProfileStatus::kUnderdetermined;
    out.reason = "the Y degree sum " + std::to_string(2 * m - 2 * x) + " is not exactly 3|Y|=" +
                 std::to_string(3 * y) + ", so Y-degrees are not forced";
    return out;
  }
  out.status = ProfileStatus::kPinned;
  out.profile = ConstraintProfile{n, m, x, y, m_prime, 3};
  out.reason = "pinned";
  return out;
}

std::vector<Graph> enumerate_candidates(const ConstraintProfile& profile) {
  if (profile.y_size != 4) {
    throw std::invalid_argument("candidate enumeration needs exactly four vertices outside the degree-2 class");
  }
  if (profile.y_internal_edges < 0 || profile.y_internal_edges > 1) {
    throw std::invalid_argument("candidate enumeration handles at most one internal edge");
  }
  if (profile.x_size < 0) throw std::invalid_argument("class sizes must be nonnegative");

  static constexpr std::array<std::pair<int, int>, 6> kPairs{
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  int pair_table[4][4];
  for (int p = 0; p < 6; ++p) {
    pair_table[kPairs[p].first][kPairs[p].second] = p;
    pair_table[kPairs[p].second][kPairs[p].first] = p;
  }

  std::array<int, 4> residual;
  residual.fill(profile.y_degree);
  if (profile.y_internal_edges == 1) {
    --residual[0];
    --residual[1];
  }
  for (int j = 0; j < 4; ++j) {
    if (residual[j] < 0) return {};
  }

  // Relabelings of the four high-degree vertices that preserve both the
  // residual degrees and the internal edge; used to skip equivalent
  // attachment patterns before the canonical-form dedupe below.
  std::vector<std::array<int, 4>> group;
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    bool ok = true;
    for (int j = 0; j < 4 && ok; ++j) ok = residual[perm[j]] == residual[j];
    if (ok && profile.y_internal_edges == 1) {
      ok = (perm[0] == 0 && perm[1] == 1) || (perm[0] == 1 && perm[1] == 0);
    }
    if (ok) group.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Graph> out;
  std::set<std::string> seen;
  std::array<int, 6> counts{};

  auto emit = [&]() {
    for (const auto& relabel : group) {
      std::array<int, 6> image{};
      for (int p = 0; p < 6; ++p) {
        image[pair_table[relabel[kPairs[p].first]][relabel[kPairs[p].second]]] = counts[p];
      }
      if (image < counts) return;
    }
    const int x = profile.x_size;
    std::vector<std::pair<int, int>> edges;
    if (profile.y_internal_edges == 1) edges.emplace_back(x, x + 1);
    int next_x = 0;
    for (int p = 0; p < 6; ++p) {
      for (int i = 0; i < counts[p]; ++i) {
        edges.emplace_back(next_x, x + kPairs[p].first);
        edges.emplace_back(next_x, x + kPairs[p].second);
        ++next_x;
      }
    }
    Graph g(x + 4, std::move(edges));
    for (int v = 0; v < x; ++v) {
      if (g.degree(v) != 2) throw std::logic_error("candidate degree bookkeeping broke");
    }
    for (int j = 0; j < 4; ++j) {
      if (g.degree(x + j) != profile.y_degree) {
        throw std::logic_error("candidate degree bookkeeping broke");
      }
    }
    if (!g.is_connected()) return;
    if (!seen.insert(canonical_form(g)).second) return;
    out.push_back(std::move(g));
  };

  std::function<void(int, int)> place = [&](int pair_pos, int remaining) {
    if (pair_pos == 3 && residual[0] != 0) return;
    if (pair_pos == 5 && residual[1] != 0) return;
    if (pair_pos == 6) {
      if (remaining == 0 && residual[2] == 0 && residual[3] == 0) emit();
      return;
    }
    const auto [a, b] = kPairs[pair_pos];
    const int most = std::min({remaining, residual[a], residual[b]});
    for (int c = 0; c <= most; ++c) {
      counts[pair_pos] = c;
      residual[a] -= c;
      residual[b] -= c;
      place(pair_pos + 1, remaining - c);
      residual[a] += c;
      residual[b] += c;
    }
    counts[pair_pos] = 0;
  };
  place(0, profile.x_size);
  return out;
}

std::string emit_campaign_report(const CampaignReport& report) {
  nlohmann::ordered_json doc;
  doc["campaign"] = report.campaign;
  doc["examined"] = report.examined;
  doc["violations"] = report.violations;
  doc["details"] = report.details;
  doc["verdict"] = report.passed() ? "pass" : "fail";
  return doc.dump(2) + "\n";
}

CampaignReport verify_lemma4(int parallelism, int solver_limit) {
  const std::vector<std::pair<std::string, Graph>> probes{
      {"figure2", figure_fixture(2)}, {"figure3", figure_fixture(3)}, {"figure4", figure_fixture(4)}};
  return profile_campaign("lemma4", 9, 11, probes, parallelism, solver_limit);
}

CampaignReport verify_lemma3(int parallelism, int solver_limit) {
  const std::vector<std::pair<std::string, Graph>> probes{{"h2", build_h(2)}};
  return profile_campaign("lemma3", 10, 12, probes, parallelism, solver_limit);
}

CampaignReport verify_lemma5(int samples, std::uint64_t seed, int parallelism, int solver_limit) {
  if (samples < 1) throw std::invalid_argument("the sample count must be positive");
  const auto start = Clock::now();
  CampaignReport report;
  report.campaign = "lemma5";
  report.details.push_back("samples=" + std::to_string(samples) + " seed=" + std::to_string(seed));

  static constexpr double kSweep[] = {0.3, 0.4, 0.5, 0.6, 0.7};
  std::mt19937_64 rng(seed);
  std::vector<Graph> graphs;
  std::vector<std::vector<int>> spots;
  while (static_cast<int>(graphs.size()) < samples) {
    const int n = 4 + static_cast<int>(rng() % 6);
    Graph g = random_connected_graph(rng, n, kSweep[graphs.size() % 5]);
    if (g.vertex_count() < 4) continue;  // kappa3 must stay defined after smoothing
    std::vector<int> smoothable;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) != 2) continue;
      const auto nb = g.neighbors(v);
      if (!g.has_edge(nb[0], nb[1])) smoothable.push_back(v);
    }
    if (smoothable.empty()) continue;
    graphs.push_back(std::move(g));
    spots.push_back(std::move(smoothable));
  }

  struct SampleOutcome {
    std::string detail;
    std::vector<std::string> violations;
  };
  const auto outcomes = parallel_map(samples, parallelism, [&](int i) {
    SampleOutcome outcome;
    const Graph& g = graphs[i];
    const int before = kappa3(g, solver_limit).kappa;
    outcome.detail = "sample " + std::to_string(i) + ": n=" + std::to_string(g.vertex_count()) +
                     " m=" + std::to_string(g.edge_count()) + " kappa3=" + std::to_string(before) +
                     " smooth";
    for (int u : spots[i]) {
      const int after = kappa3(smooth(g, u), solver_limit).kappa;
      outcome.detail += " " + std::to_string(u) + "->" + std::to_string(after);
      if (after < before) {
        outcome.detail += " VIOLATION";
        outcome.violations.push_back(graph_key(g));
      }
    }
    return outcome;
  });
  for (const auto& outcome : outcomes) {
    report.details.push_back(outcome.detail);
    report.violations.insert(report.violations.end(), outcome.violations.begin(),
                             outcome.violations.end());
  }
  report.examined = samples;
  std::sort(report.violations.begin(), report.violations.end());
  report.elapsed_seconds = seconds_since(start);
  return report;
}

CampaignReport verify_theorem1(int max_k, int parallelism, int solver_limit) {
  if (max_k < 3) throw std::invalid_argument("the family check needs max k >= 3");
  const auto start = Clock::now();
  CampaignReport report;
  report.campaign = "theorem1";

  for (int k = 3; k <= max_k; ++k) {
    for (int t = 0; t <= 4; ++t) {
      const Graph g = t == 0 ? build_h(k) : smooth_many(build_h(k), t);
      const int n = 5 * k - t;
      const int e = 6 * k - t;
      const bool ok = g.vertex_count() == n && g.edge_count() == e &&
                      g.edge_count() == lower_bound_size(g.vertex_count());
      report.details.push_back("family k=" + std::to_string(k) + " t=" + std::to_string(t) +
                               ": n=" + std::to_string(n) + " e=" + std::to_string(e) +
                               " bound=" + std::to_string(lower_bound_size(n)) +
                               (ok ? "" : " MISMATCH"));
      if (!ok) report.violations.push_back(graph_key(g));
      ++report.examined;
    }
  }

  const int solver_top = 15;
  const auto kappas = parallel_map(solver_top - 4 + 1, parallelism, [&](int i) {
    return kappa3(build_extremal(4 + i), solver_limit).kappa;
  });
  for (int n = 4; n <= 5 * max_k; ++n) {
    const Graph g = build_extremal(n);
    const int expected = extremal_size(n);
    bool ok = g.vertex_count() == n && g.edge_count() == expected;
    std::string line = "extremal n=" + std::to_string(n) + ": e=" + std::to_string(g.edge_count()) +
                       " expected=" + std::to_string(expected);
    if (n <= solver_top) {
      const int kappa = kappas[n - 4];
      line += " kappa3=" + std::to_string(kappa);
      ok = ok && kappa == 2;
    }
    if (!ok) {
      line += " MISMATCH";
      report.violations.push_back(graph_key(g));
    }
    report.details.push_back(line);
    ++report.examined;
  }
  std::sort(report.violations.begin(), report.violations.end());
  report.elapsed_seconds = seconds_since(start);
  return report;
}

Graph random_connected_graph(std::mt19937_64& rng, int n, double edge_probability) {
  if (n < 1) throw std::invalid_argument("vertex count must be positive");
  if (n > Graph::kMaxVertices) {
    throw std::invalid_argument("at most 64 vertices are supported, got " + std::to_string(n));
  }
  for (;;) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const double coin = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (coin < edge_probability) edges.emplace_back(i, j);
      }
    }
    Graph g(n, std::move(edges));
    if (g.is_connected()) return g;
  }
}

FilterStats filter_kappa(std::istream& in, std::ostream& out, std::ostream& diagnostics,
                         const KappaPredicate& predicate, bool strict, int solver_limit,
                         int parallelism) {
  FilterStats stats;
  const auto matches = [&predicate](int kappa) {
    switch (predicate.kind) {
      case KappaPredicateKind::kExact:
        return kappa == predicate.value;
      case KappaPredicateKind::kAtLeast:
        return kappa >= predicate.value;
      case KappaPredicateKind::kAtMost:
        return kappa <= predicate.value;
    }
    return false;
  };

  std::vector<std::string> lines;
  std::vector<int> numbers;
  const auto flush = [&]() {
    if (lines.empty()) return;
    std::vector<std::optional<Graph>> parsed(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
      try {
        Graph g = parse_graph6(lines[i]);
        if (g.vertex_count() > solver_limit) {
          throw std::invalid_argument("graph has " + std::to_string(g.vertex_count()) +
                                      " vertices, above the solver limit of " +
                                      std::to_string(solver_limit));
        }
        if (g.vertex_count() < 3) {
          throw std::invalid_argument("kappa3 needs at least three vertices");
        }
        parsed[i] = std::move(g);
      } catch (const std::exception& e) {
        if (strict) throw ParseError(e.what(), numbers[i]);
        ++stats.parse_errors;
        diagnostics << "line " << numbers[i] << ": " << e.what() << "\n";
      }
    }
    const auto kappas =
        parallel_map(static_cast<int>(lines.size()), parallelism,
                     [&](int i) { return parsed[i] ? kappa3(*parsed[i], solver_limit).kappa : -1; });
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (parsed[i] && matches(kappas[i])) {
        out << lines[i] << "\n";
        ++stats.matched;
      }
    }
    lines.clear();
    numbers.clear();
  };

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    ++stats.lines;
    lines.push_back(line);
    numbers.push_back(line_no);
    if (lines.size() == 256) flush();
  }
  flush();
  diagnostics << "processed " << stats.lines << " graphs: " << stats.matched << " matched, "
              << stats.parse_errors << " unusable\n";
  return stats;
}

}  // namespace treeconn
