// Acceptance gate: checks the ten release criteria and prints one verdict
// line each. Exits nonzero if any fails. Budgets are wall-clock seconds.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "treeconn/canonical.hpp"
#include "treeconn/constructions.hpp"
#include "treeconn/io.hpp"
#include "treeconn/steiner.hpp"
#include "treeconn/verify.hpp"

using namespace treeconn;
using Clock = std::chrono::steady_clock;

namespace {

struct CorpusEntry {
  std::string name;
  Graph graph;
  int kappa3_value;
};

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      note = what;
    }
  }
};

Graph load_fixture(const std::string& name) {
  const std::string path = std::string(TREECONN_FIXTURE_DIR) + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path);
  return parse_edge_list(in);
}

// All labeled connected graphs on n vertices, by edge-subset sweep.
std::vector<Graph> connected_graphs(int n) {
  std::vector<std::pair<int, int>> pool;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pool.emplace_back(i, j);
  std::vector<Graph> out;
  for (std::uint32_t bits = 0; bits < (1u << pool.size()); ++bits) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t e = 0; e < pool.size(); ++e)
      if (bits >> e & 1) edges.push_back(pool[e]);
    Graph g(n, std::move(edges));
    if (g.is_connected()) out.push_back(std::move(g));
  }
  return out;
}

bool min_degree_pair_adjacent(const Graph& g) {
  const int d = g.min_degree();
  for (const auto& [u, v] : g.edges())
    if (g.degree(u) == d && g.degree(v) == d) return true;
  return false;
}

constexpr double kSweep[] = {0.3, 0.4, 0.5, 0.6, 0.7};

}  // namespace

int main() {
  int passed = 0, failed = 0;
  std::vector<CorpusEntry> corpus;       // graphs touched by criteria 1..5
  std::vector<CorpusEntry> side_corpus;  // random and exhaustive sweeps

  auto run = [&](int id, const std::string& label, double budget_seconds,
                 const std::function<void(Outcome&)>& body) {
    Outcome outcome;
    const auto started = Clock::now();
    try {
      body(outcome);
    } catch (const std::exception& e) {
      outcome.require(false, std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - started).count();
    if (budget_seconds > 0 && elapsed >= budget_seconds)
      outcome.require(false, "over the " + std::to_string(budget_seconds) + "s budget");
    std::printf("criterion %2d: %s (%.2fs) %s%s%s\n", id, outcome.ok ? "PASS" : "FAIL", elapsed,
                label.c_str(), outcome.note.empty() ? "" : " -- ", outcome.note.c_str());
    std::fflush(stdout);
    (outcome.ok ? passed : failed) += 1;
  };

  run(1, "fixture kappa3 values and the named low triples", 10.0, [&](Outcome& out) {
    const struct {
      int id;
      int expect;
    } rows[] = {{1, 2}, {2, 1}, {3, 1}, {4, 1}, {5, 2}, {6, 2}};
    for (const auto& row : rows) {
      Graph g = load_fixture("figure" + std::to_string(row.id) + ".edges");
      out.require(g == figure_fixture(row.id),
                  "fixture file " + std::to_string(row.id) + " drifted from the builder");
      KappaResult r = kappa3(g);
      out.require(r.kappa == row.expect,
                  "figure" + std::to_string(row.id) + " solved to " + std::to_string(r.kappa));
      if (r.kappa > 0)
        out.require(validate_certificate(g, r.family).ok,
                    "figure" + std::to_string(row.id) + " certificate failed validation");
      corpus.push_back({"figure" + std::to_string(row.id), g, r.kappa});
    }
    // the documented witness triples of the three order-9 case graphs
    out.require(kappa_of_set(figure_fixture(2), VertexSet({0, 1, 3})).kappa == 1,
                "figure2 triple {0,1,3} did not solve to 1");
    out.require(kappa_of_set(figure_fixture(3), VertexSet({0, 1, 4})).kappa == 1,
                "figure3 triple {0,1,4} did not solve to 1");
    out.require(kappa_of_set(figure_fixture(4), VertexSet({0, 3, 4})).kappa == 1,
                "figure4 triple {0,3,4} did not solve to 1");
  });

  run(2, "cycle-plus-spokes family members solve correctly", 600.0, [&](Outcome& out) {
    for (int k : {1, 3}) {
      Graph h = build_h(k);
      out.require(h.vertex_count() == 5 * k && h.edge_count() == 6 * k,
                  "size drift at k=" + std::to_string(k));
      KappaResult r = kappa3(h);
      out.require(r.kappa == 2, "k=" + std::to_string(k) + " solved to " + std::to_string(r.kappa));
      corpus.push_back({"h" + std::to_string(k), h, r.kappa});
    }
    Graph h2 = build_h(2);
    KappaResult r2 = kappa3(h2);
    out.require(r2.kappa == 1, "k=2 solved to " + std::to_string(r2.kappa));
    corpus.push_back({"h2", h2, r2.kappa});
  });

  run(3, "order-9 size-11 candidates all have kappa3 at most 1", 300.0, [&](Outcome& out) {
    CampaignReport report = verify_lemma4();
    out.require(report.passed(), "campaign reported a violation");
    out.require(report.examined == 3,
                "examined " + std::to_string(report.examined) + " candidates, expected 3");
    for (const char* label : {"figure2", "figure3", "figure4"}) {
      bool found = false;
      for (const auto& line : report.details)
        if (line.find("stream contains " + std::string(label) + ": candidate") !=
            std::string::npos)
          found = true;
      out.require(found, std::string(label) + " missing from the candidate stream");
    }
    auto profile = derive_profile(9, 11);
    for (const Graph& g : enumerate_candidates(*profile.profile))
      corpus.push_back({"order9-candidate", g, kappa3(g).kappa});
  });

  run(4, "order-10 size-12 candidates all have kappa3 at most 1", 600.0, [&](Outcome& out) {
    CampaignReport report = verify_lemma3();
    out.require(report.passed(), "campaign reported a violation");
    out.require(report.examined == 2,
                "examined " + std::to_string(report.examined) + " candidates, expected 2");
    bool found = false;
    for (const auto& line : report.details)
      if (line.find("stream contains h2: candidate") != std::string::npos) found = true;
    out.require(found, "the k=2 family member is missing from the candidate stream");
    auto profile = derive_profile(10, 12);
    for (const Graph& g : enumerate_candidates(*profile.profile))
      corpus.push_back({"order10-candidate", g, kappa3(g).kappa});
  });

  run(5, "minimum-size witnesses hit the size table with kappa3 = 2", 0.0, [&](Outcome& out) {
    CampaignReport report = verify_theorem1(3);
    out.require(report.passed(), "family campaign reported a violation");
    for (int n = 4; n <= 15; ++n) {
      Graph g = build_extremal(n);
      const int expected = lower_bound_size(n) + ((n == 9 || n == 10) ? 1 : 0);
      out.require(g.edge_count() == extremal_size(n) && extremal_size(n) == expected,
                  "size table broke at n=" + std::to_string(n));
      KappaResult r = kappa3(g);
      out.require(r.kappa == 2,
                  "n=" + std::to_string(n) + " witness solved to " + std::to_string(r.kappa));
      corpus.push_back({"extremal" + std::to_string(n), g, r.kappa});
    }
    // the four smoothed rows the size proof walks through at k' = 2
    const std::pair<int, int> rows[] = {{14, 17}, {13, 16}, {12, 15}, {11, 14}};
    for (int t = 1; t <= 4; ++t) {
      Graph g = smooth_many(build_h(3), t);
      out.require(g.vertex_count() == rows[t - 1].first && g.edge_count() == rows[t - 1].second,
                  "smoothed row t=" + std::to_string(t) + " drifted");
    }
  });

  run(6, "no kappa3 = 2 graph beats the ceil(6n/5) edge floor", 0.0, [&](Outcome& out) {
    long applicable = 0;
    auto check = [&](const Graph& g, int kappa) {
      if (kappa != 2) return;
      ++applicable;
      if (g.edge_count() < lower_bound_size(g.vertex_count()))
        out.require(false, "violation at n=" + std::to_string(g.vertex_count()) +
                               " e=" + std::to_string(g.edge_count()));
    };
    for (const auto& entry : corpus) check(entry.graph, entry.kappa3_value);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
      const int n = 4 + static_cast<int>(rng() % 7);
      Graph g = random_connected_graph(rng, n, kSweep[i % 5]);
      const int kappa = kappa3(g).kappa;
      check(g, kappa);
      side_corpus.push_back({"random10", std::move(g), kappa});
    }
    out.require(applicable > 0, "no kappa3 = 2 graph reached the bound check");
  });

  run(7, "solver matches the independent reference on every triple", 900.0, [&](Outcome& out) {
    long mismatches = 0, triples = 0;
    auto sweep = [&](const Graph& g, const std::string& name) {
      const int n = g.vertex_count();
      int least = n;
      for (int a = 0; a < n - 2; ++a)
        for (int b = a + 1; b < n - 1; ++b)
          for (int c = b + 1; c < n; ++c) {
            VertexSet s({a, b, c});
            const int fast = kappa_of_set(g, s).kappa;
            const int slow = brute_force_kappa_of_set(g, s);
            ++triples;
            if (fast != slow) ++mismatches;
            if (fast < least) least = fast;
          }
      side_corpus.push_back({name, g, least});
    };
    for (int n = 3; n <= 5; ++n)
      for (Graph& g : connected_graphs(n)) sweep(g, "exhaustive" + std::to_string(n));
    std::mt19937_64 rng(13);
    for (int i = 0; i < 500; ++i) {
      const int n = 6 + static_cast<int>(rng() % 2);
      sweep(random_connected_graph(rng, n, kSweep[i % 5]), "random7");
    }
    out.require(mismatches == 0, std::to_string(mismatches) + " of " + std::to_string(triples) +
                                     " triples disagree with the reference");
  });

  run(8, "smoothing never lowers kappa3 on sampled graphs", 0.0, [&](Outcome& out) {
    CampaignReport report = verify_lemma5(200, 7);
    out.require(report.passed(),
                std::to_string(report.violations.size()) + " smoothing violations");
    out.require(report.examined == 200, "sample count drifted");
    out.require(is_isomorphic(smooth(figure_fixture(1), 9), figure_fixture(5)),
                "smoothing the order-10 witness at 9 is not the order-9 witness");
  });

  run(9, "kappa3 respects the degree cutoffs on every corpus graph", 0.0, [&](Outcome& out) {
    long checked = 0;
    auto check = [&](const CorpusEntry& entry) {
      const Graph& g = entry.graph;
      if (g.vertex_count() < 3 || !g.is_connected()) return;
      ++checked;
      const int d = g.min_degree();
      if (entry.kappa3_value > d)
        out.require(false, entry.name + " solved above its minimum degree");
      if (min_degree_pair_adjacent(g) && entry.kappa3_value > d - 1)
        out.require(false, entry.name + " solved above degree-1 with an adjacent low pair");
    };
    for (const auto& entry : corpus) check(entry);
    for (const auto& entry : side_corpus) check(entry);
    out.require(checked > 1500, "corpus unexpectedly small: " + std::to_string(checked));
  });

  run(10, "reports for criteria 1-5 are byte-identical across worker counts", 0.0,
      [&](Outcome& out) {
        auto produce = [&](int workers) {
          std::ostringstream doc;
          for (int id = 1; id <= 6; ++id) {
            KappaResult r = kappa3(figure_fixture(id));
            doc << "figure" << id << " kappa3=" << r.kappa << "\n";
          }
          for (int k : {1, 2, 3}) doc << "h" << k << " kappa3=" << kappa3(build_h(k)).kappa << "\n";
          doc << emit_campaign_report(verify_lemma4(workers));
          doc << emit_campaign_report(verify_lemma3(workers));
          doc << emit_campaign_report(verify_theorem1(3, workers));
          return doc.str();
        };
        const std::string at1 = produce(1);
        const std::string at4 = produce(4);
        const std::string at8 = produce(8);
        out.require(at1 == at4, "parallelism 4 diverged from 1");
        out.require(at1 == at8, "parallelism 8 diverged from 1");
        out.require(at1.find("\"verdict\": \"fail\"") == std::string::npos,
                    "a campaign failed inside the determinism run");
      });

  std::printf("acceptance: %d/%d criteria passed\n", passed, passed + failed);
  return failed == 0 ? 0 : 1;
}
