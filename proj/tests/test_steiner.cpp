#include <optional>
#include <stdexcept>

#include "doctest.h"
#include "test_util.hpp"
#include "treeconn/canonical.hpp"
#include "treeconn/constructions.hpp"
#include "treeconn/steiner.hpp"

using namespace treeconn;
using testutil::complete_graph;
using testutil::cycle_graph;
using testutil::load_fixture;
using testutil::path_graph;

TEST_CASE("reference search values on small graphs") {
  CHECK(brute_force_kappa_of_set(complete_graph(3), VertexSet({0, 1, 2})) == 1);
  CHECK(brute_force_kappa_of_set(cycle_graph(4), VertexSet({0, 1, 2})) == 1);
  CHECK(brute_force_kappa_of_set(complete_graph(4), VertexSet({0, 1, 2})) == 2);
  CHECK(brute_force_kappa_of_set(complete_graph(5), VertexSet({0, 1, 2})) == 3);
  CHECK(brute_force_kappa_of_set(complete_graph(5), VertexSet({2, 3, 4})) == 3);
  CHECK(brute_force_kappa_of_set(complete_graph(6), VertexSet({0, 1, 2})) == 4);

  // pairs work too: three internally disjoint paths across the 2,3-biclique
  Graph h1 = build_h(1);
  CHECK(brute_force_kappa_of_set(h1, VertexSet({0, 2})) == 3);
  CHECK(brute_force_kappa_of_set(h1, VertexSet({0, 2, 4})) == 2);
  CHECK(brute_force_kappa_of_set(h1, VertexSet({1, 3, 4})) == 2);
  CHECK(brute_force_kappa_of_set(h1, VertexSet({0, 1, 2})) == 2);

  // disconnected terminals pack nothing
  CHECK(brute_force_kappa_of_set(Graph(4, {{0, 1}, {2, 3}}), VertexSet({0, 2})) == 0);
}

TEST_CASE("reference search guards its domain") {
  CHECK_THROWS_WITH(brute_force_kappa_of_set(path_graph(9), VertexSet({0, 1})),
                    "the reference search handles at most 8 vertices");
  CHECK_THROWS_WITH(brute_force_kappa_of_set(path_graph(3), VertexSet({0})),
                    "a tree packing needs at least two terminals");
  CHECK_THROWS_WITH(brute_force_kappa_of_set(path_graph(3), VertexSet({0, 5})),
                    "terminal 5 out of range");
}

TEST_CASE("solver agrees with the reference on its whole range") {
  Graph fig6 = load_fixture("figure6.edges");
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b)
      for (int c = b + 1; c < 8; ++c) {
        VertexSet s({a, b, c});
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(c);
        CHECK(kappa_of_set(fig6, s).kappa == brute_force_kappa_of_set(fig6, s));
      }
}

TEST_CASE("find_disjoint_trees returns validating families") {
  Graph k4 = complete_graph(4);
  auto family = find_disjoint_trees(k4, VertexSet({0, 1, 2}), 2);
  REQUIRE(family.has_value());
  CHECK(family->trees.size() == 2);
  CHECK(validate_certificate(k4, *family).ok);

  // absence is a decision, not a timeout
  CHECK_FALSE(find_disjoint_trees(cycle_graph(4), VertexSet({0, 1, 2}), 2).has_value());
  CHECK(find_disjoint_trees(cycle_graph(4), VertexSet({0, 1, 2}), 1).has_value());
}

TEST_CASE("solver input guards") {
  Graph k4 = complete_graph(4);
  CHECK_THROWS_WITH((void)find_disjoint_trees(k4, VertexSet({0, 1, 2}), 0),
                    "tree count must be positive");
  CHECK_THROWS_WITH((void)find_disjoint_trees(k4, VertexSet({0}), 1),
                    "a tree packing needs at least two terminals");
  CHECK_THROWS_WITH((void)find_disjoint_trees(k4, VertexSet({0, 9}), 1),
                    "terminal 9 out of range");
  CHECK_THROWS_WITH((void)kappa_of_set(path_graph(21), VertexSet({0, 1, 2})),
                    "graph has 21 vertices, above the solver limit of 20");
  CHECK(kappa_of_set(path_graph(21), VertexSet({0, 1, 2}), 21).kappa == 1);
  CHECK_THROWS_WITH((void)kappa3(Graph(2, {{0, 1}})), "kappa3 needs at least three vertices");
}

TEST_CASE("certificate validation pinpoints defects") {
  Graph k4 = complete_graph(4);
  VertexSet s({0, 1, 2});
  auto family = *find_disjoint_trees(k4, s, 2);
  CHECK(validate_certificate(k4, family).ok);

  SUBCASE("foreign edge") {
    Graph c4 = cycle_graph(4);
    auto check = validate_certificate(c4, family);
    CHECK_FALSE(check.ok);
  }
  SUBCASE("missing terminal") {
    DisjointTreeFamily broken = family;
    broken.trees[0].terminals = VertexSet({0, 1});
    auto check = validate_certificate(k4, broken);
    CHECK_FALSE(check.ok);
    CHECK(check.diagnostics.front() == "tree 0 carries a different terminal set than the family");
  }
  SUBCASE("edge count must match a tree") {
    DisjointTreeFamily broken = family;
    broken.trees[0].edges.pop_back();
    auto check = validate_certificate(k4, broken);
    CHECK_FALSE(check.ok);
  }
  SUBCASE("shared edge across trees") {
    DisjointTreeFamily broken = family;
    broken.trees[1] = broken.trees[0];
    auto check = validate_certificate(k4, broken);
    CHECK_FALSE(check.ok);
    bool mentioned = false;
    for (const auto& line : check.diagnostics)
      if (line.find("share edge") != std::string::npos) mentioned = true;
    CHECK(mentioned);
  }
  SUBCASE("non-terminal leaf") {
    DisjointTreeFamily broken;
    broken.terminals = VertexSet({0, 1});
    TreeCertificate t;
    t.terminals = broken.terminals;
    t.vertices = VertexSet({0, 1, 2});
    t.edges = {{0, 1}, {1, 2}};
    broken.trees.push_back(t);
    auto check = validate_certificate(k4, broken);
    CHECK_FALSE(check.ok);
    CHECK(check.diagnostics.front() == "tree 0 has non-terminal leaf 2");
  }
}

TEST_CASE("kappa of a set over frozen instances") {
  Graph fig1 = load_fixture("figure1.edges");
  CHECK(kappa_of_set(fig1, VertexSet({1, 3, 8})).kappa == 2);
  CHECK(kappa_of_set(fig1, VertexSet({2, 6, 9})).kappa == 2);

  Graph fig2 = load_fixture("figure2.edges");
  CHECK(kappa_of_set(fig2, VertexSet({0, 1, 3})).kappa == 1);
  CHECK_FALSE(find_disjoint_trees(fig2, VertexSet({0, 1, 3}), 2).has_value());

  CHECK(kappa_of_set(load_fixture("figure3.edges"), VertexSet({0, 1, 4})).kappa == 1);
  CHECK(kappa_of_set(load_fixture("figure4.edges"), VertexSet({0, 3, 4})).kappa == 1);

  // terminals in different components
  KappaResult split = kappa_of_set(Graph(4, {{0, 1}, {2, 3}}), VertexSet({0, 2}));
  CHECK(split.kappa == 0);
  CHECK(split.family.trees.empty());
}

TEST_CASE("kappa_of_set results self-validate") {
  Graph fig5 = load_fixture("figure5.edges");
  KappaResult r = kappa_of_set(fig5, VertexSet({0, 1, 2}));
  CHECK(r.kappa == 2);
  CHECK(static_cast<int>(r.family.trees.size()) == r.kappa);
  CHECK(validate_certificate(fig5, r.family).ok);
}

TEST_CASE("kappa3 over reference graphs") {
  KappaResult k4 = kappa3(complete_graph(4));
  CHECK(k4.kappa == 2);
  CHECK(k4.witness_set == VertexSet({0, 1, 2}));

  Graph k4_minus(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK(kappa3(k4_minus).kappa == 2);

  CHECK(kappa3(complete_graph(5)).kappa == 3);
  CHECK(kappa3(complete_graph(6)).kappa == 4);

  KappaResult c5 = kappa3(cycle_graph(5));
  CHECK(c5.kappa == 1);
  CHECK(c5.witness_set == VertexSet({0, 1, 2}));
}

TEST_CASE("kappa3 on the shipped fixtures") {
  const struct {
    const char* name;
    int kappa;
  } rows[] = {{"figure1.edges", 2}, {"figure2.edges", 1}, {"figure3.edges", 1},
              {"figure4.edges", 1}, {"figure5.edges", 2}, {"figure6.edges", 2}};
  for (const auto& row : rows) {
    CAPTURE(row.name);
    Graph g = load_fixture(row.name);
    KappaResult r = kappa3(g);
    CHECK(r.kappa == row.kappa);
    if (r.kappa > 0) CHECK(validate_certificate(g, r.family).ok);
  }
  CHECK(kappa3(load_fixture("figure1.edges")).witness_set == VertexSet({0, 1, 2}));
  CHECK(kappa3(load_fixture("h_k3.edges")).kappa == 2);
}

TEST_CASE("kappa3 of a disconnected graph is zero") {
  Graph two_triangles(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  KappaResult r = kappa3(two_triangles);
  CHECK(r.kappa == 0);
  CHECK(r.witness_set == VertexSet({0, 1, 3}));
  CHECK(r.family.trees.empty());
}

TEST_CASE("kappa3 is a relabeling invariant") {
  Graph fig1 = load_fixture("figure1.edges");
  CHECK(kappa3(fig1.permuted({9, 8, 7, 6, 5, 4, 3, 2, 1, 0})).kappa == 2);
  Graph fig2 = load_fixture("figure2.edges");
  CHECK(kappa3(fig2.permuted({4, 2, 0, 1, 3, 8, 7, 6, 5})).kappa == 1);
}

TEST_CASE("adding an edge never lowers kappa of a set") {
  Graph c4 = cycle_graph(4);
  VertexSet s({0, 1, 2});
  int before = kappa_of_set(c4, s).kappa;
  Graph chord(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
  CHECK(kappa_of_set(chord, s).kappa >= before);
}

TEST_CASE("degree cutoff for kappa3") {
  CHECK(kappa3_upper_bound(cycle_graph(5)) == 1);
  CHECK(kappa3_upper_bound(complete_graph(4)) == 2);
  CHECK(kappa3_upper_bound(load_fixture("figure1.edges")) == 2);
  CHECK(kappa3_upper_bound(build_h(2)) == 2);
  CHECK_THROWS_WITH(kappa3_upper_bound(Graph(4, {{0, 1}, {2, 3}})),
                    "the bound applies to connected graphs only");
  CHECK_THROWS_WITH(kappa3_upper_bound(complete_graph(2)),
                    "the bound needs at least three vertices");

  // the cutoff is honest: it can overshoot the true value
  CHECK(kappa3(build_h(2)).kappa == 1);
}
