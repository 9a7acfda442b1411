#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "fgb/graph_complex.hpp"

using namespace fgb;

namespace {

// A (2,3)-graph with two cycles based at the same vertex: three loop cycles,
// the first and third at a common vertex, doubled connectors to avoid
// separating edges.
NkGraph shared_base_graph() {
  NkGraph g;
  g.graph.num_vertices = 3;
  g.graph.basepoint = 0;
  g.graph.edges = {{1, 1}, {1, 1}, {2, 2}, {0, 1}, {0, 1}, {0, 2}, {0, 2}};
  g.cycles = {Cycle{1, {0}}, Cycle{2, {2}}, Cycle{1, {1}}};
  return g;
}

// A (1,2)-graph with seven vertices: two triangle cycles joined to the
// basepoint and to each other, carrying a six-edge admissible forest.
NkGraph two_triangle_graph() {
  NkGraph g;
  g.graph.num_vertices = 7;
  g.graph.basepoint = 0;
  g.graph.edges = {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {0, 2}, {0, 5}, {3, 6}};
  g.cycles = {Cycle{1, {0, 1, 2}}, Cycle{4, {3, 4, 5}}};
  return g;
}

// Three bigon cycles in a chain plus a chord joining the chain ends.
NkGraph chained_bigons_graph() {
  NkGraph g;
  g.graph.num_vertices = 4;
  g.graph.basepoint = 0;
  g.graph.edges = {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {2, 3}, {2, 3}, {0, 3}};
  g.cycles = {Cycle{0, {0, 1}}, Cycle{1, {2, 3}}, Cycle{2, {4, 5}}};
  return g;
}

}  // namespace

TEST_CASE("multigraph basics") {
  MultiGraph g{3, 0, {{0, 1}, {0, 1}, {1, 2}, {2, 2}}};
  CHECK(g.degree(0) == 2);
  CHECK(g.degree(1) == 3);
  CHECK(g.degree(2) == 3);  // loop counts twice
  CHECK(g.connected());
  CHECK(g.genus() == 2);
  CHECK(g.bridge_edges() == std::vector<int>{2});  // parallel pair is no bridge

  MultiGraph h{2, 0, {{0, 0}, {1, 1}}};
  CHECK(!h.connected());
}

TEST_CASE("validation") {
  SUBCASE("shared cycle base point configuration is valid") {
    CHECK(validate(shared_base_graph(), 2, 3, GraphVariant::nk).empty());
  }
  SUBCASE("seven-vertex host is valid") {
    CHECK(validate(two_triangle_graph(), 1, 2, GraphVariant::nk).empty());
  }
  SUBCASE("bridges are flagged") {
    NkGraph g;
    g.graph.num_vertices = 2;
    g.graph.basepoint = 0;
    g.graph.edges = {{0, 0}, {1, 1}, {0, 1}};
    g.cycles = {Cycle{1, {1}}};
    auto bad = validate(g, 1, 1, GraphVariant::nk);
    REQUIRE(!bad.empty());
    bool saw = false;
    for (const auto& msg : bad) saw = saw || msg.find("separating edge") != std::string::npos;
    CHECK(saw);
  }
  SUBCASE("two cycles may not share two points") {
    NkGraph g;
    g.graph.num_vertices = 2;
    g.graph.basepoint = 0;
    g.graph.edges = {{0, 1}, {0, 1}, {0, 1}, {0, 1}};
    g.cycles = {Cycle{0, {0, 1}}, Cycle{1, {2, 3}}};
    auto bad = validate(g, 1, 2, GraphVariant::nk);
    bool saw = false;
    for (const auto& msg : bad) saw = saw || msg.find("more than a point") != std::string::npos;
    CHECK(saw);
  }
  SUBCASE("valence-2 vertices must be marked points") {
    NkGraph g;  // subdivided loop: the extra vertex is neither base nor mark
    g.graph.num_vertices = 3;
    g.graph.basepoint = 0;
    g.graph.edges = {{0, 1}, {1, 2}, {0, 2}, {0, 0}};
    g.cycles = {Cycle{0, {0, 1, 2}}};
    auto bad = validate(g, 1, 1, GraphVariant::nk);
    bool saw = false;
    for (const auto& msg : bad) saw = saw || msg.find("valence-2") != std::string::npos;
    CHECK(saw);
    // the kn rule is stricter: only the basepoint may have valence 2
    auto bad_kn = validate(g, 1, 1, GraphVariant::kn);
    CHECK(!bad_kn.empty());
  }
}

TEST_CASE("dual cycle graph") {
  SUBCASE("disjoint cycles give isolated nodes") {
    NkGraph g;
    g.graph.num_vertices = 2;
    g.graph.basepoint = 0;
    g.graph.edges = {{0, 0}, {1, 1}, {0, 1}, {0, 1}};
    g.cycles = {Cycle{0, {0}}, Cycle{1, {1}}};
    DualGraph d = dual_cycle_graph(g);
    CHECK(d.forest);
    CHECK(d.shared_points.empty());
    CHECK(cycle_union_components(g) == 2);
  }
  SUBCASE("one shared point gives a path") {
    DualGraph d = dual_cycle_graph(shared_base_graph());
    CHECK(d.forest);
    CHECK(d.shared_points == std::vector<int>{1});
    CHECK(d.graph.edges.size() == 2);
    CHECK(cycle_union_components(shared_base_graph()) == 2);
  }
  SUBCASE("three pairwise intersections close a loop") {
    NkGraph g;
    g.graph.num_vertices = 3;
    g.graph.basepoint = 0;
    g.graph.edges = {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 2}, {0, 2}};
    g.cycles = {Cycle{0, {0, 1}}, Cycle{1, {2, 3}}, Cycle{0, {4, 5}}};
    DualGraph d = dual_cycle_graph(g);
    CHECK(!d.forest);
    CHECK(d.shared_points.size() == 3);
  }
}

TEST_CASE("edge collapse") {
  SUBCASE("two-edge cycle collapses to a loop") {
    NkGraph g;
    g.graph.num_vertices = 2;
    g.graph.basepoint = 0;
    g.graph.edges = {{0, 1}, {0, 1}};
    g.cycles = {Cycle{1, {0, 1}}};
    NkGraph c = collapse_edge(g, 0);
    CHECK(validate(c, 0, 1, GraphVariant::nk).empty());
    CHECK(c.graph.num_vertices == 1);
    CHECK(c.cycles[0].edges.size() == 1);
    // the remaining loop cannot collapse
    CHECK_THROWS_AS(collapse_edge(c, 0), InadmissibleEdge);
  }
  SUBCASE("chords of the cycle union are rejected") {
    NkGraph g = chained_bigons_graph();
    REQUIRE(validate(g, 1, 3, GraphVariant::nk).empty());
    std::string reason;
    CHECK(!edge_collapsible(g, 6, &reason));
    CHECK(reason.find("collapsed") != std::string::npos);
  }
  SUBCASE("collapse results stay valid graphs") {
    NkGraph g = two_triangle_graph();
    for (int e = 0; e < g.graph.num_edges(); ++e) {
      if (!edge_collapsible(g, e)) continue;
      CHECK(validate(collapse_edge(g, e), 1, 2, GraphVariant::nk).empty());
    }
  }
  SUBCASE("collapse order does not matter") {
    NkGraph g = two_triangle_graph();
    // a two-edge admissible forest collapsed in both orders
    std::vector<int> f = {0, 6};
    REQUIRE(forest_admissible(g, f));
    NkGraph a = collapse_edge(collapse_edge(g, 0), 5);  // edge 6 shifts to 5
    NkGraph b = collapse_edge(collapse_edge(g, 6), 0);
    CHECK(canonical_certificate(a, GraphVariant::nk, false) ==
          canonical_certificate(b, GraphVariant::nk, false));
    CHECK(canonical_certificate(a, GraphVariant::nk, false) ==
          canonical_certificate(collapse_forest(g, f), GraphVariant::nk, false));
  }
}

TEST_CASE("admissible forests") {
  SUBCASE("reduced graphs admit none") {
    NkGraph rose;
    rose.graph.num_vertices = 1;
    rose.graph.basepoint = 0;
    rose.graph.edges = {{0, 0}};
    rose.cycles = {Cycle{0, {0}}};
    CHECK(admissible_forests(rose).empty());
    CHECK(max_admissible_forest_size(rose) == 0);
  }
  SUBCASE("two-edge cycle admits exactly the two single edges") {
    NkGraph g;
    g.graph.num_vertices = 2;
    g.graph.basepoint = 0;
    g.graph.edges = {{0, 1}, {0, 1}};
    g.cycles = {Cycle{1, {0, 1}}};
    auto forests = admissible_forests(g);
    CHECK(forests.size() == 2);
    CHECK(max_admissible_forest_size(g) == 1);
  }
  SUBCASE("the seven-vertex host carries a six-edge forest") {
    NkGraph g = two_triangle_graph();
    CHECK(max_admissible_forest_size(g) == 6);
    CHECK(forest_admissible(g, {0, 1, 3, 4, 6, 8}));
    // every admissible forest collapses to a valid graph
    for (const auto& f : admissible_forests(g)) {
      CHECK(validate(collapse_forest(g, f), 1, 2, GraphVariant::nk).empty());
    }
  }
  SUBCASE("subsets of admissible forests are admissible") {
    NkGraph g = two_triangle_graph();
    std::vector<int> f = {0, 1, 3, 4, 6, 8};
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      std::vector<int> sub = f;
      sub.erase(sub.begin() + static_cast<long>(drop));
      CHECK(forest_admissible(g, sub));
    }
  }
}

TEST_CASE("maximal forest avoiding an edge") {
  NkGraph g = two_triangle_graph();
  for (int e = 0; e < g.graph.num_edges(); ++e) {
    std::vector<int> f = max_forest_avoiding(g, e);
    CHECK(std::find(f.begin(), f.end(), e) == f.end());
    REQUIRE(forest_admissible(g, f));
    NkGraph reduced = collapse_forest(g, f);
    // reduced: no further admissible edge
    for (int t = 0; t < reduced.graph.num_edges(); ++t) {
      CHECK(!edge_collapsible(reduced, t));
    }
  }
  SUBCASE("cycle edges keep the rest of their cycle") {
    std::vector<int> f = max_forest_avoiding(g, 0);
    CHECK(std::find(f.begin(), f.end(), 1) != f.end());
    CHECK(std::find(f.begin(), f.end(), 2) != f.end());
  }
  SUBCASE("reduced graphs give the empty forest") {
    NkGraph rose;
    rose.graph.num_vertices = 1;
    rose.graph.basepoint = 0;
    rose.graph.edges = {{0, 0}, {0, 0}};
    rose.cycles = {Cycle{0, {0}}};
    CHECK(max_forest_avoiding(rose, 1).empty());
  }
}

TEST_CASE("canonical forms") {
  NkGraph g = two_triangle_graph();
  SUBCASE("idempotent") {
    NkGraph c = canonical_form(g, GraphVariant::nk, false);
    CHECK(canonical_certificate(c, GraphVariant::nk, false) ==
          canonical_certificate(g, GraphVariant::nk, false));
    CHECK(validate(c, 1, 2, GraphVariant::nk).empty());
  }
  SUBCASE("vertex relabeling does not change the certificate") {
    NkGraph h;
    // same graph with vertices 2 and 5 swapped
    h.graph.num_vertices = 7;
    h.graph.basepoint = 0;
    h.graph.edges = {{1, 5}, {3, 5}, {1, 3}, {2, 4}, {2, 6}, {4, 6}, {0, 5}, {0, 2}, {3, 6}};
    h.cycles = {Cycle{1, {0, 1, 2}}, Cycle{4, {3, 4, 5}}};
    REQUIRE(validate(h, 1, 2, GraphVariant::nk).empty());
    CHECK(canonical_certificate(h, GraphVariant::nk, false) ==
          canonical_certificate(g, GraphVariant::nk, false));
  }
  SUBCASE("swapping the labels of symmetric cycles is an isomorphism") {
    // the graph has an automorphism exchanging the two triangles
    NkGraph h = g;
    std::swap(h.cycles[0], h.cycles[1]);
    CHECK(canonical_certificate(h, GraphVariant::nk, false) ==
          canonical_certificate(g, GraphVariant::nk, false));
  }
  SUBCASE("cycle labels matter unless sigma is set") {
    // one subdivided cycle and one loop cycle: labels distinguishable
    NkGraph a;
    a.graph.num_vertices = 2;
    a.graph.basepoint = 0;
    a.graph.edges = {{0, 1}, {0, 1}, {0, 0}};
    a.cycles = {Cycle{1, {0, 1}}, Cycle{0, {2}}};
    REQUIRE(validate(a, 0, 2, GraphVariant::nk).empty());
    NkGraph b = a;
    std::swap(b.cycles[0], b.cycles[1]);
    CHECK(canonical_certificate(b, GraphVariant::nk, false) !=
          canonical_certificate(a, GraphVariant::nk, false));
    CHECK(canonical_certificate(b, GraphVariant::nk, true) ==
          canonical_certificate(a, GraphVariant::nk, true));
  }
}

TEST_CASE("enumeration of small complexes") {
  SUBCASE("single cycle, no handles") {
    EnumeratedComplex labeled = enumerate_graphs(0, 1, GraphVariant::nk, false);
    CHECK(labeled.graphs.size() == 2);  // the loop rose and its blow-up
    for (const NkGraph& g : labeled.graphs) {
      CHECK(validate(g, 0, 1, GraphVariant::nk).empty());
      CHECK(g.graph.num_vertices <= 2);
    }
    CHECK(quotient_dimension(labeled) == 1);
    CHECK(quotient_dimension_formula(0, 1, GraphVariant::nk) == 1);

    auto rows = census(labeled, 0, 1);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].c == 1);
    CHECK(rows[0].v == 2);
    CHECK(rows[0].e == 2);
    CHECK(rows[0].matches);
  }
  SUBCASE("every enumerated graph and every forest collapse is valid") {
    EnumeratedComplex labeled = enumerate_graphs(1, 1, GraphVariant::nk, false);
    CHECK(!labeled.graphs.empty());
    for (const NkGraph& g : labeled.graphs) {
      CHECK(validate(g, 1, 1, GraphVariant::nk).empty());
      for (const auto& f : admissible_forests(g)) {
        CHECK(validate(collapse_forest(g, f), 1, 1, GraphVariant::nk).empty());
      }
    }
    CHECK(quotient_dimension(labeled) == 3);
  }
  SUBCASE("census formulas hold at (1,1)") {
    EnumeratedComplex labeled = enumerate_graphs(1, 1, GraphVariant::nk, false);
    auto rows = census(labeled, 1, 1);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].matches);
    CHECK(rows[0].c == 1);
    CHECK(rows[0].v == 4);
    CHECK(rows[0].e == 5);
  }
  SUBCASE("the enumerated set is closed under edge collapse") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{1, 1}, {0, 2}}) {
      EnumeratedComplex labeled = enumerate_graphs(n, k, GraphVariant::nk, false);
      std::set<std::string> certs;
      for (const NkGraph& g : labeled.graphs) {
        certs.insert(canonical_certificate(g, GraphVariant::nk, false));
      }
      for (const NkGraph& g : labeled.graphs) {
        for (int e = 0; e < g.graph.num_edges(); ++e) {
          if (!edge_collapsible(g, e)) continue;
          CHECK(certs.count(canonical_certificate(collapse_edge(g, e), GraphVariant::nk, false)));
        }
      }
    }
  }
  SUBCASE("sigma quotient never exceeds the labeled count") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 1}}) {
      EnumeratedComplex labeled = enumerate_graphs(n, k, GraphVariant::nk, false);
      EnumeratedComplex sigma = enumerate_graphs(n, k, GraphVariant::nk, true);
      CHECK(sigma.graphs.size() <= labeled.graphs.size());
    }
  }
  SUBCASE("marked-point-free variant") {
    EnumeratedComplex kn01 = enumerate_graphs(0, 1, GraphVariant::kn, false);
    CHECK(kn01.graphs.size() == 1);
    CHECK(quotient_dimension(kn01) == 0);
    EnumeratedComplex kn11 = enumerate_graphs(1, 1, GraphVariant::kn, false);
    CHECK(quotient_dimension(kn11) == 2);
    for (const NkGraph& g : kn11.graphs) {
      CHECK(validate(g, 1, 1, GraphVariant::kn).empty());
    }
  }
  SUBCASE("serial and parallel enumeration agree bit-exactly") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}}) {
      EnumeratedComplex par = enumerate_graphs(n, k, GraphVariant::nk, false, {}, true);
      EnumeratedComplex ser = enumerate_graphs_serial(n, k, GraphVariant::nk, false);
      REQUIRE(par.graphs.size() == ser.graphs.size());
      for (std::size_t t = 0; t < par.graphs.size(); ++t) {
        CHECK(to_exchange_format(par.graphs[t], n, k) == to_exchange_format(ser.graphs[t], n, k));
      }
    }
  }
  SUBCASE("the seven-vertex host appears in the enumerated complex") {
    NkGraph c = canonical_form(two_triangle_graph(), GraphVariant::nk, false);
    CHECK(validate(c, 1, 2, GraphVariant::nk).empty());
    std::string cert = canonical_certificate(c, GraphVariant::nk, false);
    EnumeratedComplex labeled = enumerate_graphs(1, 2, GraphVariant::nk, false);
    bool found = false;
    for (const NkGraph& g : labeled.graphs) {
      found = found || canonical_certificate(g, GraphVariant::nk, false) == cert;
    }
    CHECK(found);
  }
  SUBCASE("budget guard") {
    CHECK_THROWS_AS(enumerate_graphs(2, 2, GraphVariant::nk, false), BudgetExceeded);
    CHECK_THROWS_AS(enumerate_graphs(0, 3, GraphVariant::nk, false), BudgetExceeded);
  }
}

TEST_CASE("exchange format") {
  NkGraph g = two_triangle_graph();
  std::string text = to_exchange_format(g, 1, 2);
  CHECK(text.find("nk-graph 1 2\n") == 0);
  int n = 0, k = 0;
  NkGraph back = from_exchange_format(text, &n, &k);
  CHECK(n == 1);
  CHECK(k == 2);
  CHECK(back.graph.edges == g.graph.edges);
  CHECK(back.graph.basepoint == g.graph.basepoint);
  REQUIRE(back.cycles.size() == g.cycles.size());
  for (std::size_t j = 0; j < g.cycles.size(); ++j) {
    CHECK(back.cycles[j].base == g.cycles[j].base);
    CHECK(back.cycles[j].edges == g.cycles[j].edges);
  }
  CHECK(to_exchange_format(back, n, k) == text);
  CHECK_THROWS_AS(from_exchange_format("bogus"), ParseError);
}
