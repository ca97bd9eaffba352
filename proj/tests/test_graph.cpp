#include <doctest.h>

#include <random>

#include "cyclecheck/enumerate.hpp"
#include "cyclecheck/graph.hpp"
#include "cyclecheck/graph6.hpp"
#include "oracles.hpp"

using namespace cyc;

TEST_CASE("graph construction enforces the invariants") {
  Graph g(4);
  g.add_edge(0, 2);
  CHECK(g.adjacent(0, 2));
  CHECK(g.adjacent(2, 0));  // symmetric
  CHECK_FALSE(g.adjacent(0, 1));
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);  // no loops
  CHECK_THROWS_AS(g.add_edge(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(Graph(kMaxVertices + 1), CapacityError);
  CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
}

TEST_CASE("builders") {
  CHECK(complete_graph(4).edge_count() == 6);
  CHECK(path_graph(4).edge_count() == 3);
  CHECK(cycle_graph(5).edge_count() == 5);
  CHECK(star_graph(3).edge_count() == 3);
  CHECK(petersen_graph().edge_count() == 15);
  for (int v = 0; v < 10; ++v) CHECK(petersen_graph().degree(v) == 3);
}

TEST_CASE("join and disjoint_union") {
  Graph k2 = join(complete_graph(1), complete_graph(1));
  CHECK(k2 == complete_graph(2));

  Graph two_k2 = disjoint_union({complete_graph(2), complete_graph(2)});
  CHECK(two_k2.order() == 4);
  CHECK(two_k2.edge_count() == 2);

  // 6 hub edges + 5*4 join edges
  Graph fam = join(disjoint_union(std::vector<Graph>(5, complete_graph(1))), complete_graph(4));
  CHECK(fam.order() == 9);
  CHECK(fam.edge_count() == 26);
}

TEST_CASE("join raises block-vertex degrees by the other side's order") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Graph a = oracle::random_graph(rng, 1 + trial % 6, 0.4);
    Graph b = oracle::random_graph(rng, 1 + (trial / 2) % 5, 0.5);
    Graph j = join(a, b);
    CHECK(j.order() == a.order() + b.order());
    CHECK(j.edge_count() == a.edge_count() + b.edge_count() + a.order() * b.order());
    for (int v = 0; v < a.order(); ++v) CHECK(j.degree(v) == a.degree(v) + b.order());
    for (int v = 0; v < b.order(); ++v) CHECK(j.degree(a.order() + v) == b.degree(v) + a.order());
  }
}

TEST_CASE("components") {
  Graph g = disjoint_union({complete_graph(3), path_graph(2), complete_graph(1)});
  auto comps = g.components_within(g.vertex_mask());
  REQUIRE(comps.size() == 3);
  CHECK(popcount(comps[0]) == 3);
  CHECK(popcount(comps[1]) == 2);
  CHECK(popcount(comps[2]) == 1);
  CHECK_FALSE(g.connected());
  CHECK(complete_graph(5).connected());
  CHECK(Graph(0).connected());
}

TEST_CASE("induced subgraph relabels densely") {
  Graph g = cycle_graph(5);
  Graph sub = g.induced(bit(0) | bit(1) | bit(3));
  CHECK(sub.order() == 3);
  CHECK(sub.edge_count() == 1);  // only 0-1 survives
  CHECK(sub.adjacent(0, 1));
}

TEST_CASE("graph6 decodes the documented star example") {
  Graph g = graph6_decode("D?{");
  CHECK(g.order() == 5);
  CHECK(g.edge_count() == 4);
  for (int v = 0; v < 4; ++v) CHECK(g.adjacent(v, 4));
}

TEST_CASE("graph6 encodes the one-vertex graph") {
  CHECK(graph6_encode(complete_graph(1)) == "@");
}

TEST_CASE("graph6 tolerates the optional header and line endings") {
  CHECK(graph6_decode(">>graph6<<D?{\r\n") == graph6_decode("D?{"));
}

TEST_CASE("graph6 round-trip on the petersen graph") {
  CHECK(graph6_decode(graph6_encode(petersen_graph())) == petersen_graph());
}

TEST_CASE("graph6 round-trip is the identity on every graph up to n=8") {
  for (int n = 1; n <= 8; ++n)
    for (const Graph& g : enumerate_all_graphs(n)) {
      std::string enc = graph6_encode(g);
      CHECK(graph6_decode(enc) == g);
      CHECK(oracle::graph6_reference_decode(enc) == g);
    }
}

TEST_CASE("graph6 agrees with the reference decoder on random large graphs") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng() % 40);
    Graph g = oracle::random_graph(rng, n, 0.3);
    std::string enc = graph6_encode(g);
    CHECK(graph6_decode(enc) == g);
    CHECK(oracle::graph6_reference_decode(enc) == g);
  }
}

TEST_CASE("graph6 parse errors carry byte offsets") {
  CHECK_THROWS_AS(graph6_decode(""), Graph6ParseError);
  CHECK_THROWS_AS(graph6_decode("D"), Graph6ParseError);        // truncated data
  CHECK_THROWS_AS(graph6_decode("D?{?"), Graph6ParseError);     // trailing bytes
  CHECK_THROWS_AS(graph6_decode("D?\x1f"), Graph6ParseError);   // byte below 63
  CHECK_THROWS_AS(graph6_decode("~~????"), Graph6ParseError);   // unsupported 8-byte form
  try {
    graph6_decode("D?\x1f");
    CHECK(false);
  } catch (const Graph6ParseError& e) {
    CHECK(e.offset == 2);
  }
  // order beyond the solver capacity is a capacity error, not a parse error
  std::string big = "~";
  big += static_cast<char>(63);
  big += static_cast<char>(63 + 1);  // n = 65
  big += static_cast<char>(63 + 1);
  CHECK_THROWS_AS(graph6_decode(big), CapacityError);
}

TEST_CASE("graph6 uses the long order form from n=63") {
  Graph g(63);
  g.add_edge(0, 62);
  std::string enc = graph6_encode(g);
  CHECK(enc.substr(0, 1) == "~");
  CHECK(graph6_decode(enc) == g);
}
