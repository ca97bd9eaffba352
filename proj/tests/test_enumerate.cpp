#include <doctest.h>

#include <algorithm>
#include <random>

#include "cyclecheck/enumerate.hpp"
#include "cyclecheck/graph6.hpp"
#include "oracles.hpp"

using namespace cyc;

TEST_CASE("known counts of isomorphism classes") {
  const int all_counts[] = {1, 2, 4, 11, 34, 156, 1044};
  const int connected_counts[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    CHECK(static_cast<int>(enumerate_all_graphs(n).size()) == all_counts[n - 1]);
    CHECK(static_cast<int>(enumerate_connected_graphs(n).size()) == connected_counts[n - 1]);
  }
}

TEST_CASE("n=3 yields the path and the triangle") {
  auto graphs = enumerate_connected_graphs(3);
  REQUIRE(graphs.size() == 2);
  std::vector<int> edges = {graphs[0].edge_count(), graphs[1].edge_count()};
  std::sort(edges.begin(), edges.end());
  CHECK(edges == std::vector<int>{2, 3});
}

TEST_CASE("n=1 yields the single vertex") {
  auto graphs = enumerate_connected_graphs(1);
  REQUIRE(graphs.size() == 1);
  CHECK(graphs[0].order() == 1);
}

TEST_CASE("out-of-range orders point at file ingestion") {
  CHECK_THROWS_AS(enumerate_connected_graphs(0), std::domain_error);
  CHECK_THROWS_AS(enumerate_connected_graphs(10), std::domain_error);
}

TEST_CASE("enumeration order is deterministic") {
  auto a = enumerate_connected_graphs(5);
  auto b = enumerate_connected_graphs(5);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  std::vector<std::uint64_t> keys;
  for (const Graph& g : a) keys.push_back(canonical_key(g));
  CHECK(std::is_sorted(keys.begin(), keys.end()));
}

TEST_CASE("canonical keys are invariant under relabeling") {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    Graph g = oracle::random_graph(rng, n, 0.15 + 0.1 * (trial % 8));
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (g.adjacent(u, v))
          h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    CHECK(canonical_key(g) == canonical_key(h));
  }
}

TEST_CASE("canonical keys separate the n=4 classes") {
  auto graphs = enumerate_all_graphs(4);
  std::vector<std::uint64_t> keys;
  for (const Graph& g : graphs) keys.push_back(canonical_key(g));
  std::sort(keys.begin(), keys.end());
  CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
}

TEST_CASE("canonical key round-trips through graph_from_key") {
  std::mt19937 rng(97);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng() % 9);
    Graph g = oracle::random_graph(rng, n, 0.4);
    std::uint64_t key = canonical_key(g);
    CHECK(canonical_key(graph_from_key(n, key)) == key);
  }
}

// ~100s single-threaded; run explicitly with `unit_tests --no-skip`
TEST_CASE("n=9 class counts match the published values" * doctest::skip()) {
  CHECK(enumerate_all_graphs(9).size() == 274668);
  CHECK(enumerate_connected_graphs(9).size() == 261080);
}

TEST_CASE("highly symmetric graphs canonicalize quickly and correctly") {
  CHECK(canonical_key(complete_graph(9)) == canonical_key(complete_graph(9)));
  CHECK(canonical_key(Graph(9)) == 0);
  Graph h = graph_from_key(9, canonical_key(petersen_graph().induced(low_mask(9))));
  CHECK(h.edge_count() == petersen_graph().induced(low_mask(9)).edge_count());
}
