#include <doctest.h>

#include <random>

#include "cyclecheck/enumerate.hpp"
#include "cyclecheck/family.hpp"
#include "cyclecheck/invariants.hpp"
#include "oracles.hpp"

using namespace cyc;

TEST_CASE("min_degree") {
  CHECK(min_degree(complete_graph(4)) == 3);
  CHECK(min_degree(build_family({1, 4})) == 4);
  CHECK(min_degree(petersen_graph()) == 3);
  CHECK_THROWS_AS(min_degree(Graph(0)), std::domain_error);
}

TEST_CASE("vertex_connectivity on the named cases") {
  CHECK(vertex_connectivity(complete_graph(5)) == 4);
  CHECK(vertex_connectivity(build_family({1, 4})) == 4);
  CHECK(vertex_connectivity(path_graph(4)) == 1);
  CHECK(vertex_connectivity(petersen_graph()) == 3);
  CHECK(vertex_connectivity(Graph(0)) == 0);
  CHECK(vertex_connectivity(Graph(1)) == 0);
  CHECK(vertex_connectivity(disjoint_union({complete_graph(3), complete_graph(3)})) == 0);
  CHECK(vertex_connectivity(cycle_graph(6)) == 2);
}

TEST_CASE("vertex_connectivity matches the subset-removal oracle on all graphs n<=7") {
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_all_graphs(n))
      CHECK(vertex_connectivity(g) == oracle::vertex_connectivity(g));
}

TEST_CASE("independence_number") {
  CHECK(independence_number(cycle_graph(5)) == 2);
  CHECK(independence_number(complete_graph(7)) == 1);
  CHECK(independence_number(star_graph(3)) == 3);
  CHECK(independence_number(Graph(0)) == 0);
  CHECK(independence_number(Graph(6)) == 6);
  CHECK(independence_number(petersen_graph()) == 4);
}

TEST_CASE("sigma_k on the named cases") {
  CHECK(sigma_k(cycle_graph(5), 2) == ExtInt::of(4));
  CHECK(sigma_k(star_graph(3), 4) == ExtInt::inf());
  CHECK(sigma_k(build_family({1, 4}), 3) == ExtInt::of(12));
  CHECK(sigma_k(complete_graph(4), 1) == ExtInt::of(3));
  CHECK(sigma_k(complete_graph(4), 2) == ExtInt::inf());
}

TEST_CASE("invariants against subset oracles on random graphs") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 1 + static_cast<int>(rng() % 7);
    Graph g = oracle::random_graph(rng, n, 0.2 + 0.1 * (trial % 7));
    CHECK(independence_number(g) == oracle::independence_number(g));
    CHECK(vertex_connectivity(g) == oracle::vertex_connectivity(g));
    for (int k = 1; k <= n + 1; ++k) {
      long long expected = oracle::sigma_k(g, k);
      ExtInt got = sigma_k(g, k);
      if (expected < 0)
        CHECK(got == ExtInt::inf());
      else
        CHECK(got == ExtInt::of(expected));
    }
  }
}

TEST_CASE("parameter tuple invariants on all connected graphs n<=6") {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : enumerate_connected_graphs(n)) {
      GraphParams p = compute_params(g);
      CHECK(p.kappa <= p.delta);
      CHECK(p.delta <= p.n - 1);
      CHECK(p.sigma_value(1) == ExtInt::of(p.delta));
      for (int k = 1; k < p.alpha; ++k) CHECK(p.sigma_value(k) <= p.sigma_value(k + 1));
      CHECK(p.sigma_value(p.alpha + 1) == ExtInt::inf());
      CHECK(static_cast<int>(p.sigma.size()) == p.alpha);
    }
}
