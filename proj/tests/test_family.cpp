#include <doctest.h>

#include "cyclecheck/family.hpp"
#include "cyclecheck/invariants.hpp"
#include "cyclecheck/sharpness.hpp"

using namespace cyc;

TEST_CASE("build_family shapes") {
  Graph g = build_family({1, 4});
  CHECK(g.order() == 9);
  CHECK(g.edge_count() == 26);

  CHECK(build_family({2, 3}).order() == 11);

  // lambda=2, delta=4 witness: n = lambda*(delta-lambda+3)-1 = 9
  CHECK(build_family({1, 4}).order() == 2 * (4 - 2 + 3) - 1);

  CHECK_THROWS_AS(build_family({0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(build_family({3, 0}), std::invalid_argument);
  CHECK_THROWS_AS(build_family({10, 10}), CapacityError);
}

TEST_CASE("block-first hub-last labeling") {
  Graph g = build_family({2, 1});  // 2K_2 + K_1, hub = vertex 4
  CHECK(g.degree(4) == 4);
  CHECK(g.adjacent(0, 1));
  CHECK_FALSE(g.adjacent(1, 2));
}

TEST_CASE("predict_params on the named cases") {
  CHECK(predict_params({1, 4}) == FamilyParams{9, 4, 4, 8, 1, 1});
  CHECK(predict_params({2, 2}) == FamilyParams{8, 3, 2, 6, 2, 2});
  CHECK(predict_params({3, 2}) == FamilyParams{11, 4, 2, 8, 3, 3});
}

TEST_CASE("closed forms hold exactly for every family with n <= 15") {
  for (int m = 1; m <= 13; ++m)
    for (int t = 1; t <= 13; ++t) {
      if ((t + 1) * m + t > 15) continue;
      CAPTURE(m);
      CAPTURE(t);
      auto mismatch = cross_validate_family({m, t});
      CHECK_MESSAGE(!mismatch.has_value(), mismatch.value_or(""));
    }
}

TEST_CASE("proposition_witness on the named cases") {
  CHECK(proposition_witness("Thm-A", Axis::CBar, 2, 4) == FamilySpec{1, 4});
  CHECK(proposition_witness("Thm-A", Axis::Kappa, 2, 4) == FamilySpec{4, 1});
  CHECK(proposition_witness("Thm-B", Axis::CBar, 3, 4) == FamilySpec{1, 4});
  CHECK(proposition_witness("Thm-A", Axis::Delta, 2, 4) == FamilySpec{2, 3});  // 4K_2+K_3

  // lambda outside the claimed range
  CHECK_THROWS_AS(proposition_witness("Thm-A", Axis::CBar, 4, 4), std::out_of_range);
  // degenerate witness is reported, not silently skipped
  CHECK_THROWS_AS(proposition_witness("Thm-A", Axis::CBar, 1, 4), DegeneracyError);
  CHECK_THROWS_AS(proposition_witness("Thm-B", Axis::CBar, 2, 4), DegeneracyError);
  // unknown axis pairing
  CHECK_THROWS_AS(proposition_witness("Thm-A", Axis::C, 2, 4), std::out_of_range);
}
