#include <doctest.h>

#include "cyclecheck/sharpness.hpp"

using namespace cyc;

namespace {

const SharpnessClaim& claim_for(int prop, Axis axis, LambdaRange range) {
  for (const SharpnessClaim& c : sharpness_claims())
    if (c.proposition == prop && c.axis == axis && c.range == range) return c;
  throw std::runtime_error("no such claim row");
}

}  // namespace

TEST_CASE("claim catalog covers all 18 propositions with three axes each") {
  bool seen[19][5] = {};
  for (const SharpnessClaim& c : sharpness_claims()) {
    CHECK(c.proposition >= 1);
    CHECK(c.proposition <= 18);
    seen[c.proposition][static_cast<int>(c.axis)] = true;
    CHECK_NOTHROW(find_statement(c.statement_id));
    // equality mode exactly for conclusion axes
    bool forward = find_statement(c.statement_id).kind == StatementKind::Forward;
    bool conclusion_axis = c.axis == Axis::C || (forward && c.axis == Axis::CBar);
    CHECK((c.mode == SharpnessMode::EqualityOfConclusion) == conclusion_axis);
  }
  for (int p = 1; p <= 18; ++p) {
    int axes = 0;
    for (int a = 0; a < 5; ++a) axes += seen[p][a];
    CHECK(axes == 3);
  }
}

TEST_CASE("verify_sharpness on the named cells") {
  // conclusion equality: 5K_1+K_4 gives c = 8 = lambda*(delta-lambda+2)
  SharpnessOutcome out = verify_sharpness(claim_for(10, Axis::C, LambdaRange::LeHalf2), 2, 4);
  CHECK(out.verdict == SharpnessVerdict::Confirmed);
  REQUIRE(out.witness.has_value());
  CHECK(*out.witness == FamilySpec{1, 4});
  CHECK(out.params->c == 8);

  // weakened connectivity: 2K_4+K_1 has kappa = 1 = lambda-1 and c = 5 < 8
  out = verify_sharpness(claim_for(10, Axis::Kappa, LambdaRange::LeHalf2), 2, 4);
  CHECK(out.verdict == SharpnessVerdict::Confirmed);
  CHECK(*out.witness == FamilySpec{4, 1});
  CHECK(out.params->kappa == 1);
  CHECK(out.params->c == 5);
  CHECK(out.params->c_bar == 4);

  // exact degree boundary: 4K_2+K_3 has delta = (n+1)/(lambda+1)+lambda-2
  out = verify_sharpness(claim_for(1, Axis::Delta, LambdaRange::LeHalf1), 2, 4);
  CHECK(out.verdict == SharpnessVerdict::Confirmed);
  CHECK(*out.witness == FamilySpec{2, 3});
  CHECK(out.params->n == 11);
  CHECK(out.params->delta == 4);
  CHECK(out.params->c_bar == 2);
}

TEST_CASE("degenerate cells are reported, not skipped") {
  SharpnessOutcome out = verify_sharpness(claim_for(10, Axis::C, LambdaRange::LeHalf2), 1, 4);
  CHECK(out.verdict == SharpnessVerdict::Degenerate);
  CHECK_FALSE(out.witness.has_value());
}

TEST_CASE("range violations are errors") {
  CHECK_THROWS_AS(verify_sharpness(claim_for(1, Axis::CBar, LambdaRange::LeHalf1), 4, 4),
                  std::out_of_range);
  CHECK_THROWS_AS(verify_sharpness(claim_for(1, Axis::CBar, LambdaRange::LeHalf1), 2, 1),
                  std::out_of_range);
}

TEST_CASE("sweep at delta_max=4 confirms every non-degenerate cell") {
  SweepReport report = sharpness_sweep(4);
  CHECK(report.refuted == 0);
  CHECK(report.confirmed > 100);
  for (const SweepRow& row : report.rows)
    CHECK(row.outcome.verdict != SharpnessVerdict::Refuted);
}

TEST_CASE("single-proposition sweep matches the stated range") {
  SweepReport p13 = sharpness_sweep(2, 13);
  // kappa-axis needs lambda >= (delta+2)/2 = 2 at delta=2; lambda=1 is out of range
  for (const SweepRow& row : p13.rows)
    if (row.axis == Axis::Kappa) CHECK(2 * row.lambda >= row.delta + 2);
  CHECK(p13.refuted == 0);
}

TEST_CASE("witness family display strings") {
  const SharpnessClaim& c = claim_for(1, Axis::CBar, LambdaRange::LeHalf1);
  CHECK(c.witness.display() == "(-lambda+delta+3)K_(lambda-1) + K_(-lambda+delta+2)");
}
