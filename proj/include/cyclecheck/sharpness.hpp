#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclecheck/family.hpp"
#include "cyclecheck/statements.hpp"

namespace cyc {

enum class Axis { C, CBar, PBar, Kappa, Delta };

std::string_view to_string(Axis a);

/// How a sharpness claim is certified:
///  - EqualityOfConclusion: the witness satisfies every original hypothesis
///    and the conclusion holds with equality (the bound cannot be improved).
///  - WeakenedHypothesisFails: the witness satisfies the hypothesis weakened
///    by exactly one unit (or sits exactly on the Eq.(2) degree boundary)
///    while the conclusion fails.
enum class SharpnessMode { EqualityOfConclusion, WeakenedHypothesisFails };

/// Validity range of a claim row in lambda, compared exactly:
///   LeHalf1: 2*lambda <= delta+1     GeHalf1: 2*lambda >= delta+1
///   LeHalf2: 2*lambda <= delta+2     GeHalf2: 2*lambda >= delta+2
enum class LambdaRange { All, LeHalf1, GeHalf1, LeHalf2, GeHalf2 };

bool lambda_in_range(LambdaRange r, int lambda, int delta);
std::string to_string(LambdaRange r);

/// Witness family with block/hub orders affine in (lambda, delta):
/// m = m0 + mL*lambda + mD*delta, t likewise.
struct WitnessFamily {
  int m0, mL, mD;
  int t0, tL, tD;

  FamilySpec at(int lambda, int delta) const {
    return {m0 + mL * lambda + mD * delta, t0 + tL * lambda + tD * delta};
  }
  std::string display() const;
};

/// One row of the proposition catalog: statement, sharpness axis, witness
/// family and the lambda range over which the claim is asserted.
struct SharpnessClaim {
  int proposition;          // 1..18
  const char* statement_id;
  Axis axis;
  WitnessFamily witness;
  LambdaRange range;
  SharpnessMode mode;
};

/// The full catalog (several rows per proposition; full-range claims that
/// are certified by two half-range witnesses appear as two rows).
const std::vector<SharpnessClaim>& sharpness_claims();

struct DegeneracyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Witness for (statement, axis) at the given lambda, delta. Throws
/// std::out_of_range when lambda is outside every matching row's range and
/// DegeneracyError when the witness would need an empty block or hub.
FamilySpec proposition_witness(std::string_view statement_id, Axis axis, int lambda, int delta);

enum class SharpnessVerdict { Confirmed, Refuted, Degenerate };

std::string_view to_string(SharpnessVerdict v);

struct SharpnessOutcome {
  SharpnessVerdict verdict = SharpnessVerdict::Refuted;
  std::optional<FamilySpec> witness;
  std::optional<FamilyParams> params;  // validated exact parameters
  std::string detail;
};

/// Certifies one claim at (lambda, delta): builds the witness, validates the
/// closed-form parameters against the exact solvers, and checks the claim's
/// mode. Any solver/prediction mismatch is REFUTED, never patched.
SharpnessOutcome verify_sharpness(const SharpnessClaim& claim, int lambda, int delta);

struct SweepRow {
  int proposition;
  std::string statement_id;
  Axis axis;
  int lambda;
  int delta;
  SharpnessOutcome outcome;
};

struct SweepReport {
  std::vector<SweepRow> rows;
  int confirmed = 0;
  int degenerate = 0;
  int refuted = 0;
};

/// Runs verify_sharpness for every in-range cell with delta <= delta_max
/// (optionally one proposition only).
SweepReport sharpness_sweep(int delta_max, std::optional<int> proposition = std::nullopt);

}  // namespace cyc
