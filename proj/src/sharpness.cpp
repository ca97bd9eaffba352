#include "cyclecheck/sharpness.hpp"

#include <map>
#include <sstream>

namespace cyc {

namespace {

// The seven witness shapes used by the propositions, as (m, t) affine in
// (lambda, delta):
//   w1 = (delta-lambda+3)K_(lambda-1) + K_(delta-lambda+2)
//   w2 = lambda K_(delta-lambda+2) + K_(lambda-1)
//   w3 = (delta-lambda+2)K_lambda + K_(delta-lambda+1)
//   w4 = (lambda+2)K_(delta-lambda) + K_(lambda+1)
//   w5 = (delta-lambda+1)K_(lambda+1) + K_(delta-lambda)
//   w6 = (lambda+1)K_(delta-lambda+1) + K_lambda
//   w7 = (delta-lambda+4)K_(lambda-2) + K_(delta-lambda+3)
constexpr WitnessFamily w1{-1, 1, 0, 2, -1, 1};
constexpr WitnessFamily w2{2, -1, 1, -1, 1, 0};
constexpr WitnessFamily w3{0, 1, 0, 1, -1, 1};
constexpr WitnessFamily w4{0, -1, 1, 1, 1, 0};
constexpr WitnessFamily w5{1, 1, 0, 0, -1, 1};
constexpr WitnessFamily w6{1, -1, 1, 0, 1, 0};
constexpr WitnessFamily w7{-2, 1, 0, 3, -1, 1};

constexpr auto kEq = SharpnessMode::EqualityOfConclusion;
constexpr auto kWeak = SharpnessMode::WeakenedHypothesisFails;

}  // namespace

std::string_view to_string(Axis a) {
  switch (a) {
    case Axis::C: return "c";
    case Axis::CBar: return "c_bar";
    case Axis::PBar: return "p_bar";
    case Axis::Kappa: return "kappa";
    case Axis::Delta: return "delta";
  }
  return "?";
}

std::string_view to_string(SharpnessVerdict v) {
  switch (v) {
    case SharpnessVerdict::Confirmed: return "CONFIRMED";
    case SharpnessVerdict::Refuted: return "REFUTED";
    case SharpnessVerdict::Degenerate: return "DEGENERATE";
  }
  return "?";
}

bool lambda_in_range(LambdaRange r, int lambda, int delta) {
  switch (r) {
    case LambdaRange::All: return true;
    case LambdaRange::LeHalf1: return 2 * lambda <= delta + 1;
    case LambdaRange::GeHalf1: return 2 * lambda >= delta + 1;
    case LambdaRange::LeHalf2: return 2 * lambda <= delta + 2;
    case LambdaRange::GeHalf2: return 2 * lambda >= delta + 2;
  }
  return false;
}

std::string to_string(LambdaRange r) {
  switch (r) {
    case LambdaRange::All: return "1 <= lambda <= delta";
    case LambdaRange::LeHalf1: return "lambda <= (delta+1)/2";
    case LambdaRange::GeHalf1: return "lambda >= (delta+1)/2";
    case LambdaRange::LeHalf2: return "lambda <= (delta+2)/2";
    case LambdaRange::GeHalf2: return "lambda >= (delta+2)/2";
  }
  return "?";
}

namespace {

std::string affine_str(int c0, int cL, int cD) {
  std::ostringstream out;
  bool first = true;
  auto term = [&](int coef, const char* sym) {
    if (coef == 0) return;
    if (!first && coef > 0) out << "+";
    if (coef == -1) out << "-";
    else if (coef != 1) out << coef << "*";
    out << sym;
    first = false;
  };
  term(cL, "lambda");
  term(cD, "delta");
  if (c0 != 0 || first) {
    if (!first && c0 > 0) out << "+";
    out << c0;
  }
  return out.str();
}

}  // namespace

std::string WitnessFamily::display() const {
  std::ostringstream out;
  out << "(" << affine_str(t0 + 1, tL, tD) << ")K_(" << affine_str(m0, mL, mD) << ") + K_("
      << affine_str(t0, tL, tD) << ")";
  return out.str();
}

const std::vector<SharpnessClaim>& sharpness_claims() {
  using R = LambdaRange;
  static const std::vector<SharpnessClaim> claims = {
      // Proposition 1: Thm-A
      {1, "Thm-A", Axis::CBar, w1, R::LeHalf1, kEq},
      {1, "Thm-A", Axis::Kappa, w2, R::LeHalf1, kWeak},
      {1, "Thm-A", Axis::Delta, w3, R::LeHalf1, kWeak},
      // Proposition 2: Thm-3
      {2, "Thm-3", Axis::CBar, w4, R::GeHalf1, kEq},
      {2, "Thm-3", Axis::Kappa, w5, R::GeHalf1, kWeak},
      {2, "Thm-3", Axis::Delta, w3, R::GeHalf1, kWeak},
      // Proposition 3: Thm-1
      {3, "Thm-1", Axis::CBar, w4, R::GeHalf1, kEq},
      {3, "Thm-1", Axis::Kappa, w2, R::LeHalf1, kWeak},
      {3, "Thm-1", Axis::Delta, w6, R::All, kWeak},
      // Proposition 4: Thm-2
      {4, "Thm-2", Axis::CBar, w1, R::LeHalf1, kEq},
      {4, "Thm-2", Axis::Kappa, w5, R::GeHalf1, kWeak},
      {4, "Thm-2", Axis::Delta, w3, R::All, kWeak},
      // Proposition 5: Thm-C (Thm-A below the midpoint, Thm-1 above)
      {5, "Thm-C", Axis::CBar, w1, R::LeHalf1, kEq},
      {5, "Thm-C", Axis::CBar, w4, R::GeHalf1, kEq},
      {5, "Thm-C", Axis::Kappa, w2, R::LeHalf1, kWeak},
      {5, "Thm-C", Axis::Delta, w3, R::LeHalf1, kWeak},
      {5, "Thm-C", Axis::Delta, w6, R::GeHalf1, kWeak},
      // Proposition 6: Thm-D (Thm-A below, Thm-2 above)
      {6, "Thm-D", Axis::CBar, w1, R::LeHalf1, kEq},
      {6, "Thm-D", Axis::Kappa, w2, R::LeHalf1, kWeak},
      {6, "Thm-D", Axis::Kappa, w5, R::GeHalf1, kWeak},
      {6, "Thm-D", Axis::Delta, w3, R::All, kWeak},
      // Proposition 7: Thm-5 (Thm-1 below, Thm-3 above)
      {7, "Thm-5", Axis::CBar, w4, R::GeHalf1, kEq},
      {7, "Thm-5", Axis::Kappa, w2, R::LeHalf1, kWeak},
      {7, "Thm-5", Axis::Kappa, w5, R::GeHalf1, kWeak},
      {7, "Thm-5", Axis::Delta, w6, R::LeHalf1, kWeak},
      {7, "Thm-5", Axis::Delta, w3, R::GeHalf1, kWeak},
      // Proposition 8: Thm-4 (Thm-2 below, Thm-3 above)
      {8, "Thm-4", Axis::CBar, w1, R::LeHalf1, kEq},
      {8, "Thm-4", Axis::CBar, w4, R::GeHalf1, kEq},
      {8, "Thm-4", Axis::Kappa, w5, R::GeHalf1, kWeak},
      {8, "Thm-4", Axis::Delta, w3, R::All, kWeak},
      // Proposition 9: Thm-E (Thm-A below, Thm-3 above)
      {9, "Thm-E", Axis::CBar, w1, R::LeHalf1, kEq},
      {9, "Thm-E", Axis::CBar, w4, R::GeHalf1, kEq},
      {9, "Thm-E", Axis::Kappa, w2, R::LeHalf1, kWeak},
      {9, "Thm-E", Axis::Kappa, w5, R::GeHalf1, kWeak},
      {9, "Thm-E", Axis::Delta, w3, R::All, kWeak},
      // Proposition 10: Thm-B
      {10, "Thm-B", Axis::C, w1, R::LeHalf2, kEq},
      {10, "Thm-B", Axis::Kappa, w2, R::LeHalf2, kWeak},
      {10, "Thm-B", Axis::CBar, w7, R::LeHalf2, kWeak},
      // Proposition 11: Thm-8
      {11, "Thm-8", Axis::C, w1, R::GeHalf2, kEq},
      {11, "Thm-8", Axis::Kappa, w3, R::GeHalf2, kWeak},
      {11, "Thm-8", Axis::CBar, w4, R::GeHalf2, kWeak},
      // Proposition 12: Thm-6
      {12, "Thm-6", Axis::C, w6, R::All, kEq},
      {12, "Thm-6", Axis::Kappa, w2, R::LeHalf2, kWeak},
      {12, "Thm-6", Axis::CBar, w4, R::GeHalf2, kWeak},
      // Proposition 13: Thm-7
      {13, "Thm-7", Axis::C, w1, R::All, kEq},
      {13, "Thm-7", Axis::Kappa, w3, R::GeHalf2, kWeak},
      {13, "Thm-7", Axis::CBar, w7, R::LeHalf2, kWeak},
      // Proposition 14: Thm-F (Thm-B below the midpoint, Thm-6 above)
      {14, "Thm-F", Axis::C, w1, R::LeHalf2, kEq},
      {14, "Thm-F", Axis::C, w6, R::GeHalf2, kEq},
      {14, "Thm-F", Axis::Kappa, w2, R::LeHalf2, kWeak},
      {14, "Thm-F", Axis::CBar, w7, R::LeHalf2, kWeak},
      {14, "Thm-F", Axis::CBar, w4, R::GeHalf2, kWeak},
      // Proposition 15: Thm-G (Thm-B below, Thm-7 above)
      {15, "Thm-G", Axis::C, w1, R::All, kEq},
      {15, "Thm-G", Axis::Kappa, w2, R::LeHalf2, kWeak},
      {15, "Thm-G", Axis::Kappa, w3, R::GeHalf2, kWeak},
      {15, "Thm-G", Axis::CBar, w7, R::LeHalf2, kWeak},
      // Proposition 16: Thm-10 (Thm-6 below, Thm-8 above)
      {16, "Thm-10", Axis::C, w6, R::LeHalf2, kEq},
      {16, "Thm-10", Axis::C, w1, R::GeHalf2, kEq},
      {16, "Thm-10", Axis::Kappa, w2, R::LeHalf2, kWeak},
      {16, "Thm-10", Axis::Kappa, w3, R::GeHalf2, kWeak},
      {16, "Thm-10", Axis::CBar, w4, R::GeHalf2, kWeak},
      // Proposition 17: Thm-9 (Thm-7 below, Thm-8 above)
      {17, "Thm-9", Axis::C, w1, R::All, kEq},
      {17, "Thm-9", Axis::Kappa, w3, R::GeHalf2, kWeak},
      {17, "Thm-9", Axis::CBar, w7, R::LeHalf2, kWeak},
      {17, "Thm-9", Axis::CBar, w4, R::GeHalf2, kWeak},
      // Proposition 18: Thm-H (Thm-B below, Thm-8 above)
      {18, "Thm-H", Axis::C, w1, R::All, kEq},
      {18, "Thm-H", Axis::Kappa, w2, R::LeHalf2, kWeak},
      {18, "Thm-H", Axis::Kappa, w3, R::GeHalf2, kWeak},
      {18, "Thm-H", Axis::CBar, w7, R::LeHalf2, kWeak},
      {18, "Thm-H", Axis::CBar, w4, R::GeHalf2, kWeak},
  };
  return claims;
}

FamilySpec proposition_witness(std::string_view statement_id, Axis axis, int lambda, int delta) {
  bool any_row = false;
  for (const SharpnessClaim& claim : sharpness_claims()) {
    if (claim.statement_id != statement_id || claim.axis != axis) continue;
    any_row = true;
    if (!lambda_in_range(claim.range, lambda, delta)) continue;
    FamilySpec spec = claim.witness.at(lambda, delta);
    if (spec.m < 1 || spec.t < 1) {
      std::ostringstream msg;
      msg << "degenerate witness for " << statement_id << "/" << to_string(axis) << " at lambda="
          << lambda << ", delta=" << delta << ": " << claim.witness.display() << " gives m="
          << spec.m << ", t=" << spec.t << " (proposition vacuous at this lambda)";
      throw DegeneracyError(msg.str());
    }
    return spec;
  }
  std::ostringstream msg;
  if (any_row)
    msg << "lambda=" << lambda << " outside the claimed range for " << statement_id << "/"
        << to_string(axis) << " at delta=" << delta;
  else
    msg << "no sharpness claim for " << statement_id << "/" << to_string(axis);
  throw std::out_of_range(msg.str());
}

namespace {

struct FamilyCache {
  std::map<std::pair<int, int>, std::optional<std::string>> validated;

  std::optional<std::string> validate(FamilySpec spec) {
    auto key = std::make_pair(spec.m, spec.t);
    auto it = validated.find(key);
    if (it == validated.end()) it = validated.emplace(key, cross_validate_family(spec)).first;
    return it->second;
  }
};

SharpnessOutcome verify_claim(const SharpnessClaim& claim, int lambda, int delta,
                              FamilyCache* cache) {
  if (lambda < 1 || lambda > delta)
    throw std::out_of_range("verify_sharpness: need 1 <= lambda <= delta");
  if (!lambda_in_range(claim.range, lambda, delta))
    throw std::out_of_range("verify_sharpness: lambda outside the claim's range");

  SharpnessOutcome outcome;
  FamilySpec spec = claim.witness.at(lambda, delta);
  if (spec.m < 1 || spec.t < 1) {
    outcome.verdict = SharpnessVerdict::Degenerate;
    std::ostringstream msg;
    msg << claim.witness.display() << " gives m=" << spec.m << ", t=" << spec.t
        << "; proposition vacuous at lambda=" << lambda;
    outcome.detail = msg.str();
    return outcome;
  }
  outcome.witness = spec;

  // closed forms must agree with the exact solvers before anything is trusted
  FamilyCache local;
  std::optional<std::string> mismatch = (cache ? *cache : local).validate(spec);
  if (mismatch) {
    outcome.verdict = SharpnessVerdict::Refuted;
    outcome.detail = "closed-form validation failed: " + *mismatch;
    return outcome;
  }
  FamilyParams fam = predict_params(spec);
  outcome.params = fam;
  if (fam.delta != delta) {
    outcome.verdict = SharpnessVerdict::Refuted;
    outcome.detail = "witness minimum degree " + std::to_string(fam.delta) +
                     " does not match target delta " + std::to_string(delta);
    return outcome;
  }

  const Statement& stmt = find_statement(claim.statement_id);
  EvalContext ctx = EvalContext::scalars(fam.n, fam.delta, lambda);
  ctx.kappa = fam.kappa;
  const Value kappa_bound = stmt.kappa_hyp.evaluate(ctx);
  const Value conclusion_bound = stmt.conclusion.evaluate(ctx);
  const Value remainder_bound = stmt.remainder_hyp ? stmt.remainder_hyp->evaluate(ctx)
                                                   : Value::integer(0);
  const bool forward = stmt.kind == StatementKind::Forward;
  const Value kappa_val = Value::integer(fam.kappa);
  const Value cbar_val = Value::integer(fam.c_bar);
  const Value c_val = Value::integer(fam.c);

  std::ostringstream why;
  auto refute = [&](const std::string& what) {
    outcome.verdict = SharpnessVerdict::Refuted;
    why << what << " [witness " << claim.witness.display() << " at lambda=" << lambda
        << ", delta=" << delta << ": n=" << fam.n << ", kappa=" << fam.kappa << ", c=" << fam.c
        << ", c_bar=" << fam.c_bar << "]";
    outcome.detail = why.str();
    return outcome;
  };

  const bool degree_ok = !forward || stmt.degree_hyp != DegreeHyp::Eq1 ||
                         degree_condition_holds(fam.n, fam.delta, lambda);

  if (claim.mode == SharpnessMode::EqualityOfConclusion) {
    if (kappa_val < kappa_bound) return refute("connectivity hypothesis fails on witness");
    if (forward) {
      if (!degree_ok) return refute("degree hypothesis fails on witness");
      if (!(cbar_val == conclusion_bound)) return refute("conclusion not met with equality");
    } else {
      if (cbar_val < remainder_bound) return refute("remainder hypothesis fails on witness");
      if (!(c_val == conclusion_bound)) return refute("conclusion not met with equality");
    }
    outcome.verdict = SharpnessVerdict::Confirmed;
    return outcome;
  }

  switch (claim.axis) {
    case Axis::Kappa: {
      if (!(kappa_val == kappa_bound - Value::integer(1)))
        return refute("witness connectivity is not exactly one below the bound");
      if (forward) {
        if (!degree_ok) return refute("degree hypothesis fails on witness");
        if (!(cbar_val > conclusion_bound)) return refute("conclusion unexpectedly holds");
      } else {
        if (cbar_val < remainder_bound) return refute("remainder hypothesis fails on witness");
        if (!(c_val < conclusion_bound)) return refute("conclusion unexpectedly holds");
      }
      break;
    }
    case Axis::CBar:
    case Axis::PBar: {
      if (forward) return refute("remainder-axis weakening applies to reverse statements only");
      if (!(cbar_val == remainder_bound - Value::integer(1)))
        return refute("witness remainder is not exactly one below the bound");
      if (kappa_val < kappa_bound) return refute("connectivity hypothesis fails on witness");
      if (!(c_val < conclusion_bound)) return refute("conclusion unexpectedly holds");
      break;
    }
    case Axis::Delta: {
      if (!forward) return refute("delta-axis weakening applies to forward statements only");
      if (!on_eq2_boundary(fam.n, fam.delta, lambda))
        return refute("witness not on the exact degree boundary");
      if (degree_condition_holds(fam.n, fam.delta, lambda))
        return refute("original degree condition unexpectedly holds");
      if (kappa_val < kappa_bound) return refute("connectivity hypothesis fails on witness");
      if (!(cbar_val > conclusion_bound)) return refute("conclusion unexpectedly holds");
      break;
    }
    case Axis::C:
      return refute("c-axis claims use equality mode");
  }
  outcome.verdict = SharpnessVerdict::Confirmed;
  return outcome;
}

}  // namespace

SharpnessOutcome verify_sharpness(const SharpnessClaim& claim, int lambda, int delta) {
  return verify_claim(claim, lambda, delta, nullptr);
}

SweepReport sharpness_sweep(int delta_max, std::optional<int> proposition) {
  if (delta_max < 2) throw std::invalid_argument("sharpness_sweep: delta_max must be >= 2");
  SweepReport report;
  FamilyCache cache;
  for (const SharpnessClaim& claim : sharpness_claims()) {
    if (proposition && claim.proposition != *proposition) continue;
    for (int delta = 1; delta <= delta_max; ++delta) {
      for (int lambda = 1; lambda <= delta; ++lambda) {
        if (!lambda_in_range(claim.range, lambda, delta)) continue;
        SweepRow row{claim.proposition, claim.statement_id, claim.axis, lambda, delta,
                     verify_claim(claim, lambda, delta, &cache)};
        switch (row.outcome.verdict) {
          case SharpnessVerdict::Confirmed: ++report.confirmed; break;
          case SharpnessVerdict::Degenerate: ++report.degenerate; break;
          case SharpnessVerdict::Refuted: ++report.refuted; break;
        }
        report.rows.push_back(std::move(row));
      }
    }
  }
  return report;
}

}  // namespace cyc
