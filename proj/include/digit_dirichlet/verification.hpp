#ifndef DIGIT_DIRICHLET_VERIFICATION_HPP
#define DIGIT_DIRICHLET_VERIFICATION_HPP

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace digit_dirichlet {

/// Outcome of one verification criterion.
struct CriterionOutcome {
  bool passed = false;
  std::string detail;  // measured numbers, for the report line
};

/// One entry of the verification suite. run(tol_scale) multiplies every
/// pass/fail threshold by tol_scale (1.0 = the published tolerances).
///
/// infeasible_note marks a criterion whose stated tolerance is provably
/// unattainable (the note says why); it still runs and reports its honest
/// FAIL, but regression gating treats that outcome as expected.
struct Criterion {
  int index = 0;
  std::string name;
  std::string group;  // filter key for --only (oracles, residues, delange, ...)
  std::function<CriterionOutcome(double tol_scale)> run;
  std::string infeasible_note;
  double budget_seconds = 600.0;  // stated runtime cap; exceeding it fails
};

const std::vector<Criterion>& verification_criteria();

struct VerifyReport {
  int total = 0;
  int failures = 0;           // every criterion that measured FAIL
  int expected_failures = 0;  // the documented-infeasible subset of those
  int surprises = 0;          // documented-infeasible criteria that PASSed
};

/// Runs criteria whose group or name contains `only` (empty = all), printing
/// one PASS/FAIL line each to `os`. threads > 1 fans criteria out while
/// keeping the output ordered by index.
VerifyReport run_verification(std::ostream& os, const std::string& only,
                              double tol_scale, int threads);

}  // namespace digit_dirichlet

#endif
