#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symbez/group.hpp"
#include "symbez/solver.hpp"

namespace symbez {

enum class Verdict { kPass, kFail, kInconclusive };

std::string verdict_name(Verdict v);

struct VerifyOptions {
  SolveOptions solve;
  /// de cap for the plane.
  int max_product_p2 = 30;
  /// d1 d2 d3 cap for space.
  int max_product_p3 = 24;
  /// Rejected trials are redrawn until this many draws per requested trial.
  int resample_factor = 5;
  int coeff_bound = 10;
};

/// One sampled instance and what became of it.
struct TrialOutcome {
  int index = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> inputs;
  /// "transverse", "not_transverse", "undetermined", "common_factor" or "error".
  std::string status;
  std::string orbit_type;
  int real_count = 0;
  /// Obstruction kind and description, when one was certified.
  std::string obstruction;
  /// Counted towards the verdict (rejected trials are recorded but not counted).
  bool counted = false;
  /// Agrees with the theorem under test.
  bool ok = true;
  /// Real-point bound check on transverse trials with real inputs.
  std::optional<bool> real_ok;
  std::string note;
};

struct VerificationRun {
  std::string theorem;
  int dimension = 2;
  std::vector<int> degrees;
  int trials_requested = 0;
  std::uint64_t seed = 0;
  long precision_bits = kDefaultPrecisionBits;
  std::vector<TrialOutcome> trials;
  Verdict verdict = Verdict::kInconclusive;
  int passed = 0;
  int failed = 0;
  int rejected = 0;
  /// Passed because no instance satisfying the hypotheses exists.
  bool vacuous = false;
  std::string summary;

  int transverse_count() const;
};

struct CheckResult {
  bool ok = true;
  std::vector<std::string> reasons;
};

/// Orbit type forced in the plane for transverse curves of degrees d and e,
/// or nullopt when no transverse intersection exists (de = 1 mod 3).
std::optional<OrbitType> expected_orbit_type_p2(int d, int e);

/// Seeded trials of random symmetric pairs of degrees (d, e). Throws
/// CapExceededError when de exceeds options.max_product_p2.
VerificationRun verify_p2_table(int d, int e, int trials, std::uint64_t seed, const VerifyOptions& options = {});

/// Real-point count allowed for a transverse plane report with real inputs.
/// Throws std::invalid_argument if the report is not transverse or an input
/// has non-real coefficients.
CheckResult check_real_count_p2(const IntersectionReport& report);

/// d1 d2 d3 mod 12 is one of 0, 2, 6, 8.
bool p3_degree_congruence(int d1, int d2, int d3);

/// Necessary conditions on a transverse space report: admissible
/// stabilizers, at most one [S4/C4] and one [S4/C3] orbit, real count a
/// multiple of 12 carried by orbits with trivial or C2e stabilizer. Throws
/// std::invalid_argument if the report is not transverse.
CheckResult check_p3_constraints(const IntersectionReport& report);

/// Seeded trials in space; transverse trials must satisfy check_p3_constraints
/// and the degree congruence.
VerificationRun verify_p3(int d1, int d2, int d3, int trials, std::uint64_t seed, const VerifyOptions& options = {});

/// All transverse trials share one orbit type (at least two needed for a
/// non-vacuous pass). In the plane, cells with no transverse intersections
/// pass when every trial is non-transverse.
VerificationRun orbit_type_independence(int dimension, const std::vector<int>& degrees, int trials, std::uint64_t seed,
                                        const VerifyOptions& options = {});

}  // namespace symbez
