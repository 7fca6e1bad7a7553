#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symbez/fixedpoints.hpp"
#include "symbez/group.hpp"
#include "symbez/poly.hpp"

namespace symbez {

struct SolveOptions {
  long precision_bits = kDefaultPrecisionBits;
  /// Failed solves are retried at doubled precision up to this bound.
  long max_precision_bits = 512;
  double match_tolerance = kDefaultMatchTolerance;
  /// Points whose jacobian_score falls below this are not certified transverse.
  double transversality_threshold = 1e-6;
  double cluster_radius = 1e-6;
  /// Seeds the random change of coordinates.
  std::uint64_t seed = 0;
  /// Cap on d1*d2*d3 for solve_p3.
  int max_product = 24;
};

enum class Transversality { kTransverse, kNotTransverse, kUndetermined };

std::string transversality_name(Transversality t);

struct IntersectionPoint {
  ProjPointNumeric numeric;
  /// Set when the point was certified exactly (every input vanishes there).
  std::optional<ProjPointExact> exact;
  int multiplicity = 1;
  /// max_i |f_i(p)| / |f_i|_1 at the unit-norm representative.
  double residual = 0.0;
  double jacobian_score = 0.0;
  bool is_real = false;
  std::string stabilizer;
  int orbit_id = 0;
};

struct IntersectionReport {
  /// 2 or 3.
  int dimension = 2;
  std::vector<MultiPoly> inputs;
  std::vector<int> degrees;
  std::vector<IntersectionPoint> points;
  OrbitType orbit_type;
  Transversality transversality = Transversality::kUndetermined;
  bool transverse = false;
  /// First exact non-transversality certificate found at a solved point.
  std::optional<Obstruction> obstruction;
  int real_count = 0;
  int bezout_count = 0;
  /// False when the multiplicities found do not add up to the Bezout count.
  bool complete = true;
  long precision_bits = kDefaultPrecisionBits;

  int multiplicity_sum() const;
};

/// Determinant of the Sylvester matrix of f and g in `var`, by fraction-free
/// (Bareiss) elimination. Throws std::invalid_argument on a zero input.
MultiPoly sylvester_resultant(const MultiPoly& f, const MultiPoly& g, int var);

/// Smallest singular value of the dehomogenized Jacobian at p (chart of the
/// largest coordinate) after scaling each gradient row to unit length.
double jacobian_score(std::span<const MultiPoly> fs, const ProjPointNumeric& p);

/// Throws std::invalid_argument for inputs that are not symmetric forms in 3
/// variables, CommonFactorError if they share a component and NumericalError
/// if no precision up to max_precision_bits gives a consistent answer.
IntersectionReport solve_p2(const MultiPoly& f, const MultiPoly& g, const SolveOptions& options = {});

/// As solve_p2 for three symmetric forms in 4 variables. Throws
/// CapExceededError if the product of the degrees exceeds options.max_product.
/// Candidates that cannot be assembled into a full Bezout count leave the
/// report flagged incomplete.
IntersectionReport solve_p3(const MultiPoly& f1, const MultiPoly& f2, const MultiPoly& f3,
                            const SolveOptions& options = {});

}  // namespace symbez
