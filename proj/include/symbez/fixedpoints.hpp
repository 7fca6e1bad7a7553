#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symbez/exactnum.hpp"
#include "symbez/group.hpp"
#include "symbez/poly.hpp"
#include "symbez/upoly.hpp"

namespace symbez {

/// One coordinate of a pattern: constant + sum_j params[j] * a_j.
struct PatternCoord {
  Cyclo12 constant;
  std::vector<Cyclo12> params;
};

/// Points fixed by the representative of a subgroup class, written as an
/// affine-linear pattern in at most two parameters (a, c).
struct FixedPointFamily {
  /// 2 for the projective plane, 3 for projective space.
  int dimension = 2;
  /// Name of the subgroup class, as in subgroup_catalog(dimension + 1).
  std::string stabilizer;
  std::vector<PatternCoord> pattern;
  int num_params = 0;
  /// The trivial class: every point, no pattern.
  bool all_points = false;
  /// Whether points of the family can lie on a transverse intersection.
  bool admissible = false;
  /// Values of the single parameter where the point degenerates or gains symmetry.
  std::vector<Cyclo12> excluded;
  /// Pattern text, e.g. "[a:-a:-1:1]".
  std::string text;
  /// Why the family is excluded from transverse intersections (empty if admissible).
  std::string reason;

  const SubgroupClass& subgroup() const { return subgroup_class(dimension + 1, stabilizer); }
  bool is_isolated() const { return !all_points && num_params == 0; }
  /// Throws std::invalid_argument on a wrong parameter count or a degenerate point.
  ProjPointExact instantiate(std::span<const Cyclo12> params = {}) const;
  /// Parameters realizing p, if p belongs to the family (excluded values included).
  std::optional<std::vector<Cyclo12>> parameters_of(const ProjPointExact& p) const;
  /// Every coordinate as a polynomial in the first parameter. Requires num_params == 1.
  std::vector<UPoly> univariate_pattern() const;
};

/// The full catalog for the plane (dimension 2) or space (dimension 3),
/// including inadmissible families.
const std::vector<FixedPointFamily>& fixed_point_catalog(int dimension);
/// Families of one subgroup class.
std::vector<FixedPointFamily> catalog(int dimension, const std::string& class_name);
/// Isolated catalog points together with their whole orbits, sorted.
std::vector<ProjPointExact> catalog_special_points(int dimension, bool admissible_only = true);

struct CatalogCheck {
  std::string subgroup;
  std::string family;
  std::string property;
  bool ok = true;
  std::string detail;
};

struct CatalogReport {
  int dimension = 2;
  std::vector<CatalogCheck> checks;
  bool all_ok() const;
};

/// Machine check of the catalog. Soundness: sampled members are fixed by the
/// declared subgroup and admissibility agrees with pairwise-distinct
/// coordinates. Completeness: every fixed point of the representative
/// subgroup, found independently as a common eigenvector of the permutation
/// matrices over Q(zeta12), is a member of some family; where the fixed set is
/// finite the two sets coincide exactly.
CatalogReport verify_catalog_by_stabilizer(int dimension, std::uint64_t seed = 1);

/// Projectivized common eigenspaces of the representative subgroup, each as a
/// basis of vectors.
std::vector<std::vector<std::vector<Cyclo12>>> fixed_subspaces(const SubgroupClass& h);

std::vector<Cyclo12> gradient_at(const MultiPoly& f, const ProjPointExact& p);

/// Coefficients (l0, l1, l2) of the tangent line l0 X + l1 Y + l2 Z = 0,
/// scaled so the first nonzero coefficient is 1. Throws std::invalid_argument
/// if f does not vanish at p and std::domain_error if p is singular on V(f).
std::vector<Cyclo12> tangent_line_p2(const MultiPoly& f, const ProjPointExact& p);

/// Rank of a matrix over Q(zeta12).
int exact_rank(std::vector<std::vector<Cyclo12>> rows);

enum class ObstructionKind { kNone, kSingularPoint, kSharedTangent, kRankDrop };

/// Exact certificate that the intersection at `point` is not transverse.
struct Obstruction {
  ObstructionKind kind = ObstructionKind::kNone;
  ProjPointExact point;
  /// Index of the input singular at the point (kSingularPoint).
  int singular_index = -1;
  /// Common tangent line (kSharedTangent).
  std::vector<Cyclo12> line;
  /// Gradients of the inputs at the point, one row per input.
  std::vector<std::vector<Cyclo12>> jacobian;
  int jacobian_rank = 0;
  bool repeated_coordinates = false;

  bool present() const { return kind != ObstructionKind::kNone; }
  /// "none", "singular_point", "shared_tangent" or "rank_drop".
  std::string kind_name() const;
  std::string to_string() const;
};

/// Requires one input fewer than the number of coordinates, all vanishing at
/// p (std::invalid_argument otherwise).
Obstruction obstruction(const ProjPointExact& p, std::span<const MultiPoly> fs);

/// Result of restricting inputs to a one-parameter family.
struct FamilyRoots {
  bool identically_zero = false;
  /// Monic gcd of the restrictions (zero when identically zero).
  UPoly gcd;
  /// Exactly identified roots of the gcd, excluded values removed.
  std::vector<Cyclo12> exact;
  /// Roots that could not be identified in Q(zeta12).
  std::vector<ComplexApprox> numeric;
};

FamilyRoots restricted_family_roots(std::span<const MultiPoly> fs, const FixedPointFamily& family,
                                    long precision_bits = kDefaultPrecisionBits);

struct FamilyMembership {
  FixedPointFamily family;
  /// Every member lies on V(f).
  bool entire = false;
  /// Members on V(f) that are known exactly.
  std::vector<ProjPointExact> points;
  /// Parameter values of those members, for one-parameter families.
  std::vector<Cyclo12> parameters;
};

/// Admissible families meeting V(f).
std::vector<FamilyMembership> special_point_membership(const MultiPoly& f);

}  // namespace symbez
