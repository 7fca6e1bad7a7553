#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symbez/exactnum.hpp"
#include "symbez/permutation.hpp"

namespace symbez {

/// Default distance below which two numeric projective points are identified.
inline constexpr double kDefaultMatchTolerance = 1e-8;

/// One conjugacy class of subgroups of S3 (degree 3) or S4 (degree 4).
struct SubgroupClass {
  int degree = 3;
  /// ASCII name: Trivial, C2, C3, S3 for S3; Trivial, C2o, C2e, C4, K4n,
  /// K4, D8, C3, S3, A4, S4 for S4. K4n is the normal Klein subgroup.
  std::string name;
  std::vector<Permutation> generators;
  int order = 1;
  /// Position in the catalog; breaks ties between classes of equal order.
  int rank = 0;

  /// All elements of the representative subgroup, sorted.
  std::vector<Permutation> elements() const;

  friend bool operator==(const SubgroupClass& a, const SubgroupClass& b) {
    return a.degree == b.degree && a.name == b.name;
  }
};

/// "S3" or "S4". Throws std::invalid_argument for other degrees.
std::string group_name(int degree);
int group_order(int degree);
/// Every permutation of the group, in lexicographic order.
const std::vector<Permutation>& group_elements(int degree);

/// The 4 classes of S3 or the 11 classes of S4, each exactly once.
const std::vector<SubgroupClass>& subgroup_catalog(int degree);
/// Throws std::invalid_argument for unknown names.
const SubgroupClass& subgroup_class(int degree, const std::string& name);

/// Closure of a generating set under composition, sorted.
std::vector<Permutation> generate_subgroup(int degree, std::span<const Permutation> generators);

/// Identifies the conjugacy class from the order and the multiset of cycle
/// types. Throws std::invalid_argument if the elements do not form a subgroup.
SubgroupClass classify_subgroup(std::span<const Permutation> elements);

/// Projective point with coordinates in Q(zeta12), kept in canonical form:
/// the last nonzero coordinate equals 1.
class ProjPointExact {
 public:
  ProjPointExact() = default;
  /// Throws std::invalid_argument if every coordinate is zero.
  explicit ProjPointExact(std::vector<Cyclo12> coords);

  int size() const { return static_cast<int>(coords_.size()); }
  const std::vector<Cyclo12>& coords() const { return coords_; }
  const Cyclo12& operator[](int i) const { return coords_[static_cast<size_t>(i)]; }

  ProjPointExact conj() const;
  bool is_real() const;
  /// "[-1:1:0]" with parser-compatible coordinates.
  std::string to_string() const;

  friend bool operator==(const ProjPointExact& a, const ProjPointExact& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const ProjPointExact& a, const ProjPointExact& b);

 private:
  std::vector<Cyclo12> coords_;
};

/// Projective point with approximate complex coordinates, normalized to unit
/// Euclidean norm with the largest coordinate real and positive.
class ProjPointNumeric {
 public:
  ProjPointNumeric() = default;
  /// Throws NumericalError if the coordinates are (numerically) all zero.
  explicit ProjPointNumeric(std::vector<ComplexApprox> coords, double match_tolerance = kDefaultMatchTolerance);
  static ProjPointNumeric from_exact(const ProjPointExact& p, long precision_bits = kDefaultPrecisionBits,
                                     double match_tolerance = kDefaultMatchTolerance);

  int size() const { return static_cast<int>(coords_.size()); }
  const std::vector<ComplexApprox>& coords() const { return coords_; }
  const ComplexApprox& operator[](int i) const { return coords_[static_cast<size_t>(i)]; }
  double match_tolerance() const { return tol_; }
  long precision_bits() const;

  /// Largest 2x2 minor |p_i q_j - p_j q_i|; zero iff the points coincide.
  double distance(const ProjPointNumeric& o) const;
  bool matches(const ProjPointNumeric& o) const { return distance(o) < tol_; }

  ProjPointNumeric conj() const;
  /// Real up to the match tolerance.
  bool is_real() const;
  /// Affine coordinates after dividing by the last coordinate of largest
  /// index that is not tiny; used for display.
  std::vector<std::complex<double>> to_complex() const;
  std::string to_string(int digits = 12) const;

 private:
  std::vector<ComplexApprox> coords_;
  double tol_ = kDefaultMatchTolerance;
};

/// (sigma . p)_{sigma(i)} = p_i, then re-canonicalized.
ProjPointExact act(const Permutation& sigma, const ProjPointExact& p);
ProjPointNumeric act(const Permutation& sigma, const ProjPointNumeric& p);

struct Stabilizer {
  std::vector<Permutation> elements;
  SubgroupClass cls;
};

Stabilizer stabilizer(const ProjPointExact& p);
Stabilizer stabilizer(const ProjPointNumeric& p);

/// Distinct images of p, sorted for exact points.
std::vector<ProjPointExact> orbit(const ProjPointExact& p);
std::vector<ProjPointNumeric> orbit(const ProjPointNumeric& p);

/// Multiset of orbit classes [G/H].
class OrbitType {
 public:
  explicit OrbitType(int degree = 3) : degree_(degree) {}

  void add(const SubgroupClass& h, int multiplicity = 1);

  int degree() const { return degree_; }
  /// (class, multiplicity) sorted by decreasing stabilizer order.
  const std::vector<std::pair<SubgroupClass, int>>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  int orbit_count() const;
  /// Number of points: sum of multiplicity * |G| / |H|.
  int size() const;
  int multiplicity(const std::string& class_name) const;

  /// e.g. "[S3/C3] + [S3/C2]" or "2[S3] + [S3/C2]"; "0" when empty.
  std::string to_string() const;

  friend bool operator==(const OrbitType& a, const OrbitType& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  int degree_;
  std::vector<std::pair<SubgroupClass, int>> terms_;
};

/// Per-point orbit membership alongside the orbit type.
struct OrbitDecomposition {
  OrbitType type;
  /// orbit_id[k] for input point k; ids follow first appearance.
  std::vector<int> orbit_id;
  std::vector<SubgroupClass> stabilizers;
};

/// Throws NotClosedError when some image of an input point is missing.
/// Numeric input also throws NumericalError when matching is ambiguous.
OrbitDecomposition decompose_orbits_detailed(std::span<const ProjPointExact> points, int degree);
OrbitDecomposition decompose_orbits_detailed(std::span<const ProjPointNumeric> points, int degree);
OrbitType decompose_orbits(std::span<const ProjPointExact> points, int degree);
OrbitType decompose_orbits(std::span<const ProjPointNumeric> points, int degree);

}  // namespace symbez
