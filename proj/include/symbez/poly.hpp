#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symbez/exactnum.hpp"
#include "symbez/permutation.hpp"

namespace symbez {

inline constexpr int kMaxVars = 4;

/// Exponents of X0..X3; entries past num_vars stay zero.
using ExponentVector = std::array<int, kMaxVars>;

int total_degree(const ExponentVector& e);

/// Graded lexicographic order: total degree first, then X0 > X1 > ...
struct GrlexLess {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

/// Sparse polynomial in 3 or 4 variables with coefficients in Q(zeta12).
/// No stored coefficient is zero.
class MultiPoly {
 public:
  using Terms = std::map<ExponentVector, Cyclo12, GrlexLess>;

  explicit MultiPoly(int num_vars = 3);
  static MultiPoly constant(int num_vars, const Cyclo12& c);
  static MultiPoly variable(int num_vars, int index);
  static MultiPoly monomial(int num_vars, const ExponentVector& e, const Cyclo12& c);

  int num_vars() const { return num_vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Total degree; empty for the zero polynomial.
  std::optional<int> degree() const;
  bool is_homogeneous() const;
  /// Largest exponent of `var`; -1 for the zero polynomial.
  int degree_in(int var) const;
  /// Graded-lex leading term. Precondition: nonzero.
  const Terms::value_type& leading_term() const { return *terms_.rbegin(); }

  Cyclo12 coefficient(const ExponentVector& e) const;
  void add_term(const ExponentVector& e, const Cyclo12& c);

  /// Coefficient-wise complex conjugation.
  MultiPoly conj() const;
  /// True when every coefficient is real.
  bool has_real_coefficients() const;
  /// Sum of coefficient magnitudes (double precision).
  double coefficient_norm1() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Cyclo12& s);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Cyclo12& s) { return a *= s; }
  friend MultiPoly operator*(const Cyclo12& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator-(MultiPoly a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(unsigned e) const;

  /// Human form using X,Y,Z,W, highest term first.
  std::string to_string() const;

 private:
  void check_compatible(const MultiPoly& o) const;

  int num_vars_;
  Terms terms_;
};

/// Polynomial in e1..en stored as a MultiPoly whose variable k-1 stands for
/// e_k. The weight of e_k is k.
struct ElemBasisPoly {
  MultiPoly poly;

  int num_vars() const { return poly.num_vars(); }
  /// Largest weighted degree; empty for zero.
  std::optional<int> weighted_degree() const;
  bool is_weighted_homogeneous() const;
  std::string to_string() const;
  friend bool operator==(const ElemBasisPoly&, const ElemBasisPoly&) = default;
};

// ---------------------------------------------------------------------------
// Ring operations. Mismatched variable counts throw std::invalid_argument.

MultiPoly poly_add(const MultiPoly& f, const MultiPoly& g);
MultiPoly poly_sub(const MultiPoly& f, const MultiPoly& g);
MultiPoly poly_mul(const MultiPoly& f, const MultiPoly& g);
MultiPoly poly_scale(const MultiPoly& f, const Cyclo12& s);

MultiPoly partial_derivative(const MultiPoly& f, int var);
/// sum_i X_i df/dX_i - deg(f) f; zero for homogeneous f.
/// Throws std::invalid_argument on non-homogeneous input.
MultiPoly euler_residual(const MultiPoly& f);
/// Substitutes X_i -> X_{sigma(i)}.
MultiPoly apply_permutation(const MultiPoly& f, const Permutation& sigma);
bool is_symmetric(const MultiPoly& f);

/// k-th elementary symmetric polynomial in n variables (e_0 = 1).
MultiPoly elementary_symmetric(int num_vars, int k);
/// Throws std::invalid_argument on non-symmetric input.
ElemBasisPoly to_elementary_basis(const MultiPoly& f);
MultiPoly from_elementary_basis(const ElemBasisPoly& p);

/// Sets X_var = 1. The variable stays in the ring but no longer occurs.
MultiPoly dehomogenize(const MultiPoly& f, int var);

/// Exact quotient f / g. Throws std::domain_error if g is zero or does not divide f.
MultiPoly divide_exact(const MultiPoly& f, const MultiPoly& g);

/// Coefficients of f viewed as a polynomial in `var`: result[k] multiplies var^k.
std::vector<MultiPoly> coefficients_in(const MultiPoly& f, int var);

/// Random symmetric form of degree D built on the elementary basis with integer
/// coefficients in [-coeff_bound, coeff_bound]; never zero; deterministic in seed.
MultiPoly random_symmetric(int num_vars, int degree, std::uint64_t seed, int coeff_bound = 10);
/// e-monomial exponent vectors (k1..kn) with sum_j j*k_j = weight.
std::vector<ExponentVector> weighted_monomials(int num_vars, int weight);

// ---------------------------------------------------------------------------
// Evaluation

/// Generic evaluation into any ring T. `lift` maps a Cyclo12 coefficient to T.
template <class T, class Lift>
T evaluate_with(const MultiPoly& f, std::span<const T> point, const T& zero, const T& one, Lift lift) {
  const int n = f.num_vars();
  std::array<std::vector<T>, kMaxVars> powers;
  for (int v = 0; v < n; ++v) {
    int max_e = 0;
    for (const auto& [e, c] : f.terms()) max_e = std::max(max_e, e[static_cast<size_t>(v)]);
    auto& pw = powers[static_cast<size_t>(v)];
    pw.reserve(static_cast<size_t>(max_e) + 1);
    pw.push_back(one);
    for (int k = 1; k <= max_e; ++k) pw.push_back(pw.back() * point[static_cast<size_t>(v)]);
  }
  T acc = zero;
  for (const auto& [e, c] : f.terms()) {
    T term = lift(c);
    for (int v = 0; v < n; ++v) {
      const int k = e[static_cast<size_t>(v)];
      if (k > 0) term = term * powers[static_cast<size_t>(v)][static_cast<size_t>(k)];
    }
    acc = acc + term;
  }
  return acc;
}

/// Throws std::invalid_argument when the point length differs from num_vars.
Cyclo12 evaluate_exact(const MultiPoly& f, std::span<const Cyclo12> point);
ComplexApprox evaluate_numeric(const MultiPoly& f, std::span<const ComplexApprox> point);
/// Substitutes polynomials for the variables (all in the same ring).
MultiPoly compose(const MultiPoly& f, std::span<const MultiPoly> substitution);

}  // namespace symbez
