#pragma once

#include <string>
#include <utility>
#include <vector>

#include "symbez/exactnum.hpp"
#include "symbez/poly.hpp"

namespace symbez {

/// Dense univariate polynomial over Q(zeta12); coeffs()[k] multiplies t^k.
/// The leading stored coefficient is never zero.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Cyclo12> coeffs);
  static UPoly constant(const Cyclo12& c) { return UPoly({c}); }
  /// t - r
  static UPoly linear_root(const Cyclo12& r) { return UPoly({-r, Cyclo12(1)}); }

  /// The univariate polynomial in `var` obtained when every other variable of
  /// f is absent. Throws std::invalid_argument if another variable occurs.
  static UPoly from_multipoly(const MultiPoly& f, int var);
  MultiPoly to_multipoly(int num_vars, int var) const;

  const std::vector<Cyclo12>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Cyclo12& leading() const { return c_.back(); }
  Cyclo12 coeff(int k) const;

  Cyclo12 evaluate(const Cyclo12& t) const;
  ComplexApprox evaluate(const ComplexApprox& t) const;
  UPoly derivative() const;
  /// Divides by the leading coefficient; zero stays zero.
  UPoly monic() const;
  bool has_real_coefficients() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Cyclo12& s);
  friend bool operator==(const UPoly&, const UPoly&) = default;

  /// "3*t^2 - t + 1/2"
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Cyclo12> c_;
};

/// Quotient and remainder. Throws std::domain_error for a zero divisor.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic greatest common divisor; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
/// Square-free decomposition: entry k (1-based multiplicity k + 1) is monic and
/// a = lc(a) * prod parts[k]^(k+1). Requires a nonzero.
std::vector<UPoly> squarefree_decomposition(const UPoly& a);
/// Product of the square-free parts, monic.
UPoly squarefree_part(const UPoly& a);
/// Resultant of a and b over Q(zeta12) by the Euclidean algorithm.
Cyclo12 resultant(const UPoly& a, const UPoly& b);

}  // namespace symbez
