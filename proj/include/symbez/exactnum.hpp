#pragma once

#include <array>
#include <compare>
#include <complex>
#include <string>

#include <gmpxx.h>

#include "symbez/bigfloat.hpp"

namespace symbez {

/// Arbitrary-precision rational; GMP keeps it canonical (den > 0, reduced).
using BigRational = mpq_class;

/// Builds p/q in canonical form. Throws std::domain_error on q == 0.
BigRational make_rational(const mpz_class& p, const mpz_class& q);

/// Default working precision for embeddings used by the solver.
inline constexpr long kDefaultPrecisionBits = 128;

/// A complex number carried at a fixed binary precision.
class ComplexApprox {
 public:
  explicit ComplexApprox(long precision_bits = kDefaultPrecisionBits);
  ComplexApprox(BigFloat re, BigFloat im);
  ComplexApprox(double re, double im, long precision_bits);
  ComplexApprox(std::complex<double> z, long precision_bits)
      : ComplexApprox(z.real(), z.imag(), precision_bits) {}

  const BigFloat& real() const { return re_; }
  const BigFloat& imag() const { return im_; }
  long precision_bits() const { return static_cast<long>(re_.precision()); }
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  BigFloat abs() const;
  /// |re|^2 + |im|^2
  BigFloat norm() const;
  ComplexApprox conj() const { return ComplexApprox(re_, -im_); }
  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }
  /// Re-rounds both parts to a new precision.
  ComplexApprox with_precision(long bits) const;

  ComplexApprox& operator+=(const ComplexApprox& o);
  ComplexApprox& operator-=(const ComplexApprox& o);
  ComplexApprox& operator*=(const ComplexApprox& o);
  ComplexApprox& operator/=(const ComplexApprox& o);
  ComplexApprox& operator*=(const BigFloat& s);

  friend ComplexApprox operator+(ComplexApprox a, const ComplexApprox& b) { return a += b; }
  friend ComplexApprox operator-(ComplexApprox a, const ComplexApprox& b) { return a -= b; }
  friend ComplexApprox operator*(ComplexApprox a, const ComplexApprox& b) { return a *= b; }
  friend ComplexApprox operator/(ComplexApprox a, const ComplexApprox& b) { return a /= b; }
  friend ComplexApprox operator*(ComplexApprox a, const BigFloat& s) { return a *= s; }
  friend ComplexApprox operator-(const ComplexApprox& a) { return ComplexApprox(-a.re_, -a.im_); }

  std::string to_string(int digits = 20) const;

 private:
  BigFloat re_;
  BigFloat im_;
};

/// Element of Q(zeta) with zeta a primitive 12th root of unity, stored as
/// c0 + c1 z + c2 z^2 + c3 z^3 and reduced modulo z^4 - z^2 + 1.
class Cyclo12 {
 public:
  Cyclo12() = default;
  Cyclo12(long v) : c_{BigRational(v), 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
  Cyclo12(const BigRational& v) : c_{v, 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
  Cyclo12(BigRational c0, BigRational c1, BigRational c2, BigRational c3)
      : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

  static Cyclo12 zeta() { return {0, 1, 0, 0}; }
  /// zeta^k for any integer k.
  static Cyclo12 zeta_pow(int k);
  static Cyclo12 imag_unit() { return {0, 0, 0, 1}; }
  /// Primitive cube root of unity e^{2 pi i / 3} = zeta^2 - 1.
  static Cyclo12 omega() { return {-1, 0, 1, 0}; }

  const std::array<BigRational, 4>& coeffs() const { return c_; }
  const BigRational& operator[](int k) const { return c_[k]; }

  bool is_zero() const;
  bool is_rational() const;
  bool is_real() const;
  bool is_one() const { return is_rational() && c_[0] == 1; }

  Cyclo12 conj() const;
  Cyclo12 inverse() const;
  Cyclo12 pow(unsigned e) const;

  Cyclo12& operator+=(const Cyclo12& o);
  Cyclo12& operator-=(const Cyclo12& o);
  Cyclo12& operator*=(const Cyclo12& o);
  Cyclo12& operator/=(const Cyclo12& o) { return *this *= o.inverse(); }

  friend Cyclo12 operator+(Cyclo12 a, const Cyclo12& b) { return a += b; }
  friend Cyclo12 operator-(Cyclo12 a, const Cyclo12& b) { return a -= b; }
  friend Cyclo12 operator*(Cyclo12 a, const Cyclo12& b) { return a *= b; }
  friend Cyclo12 operator/(Cyclo12 a, const Cyclo12& b) { return a /= b; }
  friend Cyclo12 operator-(Cyclo12 a);

  friend bool operator==(const Cyclo12& a, const Cyclo12& b) { return a.c_ == b.c_; }
  /// Arbitrary total order (lexicographic on coefficients); used for sorting only.
  friend bool operator<(const Cyclo12& a, const Cyclo12& b);

  /// Exact value under zeta = e^{i pi / 6}.
  ComplexApprox embed(long precision_bits = kDefaultPrecisionBits) const;

  /// Parser-compatible rendering over the basis {1, omega, I, I*omega},
  /// e.g. "-1 - omega" for omega^2 and "1/2*I" for i/2.
  std::string to_string() const;

 private:
  std::array<BigRational, 4> c_{};
};

Cyclo12 cyc_add(const Cyclo12& a, const Cyclo12& b);
Cyclo12 cyc_mul(const Cyclo12& a, const Cyclo12& b);
/// Throws std::domain_error on zero.
Cyclo12 cyc_inv(const Cyclo12& a);
Cyclo12 cyc_conj(const Cyclo12& a);
/// Requires precision_bits >= 53; throws std::invalid_argument otherwise.
ComplexApprox embed(const Cyclo12& a, long precision_bits = kDefaultPrecisionBits);

}  // namespace symbez
