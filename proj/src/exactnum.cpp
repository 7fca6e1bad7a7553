#include "symbez/exactnum.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace symbez {

BigRational make_rational(const mpz_class& p, const mpz_class& q) {
  if (q == 0) throw std::domain_error("division by zero: rational with zero denominator");
  BigRational r(p, q);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// ComplexApprox

ComplexApprox::ComplexApprox(long precision_bits) : re_(precision_bits), im_(precision_bits) {}

ComplexApprox::ComplexApprox(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {
  if (re_.precision() != im_.precision()) {
    const auto p = std::max(re_.precision(), im_.precision());
    mpfr_prec_round(re_.get(), p, MPFR_RNDN);
    mpfr_prec_round(im_.get(), p, MPFR_RNDN);
  }
}

ComplexApprox::ComplexApprox(double re, double im, long precision_bits)
    : re_(re, precision_bits), im_(im, precision_bits) {}

BigFloat ComplexApprox::norm() const { return re_ * re_ + im_ * im_; }

BigFloat ComplexApprox::abs() const {
  BigFloat r(re_.precision());
  mpfr_hypot(r.get(), re_.get(), im_.get(), MPFR_RNDN);
  return r;
}

ComplexApprox ComplexApprox::with_precision(long bits) const {
  BigFloat r = re_, i = im_;
  mpfr_prec_round(r.get(), bits, MPFR_RNDN);
  mpfr_prec_round(i.get(), bits, MPFR_RNDN);
  return {std::move(r), std::move(i)};
}

ComplexApprox& ComplexApprox::operator+=(const ComplexApprox& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ComplexApprox& ComplexApprox::operator-=(const ComplexApprox& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ComplexApprox& ComplexApprox::operator*=(const ComplexApprox& o) {
  BigFloat re = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  return *this;
}

ComplexApprox& ComplexApprox::operator/=(const ComplexApprox& o) {
  // Smith's algorithm keeps intermediate magnitudes bounded.
  if (symbez::abs(o.re_) >= symbez::abs(o.im_)) {
    const BigFloat r = o.im_ / o.re_;
    const BigFloat den = o.re_ + o.im_ * r;
    BigFloat re = (re_ + im_ * r) / den;
    im_ = (im_ - re_ * r) / den;
    re_ = std::move(re);
  } else {
    const BigFloat r = o.re_ / o.im_;
    const BigFloat den = o.re_ * r + o.im_;
    BigFloat re = (re_ * r + im_) / den;
    im_ = (im_ * r - re_) / den;
    re_ = std::move(re);
  }
  return *this;
}

ComplexApprox& ComplexApprox::operator*=(const BigFloat& s) {
  re_ *= s;
  im_ *= s;
  return *this;
}

std::string ComplexApprox::to_string(int digits) const {
  std::string s = re_.to_string(digits);
  if (im_.sign() < 0) {
    s += " - " + (-im_).to_string(digits) + "i";
  } else {
    s += " + " + im_.to_string(digits) + "i";
  }
  return s;
}

// ---------------------------------------------------------------------------
// Cyclo12

namespace {

// z^4 = z^2 - 1, z^5 = z^3 - z, z^6 = -1
void reduce_into(std::array<BigRational, 7>& d, std::array<BigRational, 4>& out) {
  d[0] -= d[4];
  d[2] += d[4];
  d[1] -= d[5];
  d[3] += d[5];
  d[0] -= d[6];
  for (int k = 0; k < 4; ++k) out[k] = std::move(d[k]);
}

}  // namespace

Cyclo12 Cyclo12::zeta_pow(int k) {
  k %= 12;
  if (k < 0) k += 12;
  Cyclo12 r(1);
  const Cyclo12 z = zeta();
  for (int j = 0; j < k; ++j) r *= z;
  return r;
}

bool Cyclo12::is_zero() const { return c_[0] == 0 && is_rational(); }

bool Cyclo12::is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

bool Cyclo12::is_real() const { return conj() == *this; }

Cyclo12 Cyclo12::conj() const {
  // z -> z^11 = z - z^3, z^2 -> 1 - z^2, z^3 -> -z^3
  return {c_[0] + c_[2], c_[1], -c_[2], -c_[1] - c_[3]};
}

Cyclo12& Cyclo12::operator+=(const Cyclo12& o) {
  for (int k = 0; k < 4; ++k) c_[k] += o.c_[k];
  return *this;
}

Cyclo12& Cyclo12::operator-=(const Cyclo12& o) {
  for (int k = 0; k < 4; ++k) c_[k] -= o.c_[k];
  return *this;
}

Cyclo12& Cyclo12::operator*=(const Cyclo12& o) {
  if (o.is_rational()) {
    for (auto& c : c_) c *= o.c_[0];
    return *this;
  }
  if (is_rational()) {
    const BigRational s = c_[0];
    c_ = o.c_;
    for (auto& c : c_) c *= s;
    return *this;
  }
  std::array<BigRational, 7> d{};
  for (int i = 0; i < 4; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < 4; ++j) {
      if (o.c_[j] == 0) continue;
      d[i + j] += c_[i] * o.c_[j];
    }
  }
  reduce_into(d, c_);
  return *this;
}

Cyclo12 operator-(Cyclo12 a) {
  for (auto& c : a.c_) c = -c;
  return a;
}

bool operator<(const Cyclo12& a, const Cyclo12& b) {
  for (int k = 0; k < 4; ++k) {
    if (a.c_[k] < b.c_[k]) return true;
    if (b.c_[k] < a.c_[k]) return false;
  }
  return false;
}

Cyclo12 Cyclo12::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(zeta12)");
  if (is_rational()) return Cyclo12(BigRational(1) / c_[0]);
  // Column j of m holds the coordinates of this * z^j; solve m x = e0.
  std::array<std::array<BigRational, 5>, 4> m{};
  Cyclo12 col = *this;
  const Cyclo12 z = zeta();
  for (int j = 0; j < 4; ++j) {
    for (int i = 0; i < 4; ++i) m[i][j] = col.c_[i];
    col *= z;
  }
  m[0][4] = 1;
  for (int k = 0; k < 4; ++k) {
    int piv = k;
    while (m[piv][k] == 0) ++piv;  // nonsingular: a nonzero field element is invertible
    std::swap(m[piv], m[k]);
    for (int i = 0; i < 4; ++i) {
      if (i == k || m[i][k] == 0) continue;
      const BigRational f = m[i][k] / m[k][k];
      for (int j = k; j < 5; ++j) m[i][j] -= f * m[k][j];
    }
  }
  Cyclo12 r;
  for (int i = 0; i < 4; ++i) r.c_[i] = m[i][4] / m[i][i];
  return r;
}

Cyclo12 Cyclo12::pow(unsigned e) const {
  Cyclo12 result(1), base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

ComplexApprox Cyclo12::embed(long precision_bits) const {
  // z = sqrt3/2 + i/2, z^2 = 1/2 + i sqrt3/2, z^3 = i
  if (is_rational()) return {BigFloat(c_[0], precision_bits), BigFloat(0.0, precision_bits)};
  const long p = precision_bits + 8;
  BigFloat s3 = sqrt(BigFloat(3.0, p));
  const BigFloat half(0.5, p);
  BigFloat re = BigFloat(c_[0], p) + BigFloat(c_[1], p) * s3 * half + BigFloat(c_[2], p) * half;
  BigFloat im = BigFloat(c_[1], p) * half + BigFloat(c_[2], p) * s3 * half + BigFloat(c_[3], p);
  mpfr_prec_round(re.get(), precision_bits, MPFR_RNDN);
  mpfr_prec_round(im.get(), precision_bits, MPFR_RNDN);
  return {std::move(re), std::move(im)};
}

namespace {

void append_term(std::string& out, const BigRational& c, const char* unit) {
  if (c == 0) return;
  const bool neg = c < 0;
  const BigRational mag = neg ? BigRational(-c) : c;
  if (out.empty()) {
    if (neg) out += "-";
  } else {
    out += neg ? " - " : " + ";
  }
  if (unit == nullptr) {
    out += mag.get_str();
  } else if (mag == 1) {
    out += unit;
  } else {
    out += mag.get_str();
    out += "*";
    out += unit;
  }
}

}  // namespace

std::string Cyclo12::to_string() const {
  // z = -I*omega, z^2 = 1 + omega, z^3 = I
  std::string s;
  append_term(s, c_[0] + c_[2], nullptr);
  append_term(s, c_[2], "omega");
  append_term(s, c_[3], "I");
  append_term(s, -c_[1], "I*omega");
  return s.empty() ? "0" : s;
}

Cyclo12 cyc_add(const Cyclo12& a, const Cyclo12& b) { return a + b; }
Cyclo12 cyc_mul(const Cyclo12& a, const Cyclo12& b) { return a * b; }
Cyclo12 cyc_inv(const Cyclo12& a) { return a.inverse(); }
Cyclo12 cyc_conj(const Cyclo12& a) { return a.conj(); }

ComplexApprox embed(const Cyclo12& a, long precision_bits) {
  if (precision_bits < 53) throw std::invalid_argument("embedding precision must be at least 53 bits");
  return a.embed(precision_bits);
}

}  // namespace symbez
