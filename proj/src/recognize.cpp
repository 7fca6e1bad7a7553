#include "symbez/recognize.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace symbez {

BigRational best_rational(const BigFloat& x, long max_den) {
  BigRational v = x.to_rational();
  // Convergents h/k of the continued fraction of v, seeded with h_{-1}/k_{-1} = 1/0.
  mpz_class h = 1, h_prev = 0, k = 0, k_prev = 1;
  BigRational best(0);
  for (int step = 0; step < 200; ++step) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    const mpz_class h_next = a * h + h_prev;
    const mpz_class k_next = a * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    best = BigRational(h, k);
    best.canonicalize();
    const BigRational frac = v - BigRational(a);
    if (frac == 0) break;
    v = 1 / frac;
  }
  return best;
}

namespace {

bool close(const ComplexApprox& z, const Cyclo12& c, double tol) {
  const long prec = z.precision_bits();
  const ComplexApprox d = z - c.embed(prec);
  const double scale = std::max(1.0, std::abs(z.to_complex()));
  return d.abs().to_double() < tol * scale;
}

}  // namespace

std::optional<Cyclo12> recognize_cyclo(const ComplexApprox& z, double tol, long max_den) {
  const long prec = z.precision_bits();
  const double scale = std::max(1.0, std::abs(z.to_complex()));
  if (z.abs().to_double() < tol * scale) return Cyclo12();
  std::vector<Cyclo12> candidates;
  for (int k = 0; k < 12; ++k) {
    const Cyclo12 u = Cyclo12::zeta_pow(k);
    const ComplexApprox w = z * u.conj().embed(prec);
    if (std::abs(w.imag().to_double()) < tol * scale && w.real().sign() > 0) {
      candidates.push_back(Cyclo12(best_rational(w.real(), max_den)) * u);
    }
  }
  candidates.push_back(Cyclo12(best_rational(z.real(), max_den)) +
                       Cyclo12(best_rational(z.imag(), max_den)) * Cyclo12::imag_unit());
  // z = p + q*omega: Im z = q*sqrt(3)/2, Re z = p - q/2.
  const BigFloat s3h = sqrt(BigFloat(3.0, prec)) / BigFloat(2.0, prec);
  const BigRational q = best_rational(z.imag() / s3h, max_den);
  const BigRational p = best_rational(z.real() + BigFloat(q, prec) / BigFloat(2.0, prec), max_den);
  candidates.push_back(Cyclo12(p) + Cyclo12(q) * Cyclo12::omega());
  for (const auto& c : candidates) {
    if (close(z, c, tol)) return c;
  }
  return std::nullopt;
}

}  // namespace symbez
