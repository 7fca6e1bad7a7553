#include "symbez/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>

#include "symbez/errors.hpp"

namespace symbez {

namespace {

// p(z) and p'(z) by Horner.
void horner2(const std::vector<ComplexApprox>& a, const ComplexApprox& z, ComplexApprox& p, ComplexApprox& dp) {
  const long prec = z.precision_bits();
  p = a.back();
  dp = ComplexApprox(0.0, 0.0, prec);
  for (size_t k = a.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[k];
  }
}

double magnitude_log2(const ComplexApprox& z) {
  if (z.is_zero()) return -1e9;
  return log2_abs(z.abs());
}

// Runs Aberth sweeps until every correction is below 2^-target_bits relative
// to max(1, |z|), or the sweep budget is exhausted.
bool aberth_sweeps(const std::vector<ComplexApprox>& a, std::vector<ComplexApprox>& z, long target_bits, int budget) {
  const size_t n = z.size();
  const long prec = z.front().precision_bits();
  const ComplexApprox one(1.0, 0.0, prec);
  std::vector<bool> done(n, false);
  std::vector<double> last(n, 1e9);
  for (int it = 0; it < budget; ++it) {
    bool all = true;
    for (size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      ComplexApprox p(prec), dp(prec);
      horner2(a, z[i], p, dp);
      if (p.is_zero()) {
        done[i] = true;
        continue;
      }
      const ComplexApprox ratio = p / dp;
      ComplexApprox sum(0.0, 0.0, prec);
      for (size_t j = 0; j < n; ++j) {
        if (j != i) sum += one / (z[i] - z[j]);
      }
      const ComplexApprox w = ratio / (one - ratio * sum);
      if (!w.is_finite()) {
        // Colliding iterates; nudge apart and keep going.
        z[i] += ComplexApprox(1e-3, 7e-4, prec);
        all = false;
        continue;
      }
      z[i] -= w;
      const double scale = std::max(0.0, magnitude_log2(z[i]));
      const double step = magnitude_log2(w);
      // Below half precision a correction that no longer shrinks is rounding noise.
      const bool stalled = step < scale - static_cast<double>(target_bits) / 2.0 && step > last[i] - 1.0;
      last[i] = step;
      if (step < scale - static_cast<double>(target_bits) || stalled) {
        done[i] = true;
      } else {
        all = false;
      }
    }
    if (all) return true;
  }
  return false;
}

std::complex<long double> to_long_double(const ComplexApprox& z) {
  return {mpfr_get_ld(z.real().get(), MPFR_RNDN), mpfr_get_ld(z.imag().get(), MPFR_RNDN)};
}

ComplexApprox from_long_double(std::complex<long double> z, long prec) {
  BigFloat re(0.0, prec), im(0.0, prec);
  mpfr_set_ld(re.get(), z.real(), MPFR_RNDN);
  mpfr_set_ld(im.get(), z.imag(), MPFR_RNDN);
  return {std::move(re), std::move(im)};
}

// Same iteration in extended hardware precision, used for the starting
// phase before refinement at full precision.
void aberth_sweeps_ld(const std::vector<std::complex<long double>>& a, std::vector<std::complex<long double>>& z,
                      int budget) {
  using C = std::complex<long double>;
  const size_t n = z.size();
  std::vector<bool> done(n, false);
  const long double eps = std::numeric_limits<long double>::epsilon() * 64;
  for (int it = 0; it < budget; ++it) {
    bool all = true;
    for (size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      C p = a.back(), dp = 0;
      for (size_t k = a.size() - 1; k-- > 0;) {
        dp = dp * z[i] + p;
        p = p * z[i] + a[k];
      }
      if (p == C(0)) {
        done[i] = true;
        continue;
      }
      const C ratio = p / dp;
      C sum = 0;
      for (size_t j = 0; j < n; ++j) {
        if (j != i) sum += C(1) / (z[i] - z[j]);
      }
      const C w = ratio / (C(1) - ratio * sum);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
        z[i] += C(1e-3L, 7e-4L);
        all = false;
        continue;
      }
      z[i] -= w;
      if (std::abs(w) <= eps * std::max<long double>(1, std::abs(z[i]))) {
        done[i] = true;
      } else {
        all = false;
      }
    }
    if (all) return;
  }
}

bool backward_ok(const std::vector<ComplexApprox>& a, const ComplexApprox& z, long precision_bits) {
  ComplexApprox p = a.back();
  BigFloat bound = a.back().abs();
  const BigFloat az = z.abs();
  for (size_t k = a.size() - 1; k-- > 0;) {
    p = p * z + a[k];
    bound = bound * az + a[k].abs();
  }
  if (p.is_zero()) return true;
  return log2_abs(p.abs()) - log2_abs(bound) < -static_cast<double>(precision_bits) / 2.0;
}

}  // namespace

std::vector<ComplexApprox> aberth_roots(const std::vector<ComplexApprox>& coeffs, long precision_bits) {
  if (coeffs.empty() || coeffs.back().is_zero()) throw std::invalid_argument("root finding needs a nonzero leading coefficient");
  std::vector<ComplexApprox> out;
  size_t low = 0;
  while (coeffs[low].is_zero()) {
    out.emplace_back(0.0, 0.0, precision_bits);
    ++low;
  }
  std::vector<ComplexApprox> a;
  for (size_t k = low; k < coeffs.size(); ++k) a.push_back(coeffs[k].with_precision(precision_bits));
  const size_t n = a.size() - 1;
  if (n == 0) return out;
  if (n == 1) {
    out.push_back(-(a[0] / a[1]));
    return out;
  }

  // Start on a circle of radius |a0/an|^(1/n) with an irrational offset.
  const long low_prec = std::min<long>(precision_bits, 64);
  std::vector<ComplexApprox> al;
  for (const auto& c : a) al.push_back(c.with_precision(low_prec));
  const double lr = (magnitude_log2(a[0]) - magnitude_log2(a[n])) / static_cast<double>(n);
  const double radius = std::exp2(std::clamp(lr, -900.0, 900.0));
  std::vector<ComplexApprox> z;
  for (size_t k = 0; k < n; ++k) {
    const double theta = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n) + 0.4;
    z.emplace_back(radius * std::cos(theta), radius * std::sin(theta), low_prec);
  }
  double max_log = -1e9, min_log = 1e9;
  for (const auto& c : a) {
    if (c.is_zero()) continue;
    max_log = std::max(max_log, magnitude_log2(c));
    min_log = std::min(min_log, magnitude_log2(c));
  }
  if (max_log < 4000 && min_log > -4000 && std::abs(lr) * static_cast<double>(n) < 4000) {
    std::vector<std::complex<long double>> ald;
    for (const auto& c : al) ald.push_back(to_long_double(c));
    std::vector<std::complex<long double>> zd;
    for (const auto& r : z) zd.push_back(to_long_double(r));
    aberth_sweeps_ld(ald, zd, 800);
    for (size_t k = 0; k < n; ++k) {
      if (std::isfinite(zd[k].real()) && std::isfinite(zd[k].imag())) z[k] = from_long_double(zd[k], low_prec);
    }
  } else {
    aberth_sweeps(al, z, low_prec - 6, 800);
  }
  for (auto& r : z) r = r.with_precision(precision_bits);
  aberth_sweeps(a, z, precision_bits - 6, 200);
  for (const auto& r : z) {
    if (!r.is_finite() || !backward_ok(a, r, precision_bits)) {
      throw NumericalError("root finder did not converge (degree " + std::to_string(n) + ")");
    }
  }
  out.insert(out.end(), z.begin(), z.end());
  return out;
}

std::vector<RootCluster> univariate_roots(const UPoly& p, long precision_bits, double cluster_radius) {
  if (p.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  std::vector<ComplexApprox> a;
  for (const auto& c : p.coeffs()) a.push_back(c.embed(precision_bits + 16));
  const auto z = aberth_roots(a, precision_bits);
  const size_t n = z.size();
  std::vector<size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  std::vector<std::complex<double>> zd;
  for (const auto& r : z) zd.push_back(r.to_complex());
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      const double scale = std::max(1.0, std::max(std::abs(zd[i]), std::abs(zd[j])));
      if (std::abs(zd[i] - zd[j]) < cluster_radius * scale) parent[find(i)] = find(j);
    }
  }
  std::vector<RootCluster> out;
  std::vector<size_t> rep;
  for (size_t i = 0; i < n; ++i) {
    const size_t r = find(i);
    auto it = std::find(rep.begin(), rep.end(), r);
    if (it == rep.end()) {
      rep.push_back(r);
      out.push_back({z[i], 1});
    } else {
      auto& c = out[static_cast<size_t>(it - rep.begin())];
      c.value += z[i];
      ++c.multiplicity;
    }
  }
  for (auto& c : out) {
    if (c.multiplicity > 1) c.value *= BigFloat(1.0, precision_bits) / BigFloat(static_cast<double>(c.multiplicity), precision_bits);
  }
  return out;
}

std::vector<RootCluster> univariate_roots(const MultiPoly& p, long precision_bits, double cluster_radius) {
  int var = 0;
  for (const auto& [e, c] : p.terms()) {
    for (int k = 0; k < p.num_vars(); ++k) {
      if (e[static_cast<size_t>(k)] != 0) var = k;
    }
  }
  return univariate_roots(UPoly::from_multipoly(p, var), precision_bits, cluster_radius);
}

std::vector<RootCluster> roots_with_exact_multiplicity(const UPoly& p, long precision_bits) {
  std::vector<RootCluster> out;
  const auto parts = squarefree_decomposition(p);
  for (size_t k = 0; k < parts.size(); ++k) {
    if (parts[k].degree() <= 0) continue;
    std::vector<ComplexApprox> a;
    for (const auto& c : parts[k].coeffs()) a.push_back(c.embed(precision_bits + 16));
    for (auto& r : aberth_roots(a, precision_bits)) out.push_back({std::move(r), static_cast<int>(k + 1)});
  }
  return out;
}

}  // namespace symbez
