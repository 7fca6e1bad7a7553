#include <cmath>

#include <gtest/gtest.h>

#include "symbez/errors.hpp"
#include "symbez/parse.hpp"
#include "symbez/roots.hpp"
#include "symbez/upoly.hpp"
#include "test_support.hpp"

using namespace symbez;
using symbez::testing::random_cyclo;

namespace {

UPoly up(std::vector<long> c) {
  std::vector<Cyclo12> v(c.begin(), c.end());
  return UPoly(std::move(v));
}

UPoly random_upoly(Rng& rng, int degree) {
  std::vector<Cyclo12> c;
  for (int k = 0; k < degree; ++k) c.push_back(random_cyclo(rng));
  c.push_back(random_cyclo(rng, false));
  return UPoly(std::move(c));
}

// Determinant of the Sylvester matrix by exact Gaussian elimination; an
// independent oracle for the Euclidean resultant.
Cyclo12 sylvester_det(const UPoly& a, const UPoly& b) {
  const int m = a.degree(), n = b.degree(), s = m + n;
  std::vector<std::vector<Cyclo12>> M(static_cast<size_t>(s), std::vector<Cyclo12>(static_cast<size_t>(s)));
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k <= m; ++k) M[static_cast<size_t>(r)][static_cast<size_t>(r + k)] = a.coeff(m - k);
  }
  for (int r = 0; r < m; ++r) {
    for (int k = 0; k <= n; ++k) M[static_cast<size_t>(n + r)][static_cast<size_t>(r + k)] = b.coeff(n - k);
  }
  Cyclo12 det(1);
  for (int c = 0; c < s; ++c) {
    int piv = c;
    while (piv < s && M[static_cast<size_t>(piv)][static_cast<size_t>(c)].is_zero()) ++piv;
    if (piv == s) return {};
    if (piv != c) {
      std::swap(M[static_cast<size_t>(piv)], M[static_cast<size_t>(c)]);
      det = -det;
    }
    const Cyclo12 inv = M[static_cast<size_t>(c)][static_cast<size_t>(c)].inverse();
    det *= M[static_cast<size_t>(c)][static_cast<size_t>(c)];
    for (int r = c + 1; r < s; ++r) {
      const Cyclo12 f = M[static_cast<size_t>(r)][static_cast<size_t>(c)] * inv;
      if (f.is_zero()) continue;
      for (int k = c; k < s; ++k) {
        M[static_cast<size_t>(r)][static_cast<size_t>(k)] -= f * M[static_cast<size_t>(c)][static_cast<size_t>(k)];
      }
    }
  }
  return det;
}

double dist(const ComplexApprox& a, std::complex<double> b) { return std::abs(a.to_complex() - b); }

}  // namespace

TEST(UPoly, ArithmeticAndDivision) {
  const UPoly a = up({-1, 0, 1});  // t^2 - 1
  const UPoly b = up({1, 1});      // t + 1
  const auto [q, r] = divmod(a, b);
  EXPECT_EQ(q, up({-1, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(gcd(a, up({1, 2, 1})), b);
  EXPECT_EQ(a.derivative(), up({0, 2}));
  EXPECT_EQ(a.evaluate(Cyclo12(3)), Cyclo12(8));
  EXPECT_EQ(up({2, 0, 4}).monic(), UPoly({BigRational(1, 2), 0, 1}));
  EXPECT_THROW(divmod(a, UPoly()), std::domain_error);
}

TEST(UPoly, DivisionProperty) {
  Rng rng(3);
  for (int t = 0; t < 30; ++t) {
    const UPoly a = random_upoly(rng, 1 + t % 6), b = random_upoly(rng, 1 + t % 3);
    const auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
}

TEST(UPoly, GcdRecoversCommonFactor) {
  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    const UPoly c = random_upoly(rng, 1 + t % 3);
    const UPoly a = random_upoly(rng, 2) * c, b = random_upoly(rng, 3) * c;
    const UPoly g = gcd(a, b);
    EXPECT_GE(g.degree(), c.degree());
    EXPECT_TRUE(divmod(g, c.monic()).second.is_zero());
    EXPECT_TRUE(divmod(a, g).second.is_zero());
    EXPECT_TRUE(divmod(b, g).second.is_zero());
  }
}

TEST(UPoly, SquarefreeDecomposition) {
  const UPoly p = up({-1, 1}) * up({-1, 1}) * up({-1, 1}) * up({2, 1}) * up({1, 0, 1}) * up({1, 0, 1});
  const auto parts = squarefree_decomposition(p * Cyclo12(5));
  ASSERT_EQ(parts.size(), 3U);
  EXPECT_EQ(parts[0], up({2, 1}));
  EXPECT_EQ(parts[1], up({1, 0, 1}));
  EXPECT_EQ(parts[2], up({-1, 1}));
  EXPECT_EQ(squarefree_part(p).degree(), 4);
}

TEST(UPoly, ResultantMatchesSylvesterDeterminant) {
  Rng rng(5);
  for (int t = 0; t < 40; ++t) {
    const UPoly a = random_upoly(rng, 1 + t % 5), b = random_upoly(rng, 1 + (t / 5) % 4);
    EXPECT_EQ(resultant(a, b), sylvester_det(a, b));
  }
  // Shared root gives zero.
  EXPECT_TRUE(resultant(up({-1, 0, 1}), up({1, 1})).is_zero());
}

TEST(UPoly, MultiPolyRoundTrip) {
  const MultiPoly f = parse_poly("3*Y^2 - Y + 1/2", 3);
  const UPoly u = UPoly::from_multipoly(f, 1);
  EXPECT_EQ(u.degree(), 2);
  EXPECT_EQ(u.to_multipoly(3, 1), f);
  EXPECT_EQ(u.to_string(), "3*t^2 - t + 1/2");
  EXPECT_THROW(UPoly::from_multipoly(parse_poly("X*Y", 3), 1), std::invalid_argument);
}

TEST(Roots, Examples) {
  auto r = univariate_roots(up({1, 0, 1}));
  ASSERT_EQ(r.size(), 2U);
  const double s3 = std::sqrt(3.0);
  for (const auto& c : r) EXPECT_LT(std::min(dist(c.value, {0, 1}), dist(c.value, {0, -1})), 1e-30);
  r = univariate_roots(up({-1, 0, 0, 1}));
  ASSERT_EQ(r.size(), 3U);
  for (const auto& c : r) {
    const double d = std::min({dist(c.value, {1, 0}), dist(c.value, {-0.5, s3 / 2}), dist(c.value, {-0.5, -s3 / 2})});
    EXPECT_LT(d, 1e-30);
  }
  r = univariate_roots(up({4, -4, 1}));
  ASSERT_EQ(r.size(), 1U);
  EXPECT_EQ(r[0].multiplicity, 2);
  EXPECT_LT(dist(r[0].value, {2, 0}), 1e-15);
  // Roots at zero are exact.
  r = univariate_roots(up({0, 0, -1, 1}));
  int total = 0;
  for (const auto& c : r) total += c.multiplicity;
  EXPECT_EQ(total, 3);
}

TEST(Roots, ResidualsAndMultiplicitySum) {
  Rng rng(6);
  for (int t = 0; t < 15; ++t) {
    const int deg = 2 + 3 * t;
    std::vector<Cyclo12> c;
    for (int k = 0; k <= deg; ++k) c.emplace_back(make_rational(rng.uniform(-50, 50), rng.uniform(1, 3)));
    if (c.back().is_zero()) c.back() = 1;
    const UPoly p(c);
    const auto r = univariate_roots(p, 128);
    int total = 0;
    for (const auto& x : r) {
      total += x.multiplicity;
      if (x.multiplicity == 1) {
        EXPECT_LT(log2_abs(p.evaluate(x.value).abs()), -40.0);
      }
    }
    EXPECT_EQ(total, p.degree());
  }
}

TEST(Roots, ExactMultiplicities) {
  const UPoly p = up({-1, 1}) * up({-1, 1}) * up({1, 0, 1}) * up({3, 1});
  const auto r = roots_with_exact_multiplicity(p, 128);
  ASSERT_EQ(r.size(), 4U);
  int total = 0;
  for (const auto& c : r) {
    total += c.multiplicity;
    if (dist(c.value, {1, 0}) < 1e-20) EXPECT_EQ(c.multiplicity, 2);
  }
  EXPECT_EQ(total, 5);
}

TEST(Roots, CyclotomicCoefficients) {
  // (t - omega)(t - I) has non-real coefficients.
  const UPoly p = UPoly::linear_root(Cyclo12::omega()) * UPoly::linear_root(Cyclo12::imag_unit());
  const auto r = univariate_roots(p, 256);
  ASSERT_EQ(r.size(), 2U);
  for (const auto& c : r) {
    const double d = std::min(dist(c.value, embed(Cyclo12::omega()).to_complex()), dist(c.value, {0, 1}));
    EXPECT_LT(d, 1e-60);
  }
}
