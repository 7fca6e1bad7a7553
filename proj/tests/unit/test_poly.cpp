#include <gtest/gtest.h>

#include "symbez/parse.hpp"
#include "symbez/poly.hpp"
#include "test_support.hpp"

using namespace symbez;
using symbez::testing::random_cyclo;
using symbez::testing::random_homogeneous;

namespace {

MultiPoly P(const char* s, int n = 3) { return parse_poly(s, n); }

// Power sums in the e-basis via Newton's identities, independent of
// to_elementary_basis: p_k = e1 p_{k-1} - e2 p_{k-2} + e3 p_{k-3} - ... with
// p_0 = n and the k e_k correction for k <= n.
ElemBasisPoly newton_power_sum(int n, int k) {
  std::vector<MultiPoly> p;
  auto e = [n](int j) { return MultiPoly::variable(n, j - 1); };
  p.push_back(MultiPoly::constant(n, Cyclo12(n)));
  for (int m = 1; m <= k; ++m) {
    MultiPoly acc(n);
    for (int j = 1; j <= std::min(m, n); ++j) {
      const Cyclo12 sign = (j % 2 == 1) ? Cyclo12(1) : Cyclo12(-1);
      if (j == m) {
        acc += e(j) * Cyclo12(m) * sign;
      } else {
        acc += e(j) * p[static_cast<size_t>(m - j)] * sign;
      }
    }
    p.push_back(acc);
  }
  return {p.back()};
}

}  // namespace

TEST(MultiPoly, RingOps) {
  EXPECT_EQ(P("(X+Y+Z)*(X+Y+Z)"), P("X^2+Y^2+Z^2+2*X*Y+2*X*Z+2*Y*Z"));
  const MultiPoly f = P("X^3 - 2*Y*Z + 7");
  EXPECT_EQ(f + MultiPoly(3), f);
  EXPECT_EQ(poly_mul(P("X-Y"), P("X+Y")), P("X^2-Y^2"));
  EXPECT_THROW(P("X") + P("X", 4), std::invalid_argument);
  EXPECT_EQ(poly_scale(f, Cyclo12(0)), MultiPoly(3));
}

TEST(MultiPoly, HomogeneityPropagates) {
  const MultiPoly a = P("X^2+Y*Z"), b = P("X^3-Z^3");
  ASSERT_TRUE(a.is_homogeneous());
  ASSERT_TRUE(b.is_homogeneous());
  EXPECT_TRUE((a * b).is_homogeneous());
  EXPECT_EQ((a * b).degree(), 5);
  EXPECT_FALSE(P("X^2+Y").is_homogeneous());
  EXPECT_FALSE(MultiPoly(3).degree().has_value());
}

TEST(MultiPoly, PartialDerivative) {
  EXPECT_EQ(partial_derivative(P("X^2*Y"), 0), P("2*X*Y"));
  EXPECT_EQ(partial_derivative(P("X+Y+Z"), 2), P("1"));
  EXPECT_EQ(partial_derivative(P("X^5+Y^5+Z^5"), 0), P("5*X^4"));
}

TEST(MultiPoly, EulerResidual) {
  EXPECT_TRUE(euler_residual(P("X^2*Y")).is_zero());
  EXPECT_TRUE(euler_residual(P("X^5+Y^5+Z^5")).is_zero());
  EXPECT_THROW(euler_residual(P("X^2+Y")), std::invalid_argument);
}

TEST(MultiPoly, EulerIdentityProperty) {
  Rng rng(11);
  for (int n : {3, 4}) {
    for (int d = 1; d <= 6; ++d) {
      for (int t = 0; t < 5; ++t) {
        EXPECT_TRUE(euler_residual(random_homogeneous(rng, n, d)).is_zero());
      }
    }
  }
}

TEST(MultiPoly, ApplyPermutation) {
  EXPECT_EQ(apply_permutation(P("X^2*Y"), Permutation::transposition(3, 0, 1)), P("Y^2*X"));
  for (const auto& s : all_permutations(3)) EXPECT_EQ(apply_permutation(P("X+Y+Z"), s), P("X+Y+Z"));
  EXPECT_EQ(apply_permutation(P("X^2*Y"), Permutation::cycle(3, {0, 1, 2})), P("Y^2*Z"));
}

TEST(MultiPoly, IsSymmetric) {
  EXPECT_TRUE(is_symmetric(P("X^5+Y^5+Z^5")));
  EXPECT_FALSE(is_symmetric(P("X^2*Y")));
  EXPECT_TRUE(is_symmetric(P("X*Y+Y*Z+Z*X")));
  EXPECT_FALSE(is_symmetric(P("X*Y*Z*W + X", 4)));
}

TEST(ElementaryBasis, KnownConversions) {
  const auto sq = to_elementary_basis(P("X^2+Y^2+Z^2"));
  EXPECT_EQ(sq.poly, parse_poly("X^2 - 2*Y", 3));  // e1^2 - 2 e2
  EXPECT_EQ(to_elementary_basis(P("X+Y+Z")).poly, P("X"));
  EXPECT_THROW(to_elementary_basis(P("X^2*Y")), std::invalid_argument);
}

TEST(ElementaryBasis, PowerSumMatchesNewtonIdentities) {
  const ElemBasisPoly oracle = newton_power_sum(3, 5);
  // e1^5 - 5 e1^3 e2 + 5 e1 e2^2 + 5 e1^2 e3 - 5 e2 e3, written over X=e1, Y=e2, Z=e3
  EXPECT_EQ(oracle.poly, P("X^5 - 5*X^3*Y + 5*X*Y^2 + 5*X^2*Z - 5*Y*Z"));
  const auto got = to_elementary_basis(P("X^5+Y^5+Z^5"));
  EXPECT_EQ(got, oracle);
  EXPECT_TRUE(got.is_weighted_homogeneous());
  EXPECT_EQ(got.weighted_degree(), 5);
  for (int k = 1; k <= 7; ++k) {
    const MultiPoly pk = parse_poly("x0^" + std::to_string(k) + "+x1^" + std::to_string(k) + "+x2^" + std::to_string(k) + "+x3^" + std::to_string(k), 4);
    EXPECT_EQ(to_elementary_basis(pk), newton_power_sum(4, k)) << "k=" << k;
  }
}

TEST(ElementaryBasis, FromBasis) {
  EXPECT_EQ(from_elementary_basis({MultiPoly::variable(3, 0)}), P("X+Y+Z"));
  EXPECT_EQ(from_elementary_basis({MultiPoly::variable(3, 2)}), P("X*Y*Z"));
  EXPECT_EQ(from_elementary_basis({MultiPoly::variable(4, 1)}), P("X*Y+X*Z+X*W+Y*Z+Y*W+Z*W", 4));
}

TEST(ElementaryBasis, RoundTripProperty) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = seed % 2 == 0 ? 3 : 4;
    const int d = 1 + static_cast<int>(seed % 6);
    const MultiPoly f = random_symmetric(n, d, seed, 10);
    ASSERT_TRUE(is_symmetric(f));
    const ElemBasisPoly e = to_elementary_basis(f);
    EXPECT_TRUE(e.is_weighted_homogeneous());
    EXPECT_EQ(from_elementary_basis(e), f);
  }
}

TEST(Evaluate, Exact) {
  const Cyclo12 w = Cyclo12::omega();
  const std::vector<Cyclo12> p1{w, w * w, Cyclo12(1)};
  EXPECT_TRUE(evaluate_exact(P("X+Y+Z"), p1).is_zero());
  const std::vector<Cyclo12> p2{Cyclo12(-1), Cyclo12(1), Cyclo12(0)};
  EXPECT_TRUE(evaluate_exact(P("X^5+Y^5+Z^5"), p2).is_zero());
  const std::vector<Cyclo12> p3{Cyclo12(1), Cyclo12(1), Cyclo12(1)};
  EXPECT_EQ(evaluate_exact(P("X*Y+Y*Z+Z*X"), p3), Cyclo12(3));
  EXPECT_THROW(evaluate_exact(P("X"), std::vector<Cyclo12>{Cyclo12(1)}), std::invalid_argument);
}

TEST(Evaluate, Numeric) {
  const std::vector<ComplexApprox> p{ComplexApprox(1.0, 0, 128), ComplexApprox(-0.5, 0.866, 128),
                                     ComplexApprox(-0.5, -0.866, 128)};
  EXPECT_LT(evaluate_numeric(P("X+Y+Z"), p).abs().to_double(), 1e-3);
  EXPECT_NEAR(evaluate_numeric(P("2"), p).real().to_double(), 2.0, 0);
  const MultiPoly sq = parse_poly("X^2", 1);
  EXPECT_NEAR(evaluate_numeric(sq, std::vector<ComplexApprox>{ComplexApprox(3.0, 0, 128)}).real().to_double(), 9.0, 0);
}

TEST(Evaluate, EquivarianceProperty) {
  // f^sigma(p) = f(sigma^{-1} . p) where (sigma . p)_{sigma(i)} = p_i
  Rng rng(31);
  for (int t = 0; t < 50; ++t) {
    const int n = 3 + t % 2;
    const MultiPoly f = random_homogeneous(rng, n, 1 + t % 4);
    const auto perms = all_permutations(n);
    const Permutation& s = perms[static_cast<size_t>(rng.uniform(0, static_cast<long>(perms.size()) - 1))];
    std::vector<Cyclo12> p;
    for (int i = 0; i < n; ++i) p.push_back(random_cyclo(rng));
    std::vector<Cyclo12> moved(static_cast<size_t>(n));
    const Permutation inv = s.inverse();
    for (int i = 0; i < n; ++i) moved[static_cast<size_t>(inv(i))] = p[static_cast<size_t>(i)];
    EXPECT_EQ(evaluate_exact(apply_permutation(f, s), p), evaluate_exact(f, moved));
  }
}

TEST(Evaluate, ConjugationCompatibility) {
  Rng rng(32);
  for (int t = 0; t < 50; ++t) {
    const MultiPoly f = random_homogeneous(rng, 3, 1 + t % 5);
    std::vector<Cyclo12> p, pc;
    for (int i = 0; i < 3; ++i) {
      p.push_back(random_cyclo(rng));
      pc.push_back(p.back().conj());
    }
    EXPECT_EQ(evaluate_exact(f.conj(), pc), evaluate_exact(f, p).conj());
  }
}

TEST(Evaluate, DerivativeSymmetryAtRepeatedCoordinates) {
  Rng rng(33);
  for (int t = 0; t < 30; ++t) {
    const int n = 3 + t % 2;
    const MultiPoly f = random_symmetric(n, 1 + t % 6, static_cast<std::uint64_t>(t), 10);
    const Cyclo12 a = random_cyclo(rng);
    std::vector<Cyclo12> p;
    for (int i = 0; i < n; ++i) p.push_back(random_cyclo(rng));
    p[1] = p[0] = a;  // coordinates 0 and 1 agree
    EXPECT_EQ(evaluate_exact(partial_derivative(f, 0), p), evaluate_exact(partial_derivative(f, 1), p));
  }
}

TEST(MultiPoly, Dehomogenize) {
  EXPECT_EQ(dehomogenize(P("X^2+Y*Z"), 2), P("X^2+Y"));
  EXPECT_EQ(dehomogenize(P("Z^3"), 2), P("1"));
  EXPECT_EQ(dehomogenize(P("X+Y+Z"), 2), P("X+Y+1"));
}

TEST(MultiPoly, DivideExact) {
  const MultiPoly a = P("X^2+Y*Z-3*X"), b = P("Y-omega*Z+2");
  EXPECT_EQ(divide_exact(a * b, b), a);
  EXPECT_THROW(divide_exact(a, b), std::domain_error);
  EXPECT_THROW(divide_exact(a, MultiPoly(3)), std::domain_error);
}

TEST(RandomSymmetric, WeightedMonomialEnumeration) {
  EXPECT_EQ(weighted_monomials(3, 1).size(), 1U);
  EXPECT_EQ(weighted_monomials(3, 2).size(), 2U);
  EXPECT_EQ(weighted_monomials(4, 3).size(), 3U);
  EXPECT_EQ(weighted_monomials(4, 4).size(), 5U);
}

TEST(RandomSymmetric, ShapesAndDeterminism) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const MultiPoly f1 = random_symmetric(3, 1, s, 10);
    const auto e1 = to_elementary_basis(f1);
    ASSERT_EQ(e1.poly.term_count(), 1U);
    EXPECT_EQ(e1.poly.terms().begin()->first, (ExponentVector{1, 0, 0, 0}));

    const auto e2 = to_elementary_basis(random_symmetric(3, 2, s, 10));
    for (const auto& [k, c] : e2.poly.terms()) {
      EXPECT_TRUE(k == (ExponentVector{2, 0, 0, 0}) || k == (ExponentVector{0, 1, 0, 0}));
    }
    const auto e3 = to_elementary_basis(random_symmetric(4, 3, s, 10));
    EXPECT_TRUE(e3.is_weighted_homogeneous());
    EXPECT_EQ(e3.weighted_degree(), 3);
    EXPECT_EQ(random_symmetric(4, 3, s, 10), random_symmetric(4, 3, s, 10));
    for (const auto& [k, c] : e3.poly.terms()) {
      ASSERT_TRUE(c.is_rational());
      EXPECT_LE(abs(c[0]), 10);
    }
  }
  EXPECT_THROW(random_symmetric(3, 0, 1, 10), std::invalid_argument);
}

TEST(MultiPoly, CoefficientsIn) {
  const auto cs = coefficients_in(P("X^2*Y + 3*Y^2 - Z"), 1);
  ASSERT_EQ(cs.size(), 3U);
  EXPECT_EQ(cs[0], P("-Z"));
  EXPECT_EQ(cs[1], P("X^2"));
  EXPECT_EQ(cs[2], P("3"));
}
