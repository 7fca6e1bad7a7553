#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "symbez/fixedpoints.hpp"
#include "symbez/parse.hpp"
#include "symbez/recognize.hpp"
#include "test_support.hpp"

using namespace symbez;

namespace {

const Cyclo12 kW = Cyclo12::omega();
const Cyclo12 kI = Cyclo12::imag_unit();

ProjPointExact pt(std::vector<Cyclo12> c) { return ProjPointExact(std::move(c)); }

MultiPoly P(const std::string& s, int n) { return parse_poly(s, n); }

std::set<std::string> texts(const std::vector<FixedPointFamily>& fams, bool admissible) {
  std::set<std::string> out;
  for (const auto& f : fams) {
    if (f.admissible == admissible) out.insert(f.text);
  }
  return out;
}

// Subtracts a multiple of e1^d so the result vanishes at p.
MultiPoly through(const MultiPoly& f, const ProjPointExact& p) {
  const int d = *f.degree();
  const MultiPoly h = elementary_symmetric(f.num_vars(), 1).pow(static_cast<unsigned>(d));
  const Cyclo12 hv = evaluate_exact(h, p.coords());
  return f - h * (evaluate_exact(f, p.coords()) / hv);
}

}  // namespace

TEST(Catalog, PlaneC2) {
  const auto fams = catalog(2, "C2");
  EXPECT_EQ(texts(fams, true), (std::set<std::string>{"[-1:1:0]"}));
  EXPECT_EQ(texts(fams, false), (std::set<std::string>{"[1:1:0]", "[a:a:1]"}));
}

TEST(Catalog, SpaceC4) {
  const auto fams = catalog(3, "C4");
  EXPECT_EQ(texts(fams, true), (std::set<std::string>{"[I:-1:-I:1]", "[-I:-1:I:1]"}));
  EXPECT_EQ(texts(fams, false), (std::set<std::string>{"[1:1:1:1]", "[-1:1:-1:1]"}));
}

TEST(Catalog, AdmissibleFamiliesExactly) {
  std::set<std::pair<std::string, std::string>> p2, p3;
  for (const auto& f : fixed_point_catalog(2)) {
    if (f.admissible && !f.all_points) p2.insert({f.stabilizer, f.text});
  }
  for (const auto& f : fixed_point_catalog(3)) {
    if (f.admissible && !f.all_points) p3.insert({f.stabilizer, f.text});
  }
  EXPECT_EQ(p2, (std::set<std::pair<std::string, std::string>>{
                    {"C2", "[-1:1:0]"}, {"C3", "[omega:omega^2:1]"}, {"C3", "[omega^2:omega:1]"}}));
  EXPECT_EQ(p3, (std::set<std::pair<std::string, std::string>>{{"C2e", "[a:-a:-1:1]"},
                                                                {"C3", "[omega:omega^2:1:0]"},
                                                                {"C3", "[omega^2:omega:1:0]"},
                                                                {"C4", "[I:-1:-I:1]"},
                                                                {"C4", "[-I:-1:I:1]"}}));
  for (const char* cls : {"C2o", "K4n", "K4", "S3", "D8", "A4", "S4"}) {
    EXPECT_TRUE(texts(catalog(3, cls), true).empty()) << cls;
  }
  EXPECT_THROW(catalog(3, "C5"), std::invalid_argument);
}

TEST(Catalog, C2eExcludedValues) {
  const auto fams = catalog(3, "C2e");
  const auto it = std::find_if(fams.begin(), fams.end(), [](const auto& f) { return f.admissible; });
  ASSERT_NE(it, fams.end());
  EXPECT_EQ(it->num_params, 1);
  EXPECT_EQ(std::set<Cyclo12>(it->excluded.begin(), it->excluded.end()), (std::set<Cyclo12>{0, 1, -1}));
  const Cyclo12 a(2);
  EXPECT_EQ(it->instantiate(std::span<const Cyclo12>(&a, 1)), pt({2, -2, -1, 1}));
  auto prm = it->parameters_of(pt({-6, 6, 3, -3}));
  ASSERT_TRUE(prm.has_value());
  EXPECT_EQ(prm->at(0), Cyclo12(2));
  EXPECT_FALSE(it->parameters_of(pt({1, 2, 3, 4})).has_value());
}

TEST(Catalog, VerifiedByStabilizer) {
  for (int dim : {2, 3}) {
    const auto rep = verify_catalog_by_stabilizer(dim);
    EXPECT_FALSE(rep.checks.empty());
    for (const auto& c : rep.checks) {
      EXPECT_TRUE(c.ok) << dim << " " << c.subgroup << " " << c.family << " " << c.property << ": " << c.detail;
    }
    EXPECT_TRUE(rep.all_ok());
  }
}

TEST(Catalog, FiniteFixedSets) {
  auto points = [](int n, const std::string& cls) {
    std::set<ProjPointExact> s;
    for (const auto& b : fixed_subspaces(subgroup_class(n, cls))) {
      EXPECT_EQ(b.size(), 1U);
      s.insert(ProjPointExact(b[0]));
    }
    return s;
  };
  EXPECT_EQ(points(4, "C4"), (std::set<ProjPointExact>{pt({1, 1, 1, 1}), pt({-1, 1, -1, 1}), pt({kI, -1, -kI, 1}),
                                                        pt({-kI, -1, kI, 1})}));
  EXPECT_EQ(points(3, "C3"), (std::set<ProjPointExact>{pt({1, 1, 1}), pt({kW, kW * kW, 1}), pt({kW * kW, kW, 1})}));
  EXPECT_EQ(points(4, "K4n"), (std::set<ProjPointExact>{pt({1, -1, -1, 1}), pt({-1, 1, -1, 1}), pt({1, 1, 1, 1}),
                                                         pt({-1, -1, 1, 1})}));
}

TEST(Catalog, SpecialPoints) {
  const auto p2 = catalog_special_points(2);
  // Orbit of [-1:1:0] has 3 points, the two C3 points form one orbit of 2.
  EXPECT_EQ(p2.size(), 5U);
  EXPECT_EQ(catalog_special_points(3).size(), 6U + 8U);
  EXPECT_GT(catalog_special_points(2, false).size(), p2.size());
}

TEST(Gradient, Examples) {
  const auto ones = pt({1, 1, 1});
  EXPECT_EQ(gradient_at(elementary_symmetric(3, 2), ones), (std::vector<Cyclo12>{2, 2, 2}));
  EXPECT_EQ(gradient_at(P("X+Y+Z", 3), pt({3, -1, 7})), (std::vector<Cyclo12>{1, 1, 1}));
  const MultiPoly f = P("X^3+Y^3+Z^3 - 3*X*Y*Z", 3);
  EXPECT_EQ(gradient_at(f, ones), (std::vector<Cyclo12>{0, 0, 0}));
}

TEST(Gradient, VanishingAtOnesIsSingular) {
  Rng rng(7);
  const auto ones3 = pt({1, 1, 1});
  const auto ones4 = pt({1, 1, 1, 1});
  for (int t = 0; t < 500; ++t) {
    const int n = t % 2 == 0 ? 3 : 4;
    const int d = static_cast<int>(rng.uniform(1, 7));
    const auto& p = n == 3 ? ones3 : ones4;
    const MultiPoly f = through(random_symmetric(n, d, rng.next()), p);
    EXPECT_TRUE(evaluate_exact(f, p.coords()).is_zero());
    for (const auto& g : gradient_at(f, p)) EXPECT_TRUE(g.is_zero());
  }
}

TEST(Tangent, Examples) {
  EXPECT_EQ(tangent_line_p2(elementary_symmetric(3, 2), pt({-2, -2, 1})), (std::vector<Cyclo12>{1, 1, 4}));
  EXPECT_EQ(tangent_line_p2(P("X+Y+Z", 3), pt({-1, 1, 0})), (std::vector<Cyclo12>{1, 1, 1}));
  const MultiPoly f = through(P("X^2+Y^2+Z^2 + X*Y + X*Z + Y*Z", 3), pt({1, 1, 0}));
  EXPECT_EQ(tangent_line_p2(f, pt({1, 1, 0})), (std::vector<Cyclo12>{0, 0, 1}));
  EXPECT_THROW(tangent_line_p2(P("X+Y+Z", 3), pt({1, 1, 1})), std::invalid_argument);
  EXPECT_THROW(tangent_line_p2(P("X^3+Y^3+Z^3 - 3*X*Y*Z", 3), pt({1, 1, 1})), std::domain_error);
}

TEST(Tangent, DiagonalPointsShareTangent) {
  Rng rng(11);
  int compared = 0;
  for (int t = 0; t < 200; ++t) {
    Cyclo12 a = symbez::testing::random_rational(rng);
    if (a == BigRational(-1, 2) || a == 1) a = 3;
    const auto p = pt({a, a, 1});
    const MultiPoly f = through(random_symmetric(3, static_cast<int>(rng.uniform(2, 6)), rng.next()), p);
    const MultiPoly g = through(random_symmetric(3, static_cast<int>(rng.uniform(2, 6)), rng.next()), p);
    try {
      const auto lf = tangent_line_p2(f, p);
      const auto lg = tangent_line_p2(g, p);
      EXPECT_EQ(lf, lg);
      EXPECT_EQ(lf, (std::vector<Cyclo12>{1, 1, Cyclo12(-2) * a}));
      ++compared;
    } catch (const std::domain_error&) {
    }
  }
  EXPECT_GT(compared, 150);
}

TEST(Obstruction, Examples) {
  const auto diag = pt({3, 3, 1});
  const MultiPoly f = through(P("X^2+Y^2+Z^2", 3), diag);
  const MultiPoly g = through(P("X^3+Y^3+Z^3 + X*Y*Z", 3), diag);
  const MultiPoly fg[] = {f, g};
  const auto o = obstruction(diag, fg);
  EXPECT_EQ(o.kind, ObstructionKind::kSharedTangent);
  EXPECT_EQ(o.line, (std::vector<Cyclo12>{1, 1, -6}));
  EXPECT_TRUE(o.repeated_coordinates);

  const auto q = pt({2, 2, 3, 1});
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    std::vector<MultiPoly> fs;
    for (int d = 2; d <= 4; ++d) {
      MultiPoly f(4);
      while (f.is_zero()) f = through(random_symmetric(4, d, rng.next()), q);
      fs.push_back(f);
    }
    const auto r = obstruction(q, fs);
    EXPECT_EQ(r.kind, ObstructionKind::kRankDrop);
    EXPECT_LT(r.jacobian_rank, 3);
    EXPECT_TRUE(r.repeated_coordinates);
  }

  const MultiPoly lin[] = {P("X+Y+Z", 3), P("X^5+Y^5+Z^5", 3)};
  const auto none = obstruction(pt({-1, 1, 0}), lin);
  EXPECT_FALSE(none.present());
  EXPECT_EQ(none.jacobian_rank, 2);
  EXPECT_EQ(none.kind_name(), "none");

  const MultiPoly sing[] = {P("X^3+Y^3+Z^3 - 3*X*Y*Z", 3), P("X+Y-2*Z", 3)};
  const auto s = obstruction(pt({1, 1, 1}), sing);
  EXPECT_EQ(s.kind, ObstructionKind::kSingularPoint);
  EXPECT_EQ(s.singular_index, 0);

  const MultiPoly bad[] = {P("X+Y+Z", 3), P("X^2+Y^2+Z^2", 3)};
  EXPECT_THROW(obstruction(pt({-1, 1, 0}), bad), std::invalid_argument);
}

TEST(Membership, Examples) {
  auto has = [](const std::vector<FamilyMembership>& ms, const ProjPointExact& p) {
    return std::any_of(ms.begin(), ms.end(), [&](const FamilyMembership& m) {
      return std::find(m.points.begin(), m.points.end(), p) != m.points.end();
    });
  };
  const auto m2 = special_point_membership(P("X+Y+Z", 3));
  EXPECT_TRUE(has(m2, pt({-1, 1, 0})));
  EXPECT_TRUE(has(m2, pt({kW, kW * kW, 1})));

  const auto m3 = special_point_membership(elementary_symmetric(4, 1));
  EXPECT_TRUE(has(m3, pt({kI, -1, -kI, 1})));
  EXPECT_TRUE(std::any_of(m3.begin(), m3.end(), [](const FamilyMembership& m) {
    return m.entire && m.family.text == "[a:-a:-1:1]";
  }));

  const auto sq = special_point_membership(P("X^2+Y^2+Z^2+W^2", 4));
  const auto it = std::find_if(sq.begin(), sq.end(), [](const FamilyMembership& m) { return m.family.text == "[a:-a:-1:1]"; });
  ASSERT_NE(it, sq.end());
  EXPECT_FALSE(it->entire);
  EXPECT_EQ(std::set<Cyclo12>(it->parameters.begin(), it->parameters.end()), (std::set<Cyclo12>{kI, -kI}));
}

TEST(Membership, RestrictedRootsDropExcluded) {
  const auto fam = catalog(3, "C2e");
  const auto it = std::find_if(fam.begin(), fam.end(), [](const auto& f) { return f.admissible; });
  // Restriction to [a:-a:-1:1] is 2a^2 - 2: roots +-1, both excluded.
  const MultiPoly f[] = {P("X^2+Y^2-Z^2-W^2", 4)};
  const auto r = restricted_family_roots(f, *it);
  EXPECT_FALSE(r.identically_zero);
  EXPECT_TRUE(r.exact.empty());
  EXPECT_TRUE(r.numeric.empty());
  // Restriction of sum X^4 is 2a^4 + 2, roots are primitive 8th roots of unity.
  const MultiPoly g[] = {P("X^4+Y^4+Z^4+W^4", 4)};
  const auto r4 = restricted_family_roots(g, *it);
  EXPECT_TRUE(r4.exact.empty());
  EXPECT_EQ(r4.numeric.size(), 4U);
}

TEST(Recognize, BestRational) {
  EXPECT_EQ(best_rational(BigFloat(0.75, 128)), BigRational(3, 4));
  EXPECT_EQ(best_rational(BigFloat(-2.5, 128)), BigRational(-5, 2));
  const BigFloat third = BigFloat(1.0, 128) / BigFloat(3.0, 128);
  EXPECT_EQ(best_rational(third), BigRational(1, 3));
}

TEST(Recognize, CyclotomicValues) {
  Rng rng(5);
  const std::vector<Cyclo12> cases{0, 1, BigRational(-3, 7), kI, -kI, kW, kW * kW, kI * BigRational(5, 2),
                                   Cyclo12(2) + kI * Cyclo12(3), Cyclo12(BigRational(1, 3)) - kW,
                                   Cyclo12::zeta_pow(1) * Cyclo12(4), Cyclo12::zeta_pow(7)};
  for (const auto& c : cases) {
    const auto r = recognize_cyclo(c.embed(128), 1e-25);
    ASSERT_TRUE(r.has_value()) << c.to_string();
    EXPECT_EQ(*r, c) << c.to_string();
  }
  const ComplexApprox pi_like(3.14159265358979, 0.0, 128);
  const auto r = recognize_cyclo(pi_like * BigFloat(1.0, 128), 1e-25, 100);
  EXPECT_FALSE(r.has_value());
}
