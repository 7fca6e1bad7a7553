#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "symbez/errors.hpp"
#include "symbez/group.hpp"
#include "test_support.hpp"

using namespace symbez;
using symbez::testing::random_cyclo;

namespace {

const Cyclo12 kW = Cyclo12::omega();
const Cyclo12 kI = Cyclo12::imag_unit();

ProjPointExact pt(std::vector<Cyclo12> c) { return ProjPointExact(std::move(c)); }

ProjPointExact random_point(Rng& rng, int n) {
  std::vector<Cyclo12> c;
  for (int k = 0; k < n; ++k) {
    // Small integers make coincidences (nontrivial stabilizers) common.
    switch (rng.uniform(0, 3)) {
      case 0: c.emplace_back(rng.uniform(-2, 2)); break;
      case 1: c.push_back(Cyclo12::zeta_pow(static_cast<int>(rng.uniform(0, 11)))); break;
      default: c.push_back(random_cyclo(rng)); break;
    }
  }
  if (std::all_of(c.begin(), c.end(), [](const Cyclo12& x) { return x.is_zero(); })) c.back() = 1;
  return pt(c);
}

std::set<Permutation> as_set(const std::vector<Permutation>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Catalog, ClassesPresentOnce) {
  EXPECT_EQ(subgroup_catalog(3).size(), 4U);
  EXPECT_EQ(subgroup_catalog(4).size(), 11U);
  for (int n : {3, 4}) {
    std::set<std::string> names;
    for (const auto& c : subgroup_catalog(n)) {
      names.insert(c.name);
      EXPECT_EQ(group_order(n) % c.order, 0);
      EXPECT_EQ(static_cast<int>(c.elements().size()), c.order);
      EXPECT_EQ(classify_subgroup(c.elements()), c) << c.name;
    }
    EXPECT_EQ(names.size(), subgroup_catalog(n).size());
  }
  EXPECT_EQ(subgroup_class(4, "D8").order, 8);
  EXPECT_EQ(subgroup_class(4, "A4").order, 12);
  EXPECT_THROW(subgroup_class(4, "C5"), std::invalid_argument);
}

TEST(Catalog, EveryConjugateClassifiesToItsClass) {
  // Conjugating each representative by every group element must not change the class.
  for (int n : {3, 4}) {
    for (const auto& c : subgroup_catalog(n)) {
      for (const auto& g : group_elements(n)) {
        std::vector<Permutation> conj;
        for (const auto& h : c.elements()) conj.push_back(g * h * g.inverse());
        EXPECT_EQ(classify_subgroup(conj), c);
      }
    }
  }
}

TEST(Catalog, SubgroupCountOfS4) {
  // S4 has 30 subgroups; enumerate subgroups generated by at most two elements.
  std::set<std::vector<Permutation>> subgroups;
  const auto& g = group_elements(4);
  for (const auto& a : g) {
    for (const auto& b : g) {
      const std::vector<Permutation> gens{a, b};
      subgroups.insert(generate_subgroup(4, gens));
    }
  }
  EXPECT_EQ(subgroups.size(), 30U);
  std::set<std::string> classes;
  for (const auto& h : subgroups) classes.insert(classify_subgroup(h).name);
  EXPECT_EQ(classes.size(), 11U);
}

TEST(Classify, Examples) {
  const auto e = Permutation::identity(4);
  std::vector<Permutation> c2o{e, Permutation::transposition(4, 0, 1)};
  EXPECT_EQ(classify_subgroup(c2o).name, "C2o");
  const auto dt = Permutation::from_cycles(4, {{0, 1}, {2, 3}});
  std::vector<Permutation> c2e{e, dt};
  EXPECT_EQ(classify_subgroup(c2e).name, "C2e");
  std::vector<Permutation> k4n{e, dt, Permutation::from_cycles(4, {{0, 2}, {1, 3}}),
                               Permutation::from_cycles(4, {{0, 3}, {1, 2}})};
  EXPECT_EQ(classify_subgroup(k4n).name, "K4n");
  std::vector<Permutation> k4{e, dt, Permutation::transposition(4, 0, 1), Permutation::transposition(4, 2, 3)};
  EXPECT_EQ(classify_subgroup(k4).name, "K4");
  std::vector<Permutation> bad{e, Permutation::transposition(4, 0, 1), Permutation::transposition(4, 1, 2)};
  EXPECT_THROW(classify_subgroup(bad), std::invalid_argument);
}

TEST(Points, CanonicalForm) {
  const auto p = pt({2, -2, 0});
  EXPECT_EQ(p, pt({-1, 1, 0}));
  EXPECT_EQ(p.to_string(), "[-1:1:0]");
  EXPECT_EQ(pt({kW * 3, kW * kW * 3, 3}), pt({kW, kW * kW, 1}));
  EXPECT_THROW(pt({0, 0, 0}), std::invalid_argument);
  EXPECT_TRUE(pt({-1, 0, 1}).is_real());
  EXPECT_FALSE(pt({kW, kW * kW, 1}).is_real());
}

TEST(Act, Examples) {
  const auto swap01 = Permutation::transposition(3, 0, 1);
  EXPECT_EQ(act(swap01, pt({-1, 1, 0})), pt({-1, 1, 0}));
  const auto p = pt({2, 3, 1});
  EXPECT_EQ(act(Permutation::identity(3), p), p);
  const auto cyc = Permutation::cycle(3, {0, 1, 2});
  EXPECT_EQ(act(cyc, pt({kW, kW * kW, 1})), pt({1, kW, kW * kW}));
  EXPECT_EQ(act(cyc, pt({kW, kW * kW, 1})), pt({kW, kW * kW, 1}));
}

TEST(Act, IsAGroupAction) {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const int n = 3 + t % 2;
    const auto p = random_point(rng, n);
    const auto& g = group_elements(n);
    const auto& a = g[static_cast<size_t>(rng.uniform(0, static_cast<long>(g.size()) - 1))];
    const auto& b = g[static_cast<size_t>(rng.uniform(0, static_cast<long>(g.size()) - 1))];
    EXPECT_EQ(act(a, act(b, p)), act(a * b, p));
  }
}

TEST(Stabilizer, Examples) {
  EXPECT_EQ(stabilizer(pt({-1, 1, 0})).cls.name, "C2");
  EXPECT_EQ(stabilizer(pt({kW, kW * kW, 1})).cls.name, "C3");
  EXPECT_EQ(stabilizer(pt({kI, -1, -kI, 1})).cls.name, "C4");
  EXPECT_EQ(stabilizer(pt({1, 1, 1})).cls.name, "S3");
  EXPECT_EQ(stabilizer(pt({2, 3, 1})).cls.name, "Trivial");
  EXPECT_EQ(stabilizer(pt({1, -1, -1, 1})).cls.name, "D8");
  EXPECT_EQ(stabilizer(pt({kW, kW * kW, 1, 0})).cls.name, "C3");
  EXPECT_EQ(stabilizer(pt({5, -5, -1, 1})).cls.name, "C2e");
}

TEST(Orbit, Examples) {
  const auto o = orbit(pt({-1, 1, 0}));
  const std::vector<ProjPointExact> expected{pt({-1, 0, 1}), pt({-1, 1, 0}), pt({0, -1, 1})};
  EXPECT_EQ(as_set(stabilizer(pt({-1, 1, 0})).elements).size(), 2U);
  EXPECT_EQ(std::set<ProjPointExact>(o.begin(), o.end()), std::set<ProjPointExact>(expected.begin(), expected.end()));
  const auto w = orbit(pt({kW, kW * kW, 1}));
  ASSERT_EQ(w.size(), 2U);
  EXPECT_TRUE(std::find(w.begin(), w.end(), pt({kW * kW, kW, 1})) != w.end());
  EXPECT_EQ(orbit(pt({2, 3, 1})).size(), 6U);
  EXPECT_EQ(orbit(pt({kI, -1, -kI, 1})).size(), 6U);
}

TEST(Properties, OrbitStabilizerAndConjugation) {
  Rng rng(123);
  for (int t = 0; t < 200; ++t) {
    const int n = 3 + t % 2;
    const auto p = random_point(rng, n);
    const auto st = stabilizer(p);
    EXPECT_EQ(orbit(p).size() * st.elements.size(), static_cast<size_t>(group_order(n)));
    const auto& g = group_elements(n);
    const auto& s = g[static_cast<size_t>(rng.uniform(0, static_cast<long>(g.size()) - 1))];
    std::vector<Permutation> conj;
    for (const auto& h : st.elements) conj.push_back(s * h * s.inverse());
    EXPECT_EQ(as_set(stabilizer(act(s, p)).elements), as_set(conj));
    EXPECT_EQ(act(s, p).conj(), act(s, p.conj()));
  }
}

TEST(Decompose, PaperExampleFivePoints) {
  const std::vector<ProjPointExact> pts{pt({kW, kW * kW, 1}), pt({kW * kW, kW, 1}), pt({-1, 0, 1}),
                                        pt({0, -1, 1}), pt({1, -1, 0})};
  const auto d = decompose_orbits_detailed(pts, 3);
  EXPECT_EQ(d.type.to_string(), "[S3/C3] + [S3/C2]");
  EXPECT_EQ(d.type.size(), 5);
  EXPECT_EQ(d.orbit_id, (std::vector<int>{0, 0, 1, 1, 1}));
  EXPECT_EQ(d.stabilizers[4].name, "C2");
}

TEST(Decompose, EmptyGenericAndErrors) {
  EXPECT_EQ(decompose_orbits(std::span<const ProjPointExact>{}, 3).to_string(), "0");
  EXPECT_TRUE(decompose_orbits(std::span<const ProjPointExact>{}, 3).empty());
  const auto gen = orbit(pt({2, 3, 1}));
  EXPECT_EQ(decompose_orbits(gen, 3).to_string(), "[S3]");
  std::vector<ProjPointExact> partial(gen.begin(), gen.end() - 1);
  EXPECT_THROW(decompose_orbits(partial, 3), NotClosedError);
}

TEST(Decompose, ShuffleInvarianceAndSize) {
  Rng rng(77);
  for (int t = 0; t < 40; ++t) {
    const int n = 3 + t % 2;
    std::vector<ProjPointExact> pts;
    for (int k = 0; k < 3; ++k) {
      const auto o = orbit(random_point(rng, n));
      for (const auto& q : o) {
        if (std::find(pts.begin(), pts.end(), q) == pts.end()) pts.push_back(q);
      }
    }
    const auto a = decompose_orbits(pts, n);
    EXPECT_EQ(a.size(), static_cast<int>(pts.size()));
    for (size_t k = pts.size(); k > 1; --k) {
      std::swap(pts[k - 1], pts[static_cast<size_t>(rng.uniform(0, static_cast<long>(k) - 1))]);
    }
    EXPECT_EQ(decompose_orbits(pts, n), a);
  }
}

TEST(OrbitTypeRendering, SortedByStabilizerOrder) {
  OrbitType t(3);
  t.add(subgroup_class(3, "Trivial"), 2);
  t.add(subgroup_class(3, "C2"));
  EXPECT_EQ(t.to_string(), "[S3/C2] + 2[S3]");
  EXPECT_EQ(t.size(), 15);
  EXPECT_EQ(t.orbit_count(), 3);
  OrbitType u(4);
  u.add(subgroup_class(4, "C4"));
  EXPECT_EQ(u.to_string(), "[S4/C4]");
  EXPECT_EQ(u.size(), 6);
}

TEST(Numeric, MatchesExactBehaviour) {
  const auto wp = ProjPointNumeric::from_exact(pt({kW, kW * kW, 1}));
  EXPECT_EQ(stabilizer(wp).cls.name, "C3");
  EXPECT_EQ(orbit(wp).size(), 2U);
  EXPECT_FALSE(wp.is_real());
  EXPECT_TRUE(ProjPointNumeric::from_exact(pt({-1, 0, 1})).is_real());
  // A scalar multiple is the same projective point.
  const auto c4 = pt({kI, -1, -kI, 1});
  std::vector<ComplexApprox> scaled;
  for (const auto& c : c4.coords()) scaled.push_back(embed(c * Cyclo12(3, 1, 0, 2)));
  const ProjPointNumeric s(scaled);
  EXPECT_LT(s.distance(ProjPointNumeric::from_exact(c4)), 1e-15);
  EXPECT_EQ(stabilizer(s).cls.name, "C4");
}

TEST(Numeric, DecompositionAgreesWithExact) {
  Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    const int n = 3 + t % 2;
    std::vector<ProjPointExact> pts;
    for (int k = 0; k < 2; ++k) {
      for (const auto& q : orbit(random_point(rng, n))) {
        if (std::find(pts.begin(), pts.end(), q) == pts.end()) pts.push_back(q);
      }
    }
    std::vector<ProjPointNumeric> num;
    for (const auto& q : pts) num.push_back(ProjPointNumeric::from_exact(q));
    EXPECT_EQ(decompose_orbits(num, n), decompose_orbits(pts, n));
  }
}
