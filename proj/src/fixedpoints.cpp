#include "symbez/fixedpoints.hpp"

#include <algorithm>
#include <cmath>
#include <regex>
#include <set>
#include <stdexcept>

#include "symbez/parse.hpp"
#include "symbez/random.hpp"
#include "symbez/recognize.hpp"
#include "symbez/roots.hpp"

namespace symbez {

namespace {

using Matrix = std::vector<std::vector<Cyclo12>>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Matrix& m, int cols) {
  std::vector<int> pivots;
  size_t row = 0;
  for (int c = 0; c < cols && row < m.size(); ++c) {
    size_t piv = row;
    while (piv < m.size() && m[piv][static_cast<size_t>(c)].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    const Cyclo12 inv = m[row][static_cast<size_t>(c)].inverse();
    for (auto& x : m[row]) x *= inv;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][static_cast<size_t>(c)].is_zero()) continue;
      const Cyclo12 f = m[r][static_cast<size_t>(c)];
      for (size_t k = 0; k < m[r].size(); ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

Matrix nullspace(Matrix m, int cols) {
  const auto pivots = rref(m, cols);
  Matrix basis;
  for (int free = 0; free < cols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<Cyclo12> v(static_cast<size_t>(cols));
    v[static_cast<size_t>(free)] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[static_cast<size_t>(pivots[r])] = -m[r][static_cast<size_t>(free)];
    basis.push_back(std::move(v));
  }
  return basis;
}

struct FamilySpec {
  const char* cls;
  std::vector<const char*> coords;
  bool admissible;
  std::vector<long> excluded;
  const char* reason;
};

const char* kRepeat = "two equal coordinates: the Jacobian drops rank";
const char* kOnes = "all coordinates equal: every symmetric form through it is singular";
const char* kDiagonal = "diagonal point: symmetric curves share the tangent X + Y - 2aZ";
const char* kInfinity = "point [1:1:0]: symmetric curves share the tangent Z";

FixedPointFamily make_family(int dimension, const FamilySpec& s) {
  FixedPointFamily f;
  f.dimension = dimension;
  f.stabilizer = s.cls;
  f.admissible = s.admissible;
  f.reason = s.admissible ? "" : s.reason;
  if (s.coords.empty()) {
    f.all_points = true;
    f.admissible = true;
    f.text = "all points";
    return f;
  }
  static const std::regex a_re("\\ba\\b"), c_re("\\bc\\b");
  std::set<int> used;
  f.text = "[";
  for (size_t k = 0; k < s.coords.size(); ++k) {
    if (k != 0) f.text += ":";
    f.text += s.coords[k];
    std::string expr = std::regex_replace(std::regex_replace(s.coords[k], a_re, "X"), c_re, "Y");
    const MultiPoly p = parse_poly(expr, 3);
    PatternCoord pc;
    pc.constant = p.coefficient({0, 0, 0, 0});
    pc.params = {p.coefficient({1, 0, 0, 0}), p.coefficient({0, 1, 0, 0})};
    for (int j = 0; j < 2; ++j) {
      if (!pc.params[static_cast<size_t>(j)].is_zero()) used.insert(j);
    }
    f.pattern.push_back(std::move(pc));
  }
  f.text += "]";
  f.num_params = static_cast<int>(used.size());
  for (auto& pc : f.pattern) pc.params.resize(static_cast<size_t>(f.num_params));
  for (long v : s.excluded) f.excluded.emplace_back(v);
  return f;
}

std::vector<FixedPointFamily> build_catalog(int dimension) {
  std::vector<FamilySpec> specs;
  if (dimension == 2) {
    specs = {
        {"Trivial", {}, true, {}, ""},
        {"C2", {"-1", "1", "0"}, true, {}, ""},
        {"C2", {"1", "1", "0"}, false, {}, kInfinity},
        {"C2", {"a", "a", "1"}, false, {1}, kDiagonal},
        {"C3", {"omega", "omega^2", "1"}, true, {}, ""},
        {"C3", {"omega^2", "omega", "1"}, true, {}, ""},
        {"C3", {"1", "1", "1"}, false, {}, kOnes},
        {"S3", {"1", "1", "1"}, false, {}, kOnes},
    };
  } else if (dimension == 3) {
    specs = {
        {"Trivial", {}, true, {}, ""},
        {"C2o", {"a", "a", "c", "1"}, false, {}, kRepeat},
        {"C2o", {"a", "a", "1", "0"}, false, {}, kRepeat},
        {"C2o", {"1", "1", "0", "0"}, false, {}, kRepeat},
        {"C2o", {"-1", "1", "0", "0"}, false, {}, kRepeat},
        {"C2e", {"a", "-a", "-1", "1"}, true, {0, 1, -1}, ""},
        {"C2e", {"a", "a", "1", "1"}, false, {}, kRepeat},
        {"C2e", {"-1", "1", "0", "0"}, false, {}, kRepeat},
        {"C2e", {"1", "1", "a", "a"}, false, {}, kRepeat},
        {"C4", {"1", "1", "1", "1"}, false, {}, kOnes},
        {"C4", {"-1", "1", "-1", "1"}, false, {}, kRepeat},
        {"C4", {"I", "-1", "-I", "1"}, true, {}, ""},
        {"C4", {"-I", "-1", "I", "1"}, true, {}, ""},
        {"K4n", {"1", "-1", "-1", "1"}, false, {}, kRepeat},
        {"K4n", {"-1", "1", "-1", "1"}, false, {}, kRepeat},
        {"K4n", {"1", "1", "1", "1"}, false, {}, kOnes},
        {"K4n", {"-1", "-1", "1", "1"}, false, {}, kRepeat},
        {"K4", {"0", "0", "-1", "1"}, false, {}, kRepeat},
        {"K4", {"a", "a", "1", "1"}, false, {}, kRepeat},
        {"K4", {"-1", "1", "0", "0"}, false, {}, kRepeat},
        {"K4", {"1", "1", "a", "a"}, false, {}, kRepeat},
        {"D8", {"1", "1", "1", "1"}, false, {}, kOnes},
        {"D8", {"-1", "1", "-1", "1"}, false, {}, kRepeat},
        {"C3", {"a", "a", "a", "1"}, false, {}, kRepeat},
        {"C3", {"1", "1", "1", "0"}, false, {}, kRepeat},
        {"C3", {"omega", "omega^2", "1", "0"}, true, {}, ""},
        {"C3", {"omega^2", "omega", "1", "0"}, true, {}, ""},
        {"S3", {"1", "1", "1", "0"}, false, {}, kRepeat},
        {"S3", {"a", "a", "a", "1"}, false, {}, kRepeat},
        {"A4", {"1", "1", "1", "1"}, false, {}, kOnes},
        {"S4", {"1", "1", "1", "1"}, false, {}, kOnes},
    };
  } else {
    throw std::invalid_argument("fixed-point catalogs exist for dimensions 2 and 3 only");
  }
  std::vector<FixedPointFamily> out;
  for (const auto& s : specs) out.push_back(make_family(dimension, s));
  return out;
}

bool pairwise_distinct(const ProjPointExact& p) {
  for (int i = 0; i < p.size(); ++i) {
    for (int j = i + 1; j < p.size(); ++j) {
      if (p[i] == p[j]) return false;
    }
  }
  return true;
}

Matrix permutation_matrix(const Permutation& g) {
  const int n = g.size();
  Matrix m(static_cast<size_t>(n), std::vector<Cyclo12>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i) m[static_cast<size_t>(g(i))][static_cast<size_t>(i)] = 1;
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// Families

ProjPointExact FixedPointFamily::instantiate(std::span<const Cyclo12> params) const {
  if (all_points) throw std::invalid_argument("the trivial family has no pattern");
  if (static_cast<int>(params.size()) != num_params) throw std::invalid_argument("wrong number of family parameters");
  std::vector<Cyclo12> c;
  for (const auto& pc : pattern) {
    Cyclo12 v = pc.constant;
    for (size_t j = 0; j < params.size(); ++j) v += pc.params[j] * params[j];
    c.push_back(std::move(v));
  }
  return ProjPointExact(std::move(c));
}

std::optional<std::vector<Cyclo12>> FixedPointFamily::parameters_of(const ProjPointExact& p) const {
  if (p.size() != dimension + 1) return std::nullopt;
  if (all_points) return std::vector<Cyclo12>{};
  // Unknowns (lambda, a_1..a_k): lambda * p_i - sum_j a_j v_ji = constant_i.
  const int cols = num_params + 1;
  Matrix m;
  for (int i = 0; i < p.size(); ++i) {
    const auto& pc = pattern[static_cast<size_t>(i)];
    std::vector<Cyclo12> row{p[i]};
    for (const auto& v : pc.params) row.push_back(-v);
    row.push_back(pc.constant);
    m.push_back(std::move(row));
  }
  const auto pivots = rref(m, cols);
  for (size_t r = pivots.size(); r < m.size(); ++r) {
    if (!m[r][static_cast<size_t>(cols)].is_zero()) return std::nullopt;
  }
  std::vector<Cyclo12> sol(static_cast<size_t>(cols));
  for (size_t r = 0; r < pivots.size(); ++r) sol[static_cast<size_t>(pivots[r])] = m[r][static_cast<size_t>(cols)];
  if (sol[0].is_zero()) return std::nullopt;
  return std::vector<Cyclo12>(sol.begin() + 1, sol.end());
}

std::vector<UPoly> FixedPointFamily::univariate_pattern() const {
  if (num_params != 1) throw std::invalid_argument("family does not have exactly one parameter");
  std::vector<UPoly> out;
  for (const auto& pc : pattern) out.emplace_back(std::vector<Cyclo12>{pc.constant, pc.params[0]});
  return out;
}

const std::vector<FixedPointFamily>& fixed_point_catalog(int dimension) {
  static const auto p2 = build_catalog(2);
  static const auto p3 = build_catalog(3);
  if (dimension == 2) return p2;
  if (dimension == 3) return p3;
  throw std::invalid_argument("fixed-point catalogs exist for dimensions 2 and 3 only");
}

std::vector<FixedPointFamily> catalog(int dimension, const std::string& class_name) {
  subgroup_class(dimension + 1, class_name);  // validates the name
  std::vector<FixedPointFamily> out;
  for (const auto& f : fixed_point_catalog(dimension)) {
    if (f.stabilizer == class_name) out.push_back(f);
  }
  return out;
}

std::vector<ProjPointExact> catalog_special_points(int dimension, bool admissible_only) {
  std::set<ProjPointExact> pts;
  for (const auto& f : fixed_point_catalog(dimension)) {
    if (!f.is_isolated() || (admissible_only && !f.admissible)) continue;
    for (auto& q : orbit(f.instantiate())) pts.insert(std::move(q));
  }
  return {pts.begin(), pts.end()};
}

// ---------------------------------------------------------------------------
// Independent check of the catalog

std::vector<std::vector<std::vector<Cyclo12>>> fixed_subspaces(const SubgroupClass& h) {
  const int n = h.degree;
  std::vector<std::vector<std::vector<Cyclo12>>> out;
  if (h.generators.empty()) {
    Matrix id(static_cast<size_t>(n), std::vector<Cyclo12>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i) id[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    out.push_back(id);
    return out;
  }
  std::vector<Matrix> mats;
  for (const auto& g : h.generators) mats.push_back(permutation_matrix(g));
  const size_t r = mats.size();
  std::vector<int> expo(r, 0);
  for (;;) {
    Matrix stacked;
    for (size_t k = 0; k < r; ++k) {
      const Cyclo12 lambda = Cyclo12::zeta_pow(expo[k]);
      for (int i = 0; i < n; ++i) {
        auto row = mats[k][static_cast<size_t>(i)];
        row[static_cast<size_t>(i)] -= lambda;
        stacked.push_back(std::move(row));
      }
    }
    auto basis = nullspace(std::move(stacked), n);
    if (!basis.empty()) out.push_back(std::move(basis));
    size_t k = 0;
    while (k < r && ++expo[k] == 12) expo[k++] = 0;
    if (k == r) break;
  }
  return out;
}

bool CatalogReport::all_ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CatalogCheck& c) { return c.ok; });
}

CatalogReport verify_catalog_by_stabilizer(int dimension, std::uint64_t seed) {
  CatalogReport report;
  report.dimension = dimension;
  const int n = dimension + 1;
  const auto& fams = fixed_point_catalog(dimension);
  Rng rng(seed);
  auto add = [&](const std::string& cls, const std::string& fam, const std::string& prop, bool ok, std::string detail) {
    report.checks.push_back({cls, fam, prop, ok, std::move(detail)});
  };

  // Parameter samples: rationals plus omega and i.
  const std::vector<Cyclo12> samples{Cyclo12(2), Cyclo12(-3), Cyclo12(BigRational(1, 2)), Cyclo12(BigRational(-7, 5)),
                                     Cyclo12::omega(), Cyclo12::imag_unit()};
  const std::vector<Cyclo12> generic{Cyclo12(BigRational(7, 3)), Cyclo12(BigRational(-11, 5))};

  for (const auto& fam : fams) {
    if (fam.all_points) {
      const auto spaces = fixed_subspaces(fam.subgroup());
      const bool whole = spaces.size() == 1 && static_cast<int>(spaces.front().size()) == n;
      add(fam.stabilizer, "all points", "every point is fixed", whole, whole ? "" : "fixed set is not the whole space");
      std::vector<Cyclo12> v;
      for (int i = 0; i < n; ++i) v.push_back(make_rational(rng.uniform(-30, 30), rng.uniform(1, 7)));
      const ProjPointExact p(v);
      const std::string got = stabilizer(p).cls.name;
      add(fam.stabilizer, "all points", "generic stabilizer", !pairwise_distinct(p) || got == fam.stabilizer,
          p.to_string() + " has stabilizer " + got);
      continue;
    }
    const auto h = fam.subgroup().elements();
    std::vector<std::vector<Cyclo12>> params;
    if (fam.num_params == 0) {
      params.emplace_back();
    } else {
      for (const auto& a : samples) {
        if (std::find(fam.excluded.begin(), fam.excluded.end(), a) != fam.excluded.end()) continue;
        if (fam.num_params == 1) {
          params.push_back({a});
        } else {
          for (const auto& c : samples) params.push_back({a, c});
        }
      }
    }
    bool sound = true;
    std::string bad;
    for (const auto& prm : params) {
      ProjPointExact p;
      try {
        p = fam.instantiate(prm);
      } catch (const std::invalid_argument&) {
        continue;
      }
      const auto st = stabilizer(p).elements;
      const std::set<Permutation> sts(st.begin(), st.end());
      for (const auto& g : h) {
        if (!sts.contains(g)) {
          sound = false;
          bad = p.to_string() + " not fixed by " + g.to_string();
        }
      }
    }
    add(fam.stabilizer, fam.text, "fixed by subgroup", sound, bad);

    const ProjPointExact gen = fam.instantiate(std::span<const Cyclo12>(generic.data(), static_cast<size_t>(fam.num_params)));
    const bool distinct = pairwise_distinct(gen);
    add(fam.stabilizer, fam.text, "admissible iff coordinates distinct", distinct == fam.admissible,
        gen.to_string() + (distinct ? " has distinct coordinates" : " repeats a coordinate"));
    if (fam.admissible) {
      const std::string got = stabilizer(gen).cls.name;
      add(fam.stabilizer, fam.text, "generic stabilizer", got == fam.stabilizer, "generic member has stabilizer " + got);
    }
  }

  for (const auto& cls : subgroup_catalog(n)) {
    if (cls.name == "Trivial") continue;
    std::vector<FixedPointFamily> mine;
    for (const auto& f : fams) {
      if (f.stabilizer == cls.name) mine.push_back(f);
    }
    const auto spaces = fixed_subspaces(cls);
    bool finite = true;
    bool covered = true;
    std::string missing;
    std::set<ProjPointExact> eigen_points;
    for (const auto& basis : spaces) {
      if (basis.size() > 1) finite = false;
      const size_t m = basis.size();
      for (unsigned mask = 1; mask < (1U << m); ++mask) {
        for (int rep = 0; rep < 3; ++rep) {
          std::vector<Cyclo12> v(static_cast<size_t>(n));
          for (size_t b = 0; b < m; ++b) {
            if ((mask & (1U << b)) == 0) continue;
            Cyclo12 coef = make_rational(rng.uniform(1, 9) * (rng.uniform(0, 1) != 0 ? 1 : -1), rng.uniform(1, 4));
            if (rep == 2) coef *= Cyclo12::zeta_pow(static_cast<int>(rng.uniform(0, 11)));
            if (m == 1) coef = 1;
            for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] += coef * basis[b][static_cast<size_t>(i)];
          }
          const ProjPointExact p(v);
          if (m == 1) eigen_points.insert(p);
          const bool hit = std::any_of(mine.begin(), mine.end(), [&](const FixedPointFamily& f) {
            return f.parameters_of(p).has_value();
          });
          if (!hit) {
            covered = false;
            missing = p.to_string();
          }
        }
      }
    }
    add(cls.name, "*", "every fixed point is listed", covered, covered ? "" : "unlisted fixed point " + missing);
    if (finite) {
      std::set<ProjPointExact> listed;
      bool all_isolated = true;
      for (const auto& f : mine) {
        if (!f.is_isolated()) {
          all_isolated = false;
          continue;
        }
        listed.insert(f.instantiate());
      }
      const bool same = all_isolated && listed == eigen_points;
      add(cls.name, "*", "finite fixed set matches exactly", same,
          std::to_string(eigen_points.size()) + " fixed points, " + std::to_string(listed.size()) + " listed");
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Gradients, tangents and obstructions

std::vector<Cyclo12> gradient_at(const MultiPoly& f, const ProjPointExact& p) {
  if (f.num_vars() != p.size()) throw std::invalid_argument("point and polynomial dimension differ");
  std::vector<Cyclo12> g;
  for (int v = 0; v < f.num_vars(); ++v) g.push_back(evaluate_exact(partial_derivative(f, v), p.coords()));
  return g;
}

namespace {

std::vector<Cyclo12> normalize_first(std::vector<Cyclo12> v) {
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    const Cyclo12 inv = x.inverse();
    for (auto& y : v) y *= inv;
    break;
  }
  return v;
}

bool all_zero(const std::vector<Cyclo12>& v) {
  return std::all_of(v.begin(), v.end(), [](const Cyclo12& x) { return x.is_zero(); });
}

}  // namespace

std::vector<Cyclo12> tangent_line_p2(const MultiPoly& f, const ProjPointExact& p) {
  if (f.num_vars() != 3) throw std::invalid_argument("tangent lines are defined here for plane curves");
  if (!evaluate_exact(f, p.coords()).is_zero()) throw std::invalid_argument("point is not on the curve");
  auto g = gradient_at(f, p);
  if (all_zero(g)) throw std::domain_error("singular point: the gradient vanishes");
  return normalize_first(std::move(g));
}

int exact_rank(std::vector<std::vector<Cyclo12>> rows) {
  if (rows.empty()) return 0;
  const int cols = static_cast<int>(rows.front().size());
  return static_cast<int>(rref(rows, cols).size());
}

std::string Obstruction::kind_name() const {
  switch (kind) {
    case ObstructionKind::kNone: return "none";
    case ObstructionKind::kSingularPoint: return "singular_point";
    case ObstructionKind::kSharedTangent: return "shared_tangent";
    case ObstructionKind::kRankDrop: return "rank_drop";
  }
  return "none";
}

std::string Obstruction::to_string() const {
  switch (kind) {
    case ObstructionKind::kNone: return "no obstruction at " + point.to_string();
    case ObstructionKind::kSingularPoint:
      return "input " + std::to_string(singular_index + 1) + " is singular at " + point.to_string();
    case ObstructionKind::kSharedTangent: {
      MultiPoly l(3);
      for (int v = 0; v < 3; ++v) l += MultiPoly::variable(3, v) * line[static_cast<size_t>(v)];
      return "shared tangent " + l.to_string() + " at " + point.to_string();
    }
    case ObstructionKind::kRankDrop:
      return "Jacobian rank " + std::to_string(jacobian_rank) + " at " + point.to_string() +
             (repeated_coordinates ? " (repeated coordinates)" : "");
  }
  return "";
}

Obstruction obstruction(const ProjPointExact& p, std::span<const MultiPoly> fs) {
  const int n = p.size();
  if (n != 3 && n != 4) throw std::invalid_argument("obstructions are defined for the plane and space");
  if (static_cast<int>(fs.size()) != n - 1) throw std::invalid_argument("need one input fewer than coordinates");
  Obstruction o;
  o.point = p;
  for (const auto& f : fs) {
    if (!evaluate_exact(f, p.coords()).is_zero()) throw std::invalid_argument("an input does not vanish at " + p.to_string());
    o.jacobian.push_back(gradient_at(f, p));
  }
  for (int i = 0; i < n && !o.repeated_coordinates; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (p[i] == p[j]) o.repeated_coordinates = true;
    }
  }
  o.jacobian_rank = exact_rank(o.jacobian);
  for (size_t k = 0; k < o.jacobian.size(); ++k) {
    if (all_zero(o.jacobian[k])) {
      o.kind = ObstructionKind::kSingularPoint;
      o.singular_index = static_cast<int>(k);
      return o;
    }
  }
  if (o.jacobian_rank < n - 1) {
    if (n == 3) {
      o.kind = ObstructionKind::kSharedTangent;
      o.line = normalize_first(o.jacobian[0]);
    } else {
      o.kind = ObstructionKind::kRankDrop;
    }
  }
  return o;
}

// ---------------------------------------------------------------------------
// Family membership

FamilyRoots restricted_family_roots(std::span<const MultiPoly> fs, const FixedPointFamily& family, long precision_bits) {
  const auto pat = family.univariate_pattern();
  FamilyRoots out;
  UPoly g;
  for (const auto& f : fs) {
    if (f.num_vars() != static_cast<int>(pat.size())) throw std::invalid_argument("family and polynomial dimension differ");
    std::vector<MultiPoly> subs;
    for (const auto& u : pat) subs.push_back(u.to_multipoly(f.num_vars(), 0));
    const UPoly r = UPoly::from_multipoly(compose(f, subs), 0);
    g = gcd(g, r);
  }
  out.gcd = g;
  if (g.is_zero()) {
    out.identically_zero = true;
    return out;
  }
  if (g.degree() <= 0) return out;
  auto excluded = [&](const Cyclo12& a) {
    return std::find(family.excluded.begin(), family.excluded.end(), a) != family.excluded.end();
  };
  if (g.degree() == 1) {
    const Cyclo12 a = -g.coeff(0) / g.coeff(1);
    if (!excluded(a)) out.exact.push_back(a);
    return out;
  }
  const double tol = std::exp2(-0.4 * static_cast<double>(precision_bits));
  for (const auto& rc : roots_with_exact_multiplicity(g, precision_bits)) {
    const auto c = recognize_cyclo(rc.value, tol);
    if (c && g.evaluate(*c).is_zero()) {
      if (!excluded(*c) && std::find(out.exact.begin(), out.exact.end(), *c) == out.exact.end()) out.exact.push_back(*c);
    } else {
      const bool near_excluded = std::any_of(family.excluded.begin(), family.excluded.end(), [&](const Cyclo12& e) {
        return (rc.value - e.embed(precision_bits)).abs().to_double() < tol;
      });
      if (!near_excluded) out.numeric.push_back(rc.value);
    }
  }
  std::sort(out.exact.begin(), out.exact.end());
  return out;
}

std::vector<FamilyMembership> special_point_membership(const MultiPoly& f) {
  const int dimension = f.num_vars() - 1;
  std::vector<FamilyMembership> out;
  for (const auto& fam : fixed_point_catalog(dimension)) {
    if (!fam.admissible || fam.all_points) continue;
    if (fam.is_isolated()) {
      const ProjPointExact p = fam.instantiate();
      if (evaluate_exact(f, p.coords()).is_zero()) out.push_back({fam, false, {p}, {}});
    } else if (fam.num_params == 1) {
      const MultiPoly fs[] = {f};
      const FamilyRoots r = restricted_family_roots(fs, fam);
      if (r.identically_zero) {
        out.push_back({fam, true, {}, {}});
      } else if (!r.exact.empty()) {
        FamilyMembership m{fam, false, {}, r.exact};
        for (const auto& a : r.exact) m.points.push_back(fam.instantiate(std::span<const Cyclo12>(&a, 1)));
        out.push_back(std::move(m));
      }
    }
  }
  return out;
}

}  // namespace symbez
