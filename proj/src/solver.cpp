#include "symbez/solver.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

#include "symbez/errors.hpp"
#include "symbez/random.hpp"
#include "symbez/recognize.hpp"
#include "symbez/roots.hpp"
#include "symbez/upoly.hpp"

namespace symbez {

std::string transversality_name(Transversality t) {
  switch (t) {
    case Transversality::kTransverse: return "transverse";
    case Transversality::kNotTransverse: return "not transverse";
    case Transversality::kUndetermined: return "undetermined";
  }
  return "undetermined";
}

int IntersectionReport::multiplicity_sum() const {
  int s = 0;
  for (const auto& p : points) s += p.multiplicity;
  return s;
}

// ---------------------------------------------------------------------------
// Resultants

MultiPoly sylvester_resultant(const MultiPoly& f, const MultiPoly& g, int var) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of a zero polynomial");
  const int n = f.num_vars();
  const auto fc = coefficients_in(f, var);
  const auto gc = coefficients_in(g, var);
  const int m = static_cast<int>(fc.size()) - 1;
  const int l = static_cast<int>(gc.size()) - 1;
  if (m == 0) return f.pow(static_cast<unsigned>(l));
  if (l == 0) return g.pow(static_cast<unsigned>(m));
  const int size = m + l;
  std::vector<std::vector<MultiPoly>> a(static_cast<size_t>(size), std::vector<MultiPoly>(static_cast<size_t>(size), MultiPoly(n)));
  for (int i = 0; i < l; ++i) {
    for (int k = 0; k <= m; ++k) a[static_cast<size_t>(i)][static_cast<size_t>(i + m - k)] = fc[static_cast<size_t>(k)];
  }
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k <= l; ++k) a[static_cast<size_t>(l + i)][static_cast<size_t>(i + l - k)] = gc[static_cast<size_t>(k)];
  }
  // Bareiss: every division below is exact.
  MultiPoly prev = MultiPoly::constant(n, 1);
  bool negate = false;
  for (int k = 0; k + 1 < size; ++k) {
    const auto kk = static_cast<size_t>(k);
    if (a[kk][kk].is_zero()) {
      size_t r = kk + 1;
      while (r < static_cast<size_t>(size) && a[r][kk].is_zero()) ++r;
      if (r == static_cast<size_t>(size)) return MultiPoly(n);
      std::swap(a[kk], a[r]);
      negate = !negate;
    }
    for (size_t i = kk + 1; i < static_cast<size_t>(size); ++i) {
      for (size_t j = kk + 1; j < static_cast<size_t>(size); ++j) {
        a[i][j] = divide_exact(a[kk][kk] * a[i][j] - a[i][kk] * a[kk][j], prev);
      }
      a[i][kk] = MultiPoly(n);
    }
    prev = a[kk][kk];
  }
  MultiPoly det = a[static_cast<size_t>(size - 1)][static_cast<size_t>(size - 1)];
  return negate ? -det : det;
}

namespace {

// Newton interpolation through (nodes[k], values[k]).
UPoly interpolate(const std::vector<Cyclo12>& nodes, std::vector<Cyclo12> dd) {
  const size_t n = nodes.size();
  for (size_t j = 1; j < n; ++j) {
    for (size_t i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - j]);
  }
  UPoly p = UPoly::constant(dd[n - 1]);
  for (size_t k = n - 1; k-- > 0;) p = p * UPoly::linear_root(nodes[k]) + UPoly::constant(dd[k]);
  return p;
}

std::vector<Cyclo12> integer_nodes(int count) {
  std::vector<Cyclo12> out;
  for (int k = 0; k < count; ++k) out.emplace_back(static_cast<long>((k % 2 == 0 ? 1 : -1) * ((k + 1) / 2)));
  return out;
}

// f with every variable but `var` fixed: values[v] for v != var.
UPoly specialize(const MultiPoly& f, int var, const std::vector<Cyclo12>& values) {
  std::vector<Cyclo12> c(static_cast<size_t>(std::max(f.degree_in(var) + 1, 0)));
  for (const auto& [e, v] : f.terms()) {
    Cyclo12 t = v;
    for (int k = 0; k < f.num_vars(); ++k) {
      if (k != var && e[static_cast<size_t>(k)] != 0) t *= values[static_cast<size_t>(k)].pow(static_cast<unsigned>(e[static_cast<size_t>(k)]));
    }
    c[static_cast<size_t>(e[static_cast<size_t>(var)])] += t;
  }
  return UPoly(std::move(c));
}

// Numeric coefficients in `var` at a complex point (other coordinates from values).
std::vector<ComplexApprox> specialize_numeric(const MultiPoly& f, int var, const std::vector<ComplexApprox>& values) {
  const long prec = values.front().precision_bits();
  const auto coeffs = coefficients_in(f, var);
  std::vector<ComplexApprox> out;
  for (const auto& c : coeffs) out.push_back(evaluate_numeric(c, values));
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  if (out.empty()) out.emplace_back(0.0, 0.0, prec);
  return out;
}

// Res_var(f, g) with both leading coefficients in var nonzero constants; the
// other occurring variable is `x`. Evaluation at integer nodes plus Newton
// interpolation.
UPoly resultant_by_interpolation(const MultiPoly& f, const MultiPoly& g, int var, int x, int degree_bound) {
  const auto nodes = integer_nodes(degree_bound + 1);
  std::vector<Cyclo12> values;
  std::vector<Cyclo12> point(static_cast<size_t>(f.num_vars()), Cyclo12(0));
  for (const auto& t : nodes) {
    point[static_cast<size_t>(x)] = t;
    values.push_back(resultant(specialize(f, var, point), specialize(g, var, point)));
  }
  return interpolate(nodes, std::move(values));
}

// ---------------------------------------------------------------------------
// Numerics

double rel_residual(const MultiPoly& f, std::span<const ComplexApprox> p) {
  return evaluate_numeric(f, p).abs().to_double() / f.coefficient_norm1();
}

int largest_index(std::span<const ComplexApprox> p) {
  int k = 0;
  double best = -1.0;
  for (int i = 0; i < static_cast<int>(p.size()); ++i) {
    const double a = std::abs(p[static_cast<size_t>(i)].to_complex());
    if (a > best) {
      best = a;
      k = i;
    }
  }
  return k;
}

// Solves a x = b by Gaussian elimination with partial pivoting. Returns false
// for a numerically singular matrix.
bool solve_small(std::vector<std::vector<ComplexApprox>> a, std::vector<ComplexApprox>& b) {
  const size_t n = b.size();
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    for (size_t r = c + 1; r < n; ++r) {
      if (a[r][c].abs() > a[piv][c].abs()) piv = r;
    }
    if (a[piv][c].is_zero()) return false;
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    for (size_t r = c + 1; r < n; ++r) {
      const ComplexApprox f = a[r][c] / a[c][c];
      for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (size_t c = n; c-- > 0;) {
    for (size_t k = c + 1; k < n; ++k) b[c] -= a[c][k] * b[k];
    b[c] = b[c] / a[c][c];
  }
  return true;
}

struct System {
  int n = 3;
  std::vector<MultiPoly> fs;
  std::vector<std::vector<MultiPoly>> partials;
  SolveOptions opt;
  long prec = kDefaultPrecisionBits;

  System(std::vector<MultiPoly> inputs, const SolveOptions& o, long p) : n(inputs.front().num_vars()), fs(std::move(inputs)), opt(o), prec(p) {
    for (const auto& f : fs) {
      std::vector<MultiPoly> row;
      for (int v = 0; v < n; ++v) row.push_back(partial_derivative(f, v));
      partials.push_back(std::move(row));
    }
  }

  double residual(std::span<const ComplexApprox> p) const {
    double r = 0.0;
    for (const auto& f : fs) r = std::max(r, rel_residual(f, p));
    return r;
  }

  // Newton iteration in the chart of the largest coordinate.
  void polish(std::vector<ComplexApprox>& p, int iterations = 8) const {
    const int k = largest_index(p);
    const ComplexApprox s = ComplexApprox(1.0, 0.0, prec) / p[static_cast<size_t>(k)];
    for (auto& c : p) c = c * s;
    const size_t m = fs.size();
    double last_step = 1.0;
    for (int it = 0; it < iterations; ++it) {
      std::vector<ComplexApprox> rhs;
      std::vector<std::vector<ComplexApprox>> jac;
      for (size_t i = 0; i < m; ++i) {
        rhs.push_back(-evaluate_numeric(fs[i], p));
        std::vector<ComplexApprox> row;
        for (int v = 0; v < n; ++v) {
          if (v != k) row.push_back(evaluate_numeric(partials[i][static_cast<size_t>(v)], p));
        }
        jac.push_back(std::move(row));
      }
      if (!solve_small(std::move(jac), rhs)) return;
      std::vector<ComplexApprox> q = p;
      size_t j = 0;
      double step = 0.0;
      for (int v = 0; v < n; ++v) {
        if (v == k) continue;
        q[static_cast<size_t>(v)] += rhs[j];
        step = std::max(step, std::abs(rhs[j].to_complex()));
        ++j;
      }
      if (!(step < 1.0)) return;  // diverging; keep the unpolished point
      p = std::move(q);
      if (step < std::exp2(-static_cast<double>(prec) + 8)) return;
      // Quadratic convergence has stopped: the rest is rounding noise.
      if (step < std::exp2(-static_cast<double>(prec) / 2.0) && step > last_step / 4.0) return;
      last_step = step;
    }
  }

  double score(const ProjPointNumeric& p) const {
    const int k = largest_index(p.coords());
    std::vector<ComplexApprox> q = p.coords();
    const ComplexApprox s = ComplexApprox(1.0, 0.0, prec) / q[static_cast<size_t>(k)];
    for (auto& c : q) c = c * s;
    const auto m = static_cast<Eigen::Index>(fs.size());
    Eigen::MatrixXcd jac(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
      Eigen::Index j = 0;
      double norm = 0.0;
      for (int v = 0; v < n; ++v) {
        if (v == k) continue;
        jac(i, j) = evaluate_numeric(partials[static_cast<size_t>(i)][static_cast<size_t>(v)], q).to_complex();
        norm += std::norm(jac(i, j));
        ++j;
      }
      if (norm == 0.0) return 0.0;
      jac.row(i) /= std::sqrt(norm);
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(jac);
    return svd.singularValues()(m - 1);
  }
};

// Chart degeneracy or a collision of points over one x value; try another chart.
struct RetryChart {};

std::vector<std::vector<long>> random_transform(int n, Rng& rng) {
  for (;;) {
    std::vector<std::vector<long>> a(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n)));
    std::vector<std::vector<Cyclo12>> rows;
    for (auto& row : a) {
      std::vector<Cyclo12> r;
      for (auto& x : row) {
        x = rng.uniform(-3, 3);
        r.emplace_back(x);
      }
      rows.push_back(std::move(r));
    }
    if (exact_rank(rows) == n) return a;
  }
}

MultiPoly transform(const MultiPoly& f, const std::vector<std::vector<long>>& a) {
  const int n = f.num_vars();
  std::vector<MultiPoly> subs;
  for (int i = 0; i < n; ++i) {
    MultiPoly l(n);
    for (int j = 0; j < n; ++j) {
      const long c = a[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (c != 0) l += MultiPoly::variable(n, j) * Cyclo12(c);
    }
    subs.push_back(std::move(l));
  }
  return compose(f, subs);
}

std::vector<ComplexApprox> apply_transform(const std::vector<std::vector<long>>& a, const std::vector<ComplexApprox>& v) {
  const long prec = v.front().precision_bits();
  std::vector<ComplexApprox> out;
  for (const auto& row : a) {
    ComplexApprox s(0.0, 0.0, prec);
    for (size_t j = 0; j < row.size(); ++j) {
      if (row[j] != 0) s += v[j] * BigFloat(static_cast<double>(row[j]), prec);
    }
    out.push_back(std::move(s));
  }
  return out;
}

ExponentVector pure_power(int var, int d) {
  ExponentVector e{};
  e[static_cast<size_t>(var)] = d;
  return e;
}

void check_inputs(std::span<const MultiPoly> fs, int n) {
  for (const auto& f : fs) {
    if (f.num_vars() != n) throw std::invalid_argument("expected forms in " + std::to_string(n) + " variables");
    if (f.is_zero()) throw std::invalid_argument("input is the zero polynomial");
    if (!f.is_homogeneous()) throw std::invalid_argument("input is not homogeneous: " + f.to_string());
    if (*f.degree() < 1) throw std::invalid_argument("input is a nonzero constant: " + f.to_string());
    if (!is_symmetric(f)) throw std::invalid_argument("input is not symmetric: " + f.to_string());
  }
}

struct RawPoint {
  std::vector<ComplexApprox> coords;
  int multiplicity = 1;
};

// Exact upgrade: catalog points first, then coordinate recognition.
std::optional<ProjPointExact> certify(const System& sys, const ProjPointNumeric& p,
                                      const std::vector<std::pair<ProjPointExact, ProjPointNumeric>>& special) {
  auto vanishes = [&](const ProjPointExact& q) {
    return std::all_of(sys.fs.begin(), sys.fs.end(), [&](const MultiPoly& f) { return evaluate_exact(f, q.coords()).is_zero(); });
  };
  for (const auto& [e, num] : special) {
    if (num.distance(p) < sys.opt.match_tolerance && vanishes(e)) return e;
  }
  const int k = largest_index(p.coords());
  const double tol = std::exp2(-static_cast<double>(sys.prec) / 2.0);
  std::vector<Cyclo12> c;
  for (const auto& z : p.coords()) {
    const auto r = recognize_cyclo(z / p[k], tol);
    if (!r) return std::nullopt;
    c.push_back(*r);
  }
  const ProjPointExact q(std::move(c));
  if (!vanishes(q)) return std::nullopt;
  if (ProjPointNumeric::from_exact(q, sys.prec, sys.opt.match_tolerance).distance(p) >= sys.opt.match_tolerance) return std::nullopt;
  return q;
}

IntersectionReport assemble(const System& sys, std::vector<RawPoint> raw, std::vector<int> degrees, int bezout, bool complete) {
  IntersectionReport rep;
  rep.dimension = sys.n - 1;
  rep.inputs = sys.fs;
  rep.degrees = std::move(degrees);
  rep.bezout_count = bezout;
  rep.precision_bits = sys.prec;
  rep.complete = complete;

  std::vector<std::pair<ProjPointExact, ProjPointNumeric>> special;
  for (auto& e : catalog_special_points(sys.n - 1, false)) {
    auto num = ProjPointNumeric::from_exact(e, sys.prec, sys.opt.match_tolerance);
    special.emplace_back(std::move(e), std::move(num));
  }

  std::vector<ProjPointNumeric> nums;
  for (auto& r : raw) {
    IntersectionPoint ip;
    ip.multiplicity = r.multiplicity;
    ip.numeric = ProjPointNumeric(r.coords, sys.opt.match_tolerance);
    ip.exact = certify(sys, ip.numeric, special);
    if (ip.exact) ip.numeric = ProjPointNumeric::from_exact(*ip.exact, sys.prec, sys.opt.match_tolerance);
    ip.residual = sys.residual(ip.numeric.coords());
    ip.jacobian_score = sys.score(ip.numeric);
    ip.is_real = ip.exact ? ip.exact->is_real() : ip.numeric.is_real();
    nums.push_back(ip.numeric);
    rep.points.push_back(std::move(ip));
  }
  for (size_t i = 0; i < nums.size(); ++i) {
    for (size_t j = i + 1; j < nums.size(); ++j) {
      if (nums[i].matches(nums[j])) throw NumericalError("two solutions coincide within the match tolerance");
    }
  }

  const auto dec = decompose_orbits_detailed(nums, sys.n);
  rep.orbit_type = dec.type;
  for (size_t k = 0; k < rep.points.size(); ++k) {
    rep.points[k].orbit_id = dec.orbit_id[k];
    rep.points[k].stabilizer = dec.stabilizers[k].name;
  }

  bool not_transverse = false;
  bool undetermined = !complete;
  for (auto& p : rep.points) {
    if (p.exact) {
      const Obstruction o = obstruction(*p.exact, sys.fs);
      if (o.present()) {
        not_transverse = true;
        if (!rep.obstruction) rep.obstruction = o;
        continue;
      }
      if (p.multiplicity > 1) not_transverse = true;
      continue;
    }
    if (p.multiplicity > 1) {
      not_transverse = true;
    } else if (p.jacobian_score < sys.opt.transversality_threshold) {
      undetermined = true;
    }
  }
  rep.transversality = not_transverse ? Transversality::kNotTransverse
                                      : (undetermined ? Transversality::kUndetermined : Transversality::kTransverse);
  rep.transverse = rep.transversality == Transversality::kTransverse;
  rep.real_count = static_cast<int>(std::count_if(rep.points.begin(), rep.points.end(), [](const auto& p) { return p.is_real; }));
  return rep;
}

// ---------------------------------------------------------------------------
// The plane

IntersectionReport solve_p2_once(const System& sys, std::uint64_t seed) {
  const MultiPoly& f = sys.fs[0];
  const MultiPoly& g = sys.fs[1];
  const int d = *f.degree(), e = *g.degree();
  const int de = d * e;
  const long prec = sys.prec;
  Rng rng(seed);
  for (int attempt = 0; attempt < 24; ++attempt) {
    const auto a = random_transform(3, rng);
    const MultiPoly ft = transform(f, a), gt = transform(g, a);
    if (ft.coefficient(pure_power(1, d)).is_zero() || gt.coefficient(pure_power(1, e)).is_zero()) continue;
    const MultiPoly fa = dehomogenize(ft, 2), ga = dehomogenize(gt, 2);
    const UPoly r = resultant_by_interpolation(fa, ga, 1, 0, de);
    if (r.is_zero()) throw CommonFactorError("common factor: the inputs share a component");
    if (r.degree() < de) continue;  // a solution on the line at infinity of this chart

    try {
      std::vector<RawPoint> raw;
      const double accept = std::exp2(-static_cast<double>(prec) / 4.0);
      const MultiPoly& lo = d <= e ? fa : ga;
      const MultiPoly& hi = d <= e ? ga : fa;
      for (const auto& xr : roots_with_exact_multiplicity(r, prec)) {
        std::vector<ComplexApprox> pt{xr.value, ComplexApprox(0.0, 0.0, prec), ComplexApprox(1.0, 0.0, prec)};
        const auto ys = aberth_roots(specialize_numeric(lo, 1, pt), prec);
        std::vector<std::pair<double, size_t>> res;
        for (size_t k = 0; k < ys.size(); ++k) {
          pt[1] = ys[k];
          res.emplace_back(rel_residual(hi, pt), k);
        }
        std::sort(res.begin(), res.end());
        if (res.empty() || res[0].first > accept) throw RetryChart{};
        const ComplexApprox y0 = ys[res[0].second];
        for (size_t k = 1; k < res.size() && res[k].first <= accept; ++k) {
          const ComplexApprox dy = ys[res[k].second] - y0;
          if (std::abs(dy.to_complex()) > sys.opt.cluster_radius * std::max(1.0, std::abs(y0.to_complex()))) throw RetryChart{};
        }
        RawPoint p;
        p.multiplicity = xr.multiplicity;
        p.coords = apply_transform(a, {xr.value, y0, ComplexApprox(1.0, 0.0, prec)});
        if (p.multiplicity == 1) sys.polish(p.coords);
        raw.push_back(std::move(p));
      }
      return assemble(sys, std::move(raw), {d, e}, de, true);
    } catch (const RetryChart&) {
      continue;
    } catch (const NumericalError&) {
      if (attempt >= 2) throw;
    }
  }
  throw NumericalError("no usable chart found");
}

// ---------------------------------------------------------------------------
// Space

IntersectionReport solve_p3_once(const System& sys, std::uint64_t seed, const std::vector<int>& degrees, int product) {
  const long prec = sys.prec;
  // Eliminate with the lowest degree input first.
  std::vector<size_t> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) { return degrees[x] < degrees[y]; });
  const int d1 = degrees[order[0]], d2 = degrees[order[1]], d3 = degrees[order[2]];
  Rng rng(seed);
  const double accept = std::exp2(-static_cast<double>(prec) / 3.0);
  const double reject = 1e-6;
  std::optional<IntersectionReport> fallback;
  for (int attempt = 0; attempt < 24; ++attempt) {
    const auto a = random_transform(4, rng);
    std::vector<MultiPoly> ft;
    bool ok = true;
    for (size_t i : order) {
      ft.push_back(transform(sys.fs[i], a));
      if (ft.back().coefficient(pure_power(2, degrees[i])).is_zero()) ok = false;
    }
    if (!ok) continue;
    std::vector<MultiPoly> fa;
    for (const auto& f : ft) fa.push_back(dehomogenize(f, 3));
    const MultiPoly r12 = sylvester_resultant(fa[0], fa[1], 2);
    const MultiPoly r13 = sylvester_resultant(fa[0], fa[2], 2);
    if (r12.is_zero() || r13.is_zero()) throw CommonFactorError("common factor: two inputs share a component");
    const int n12 = d1 * d2, n13 = d1 * d3;
    if (r12.coefficient(pure_power(1, n12)).is_zero() || r13.coefficient(pure_power(1, n13)).is_zero()) continue;
    const UPoly r = resultant_by_interpolation(r12, r13, 1, 0, n12 * n13);
    if (r.is_zero()) throw CommonFactorError("common factor: the inputs share a curve");

    std::vector<std::vector<ComplexApprox>> cands;
    bool grey = false;
    for (const auto& xr : roots_with_exact_multiplicity(r, prec)) {
      std::vector<ComplexApprox> pt{xr.value, ComplexApprox(0.0, 0.0, prec), ComplexApprox(0.0, 0.0, prec),
                                    ComplexApprox(1.0, 0.0, prec)};
      for (const auto& y : aberth_roots(specialize_numeric(r12, 1, pt), prec)) {
        pt[1] = y;
        if (rel_residual(r13, pt) > reject) continue;
        for (const auto& z : aberth_roots(specialize_numeric(fa[0], 2, pt), prec)) {
          pt[2] = z;
          std::vector<ComplexApprox> v = apply_transform(a, pt);
          sys.polish(v);
          const ProjPointNumeric q(v, sys.opt.match_tolerance);
          const double res = sys.residual(q.coords());
          if (res > reject) continue;
          if (res > accept) grey = true;
          cands.push_back(q.coords());
        }
      }
    }
    if (grey && prec < sys.opt.max_precision_bits) throw NumericalError("candidate residuals are inconclusive at this precision");

    std::vector<ProjPointNumeric> uniq;
    std::vector<RawPoint> raw;
    for (auto& c : cands) {
      ProjPointNumeric q(c, sys.opt.match_tolerance);
      if (std::any_of(uniq.begin(), uniq.end(), [&](const ProjPointNumeric& u) { return u.matches(q); })) continue;
      uniq.push_back(q);
      raw.push_back({std::move(c), 1});
    }
    const int count = static_cast<int>(raw.size());
    if (count > product) throw NumericalError("more solutions than the Bezout count");
    if (count < product) {
      // Distribute the deficit over singular candidates when it splits evenly.
      std::vector<size_t> sing;
      for (size_t k = 0; k < raw.size(); ++k) {
        if (sys.score(ProjPointNumeric(raw[k].coords, sys.opt.match_tolerance)) < sys.opt.transversality_threshold) sing.push_back(k);
      }
      const int deficit = product - count;
      if (!sing.empty() && deficit % static_cast<int>(sing.size()) == 0) {
        for (size_t k : sing) raw[k].multiplicity += deficit / static_cast<int>(sing.size());
      }
      try {
        auto rep = assemble(sys, raw, degrees, product, false);
        if (!fallback) fallback = std::move(rep);
      } catch (const std::runtime_error&) {
      }
      if (attempt < 3) continue;
      if (fallback) return *fallback;
      throw NumericalError("could not assemble the intersection");
    }
    return assemble(sys, std::move(raw), degrees, product, true);
  }
  if (fallback) return *fallback;
  throw NumericalError("no usable chart found");
}

template <typename Once>
IntersectionReport with_escalation(const SolveOptions& options, Once once) {
  std::string last;
  for (long prec = options.precision_bits; prec <= std::max(options.precision_bits, options.max_precision_bits); prec *= 2) {
    try {
      return once(prec);
    } catch (const NumericalError& e) {
      last = e.what();
    } catch (const NotClosedError& e) {
      last = e.what();
    }
  }
  throw NumericalError("numerical failure at every precision up to " + std::to_string(options.max_precision_bits) +
                       " bits: " + last);
}

}  // namespace

double jacobian_score(std::span<const MultiPoly> fs, const ProjPointNumeric& p) {
  if (fs.empty() || static_cast<int>(fs.size()) != p.size() - 1) throw std::invalid_argument("need one input fewer than coordinates");
  const System sys(std::vector<MultiPoly>(fs.begin(), fs.end()), SolveOptions{}, p.precision_bits());
  return sys.score(p);
}

IntersectionReport solve_p2(const MultiPoly& f, const MultiPoly& g, const SolveOptions& options) {
  const MultiPoly in[] = {f, g};
  check_inputs(in, 3);
  return with_escalation(options, [&](long prec) {
    const System sys({f, g}, options, prec);
    return solve_p2_once(sys, options.seed);
  });
}

IntersectionReport solve_p3(const MultiPoly& f1, const MultiPoly& f2, const MultiPoly& f3, const SolveOptions& options) {
  const MultiPoly in[] = {f1, f2, f3};
  check_inputs(in, 4);
  const std::vector<int> degrees{*f1.degree(), *f2.degree(), *f3.degree()};
  const int product = degrees[0] * degrees[1] * degrees[2];
  if (product > options.max_product) {
    throw CapExceededError("product of degrees " + std::to_string(product) + " exceeds the cap " + std::to_string(options.max_product));
  }
  return with_escalation(options, [&](long prec) {
    const System sys({f1, f2, f3}, options, prec);
    return solve_p3_once(sys, options.seed, degrees, product);
  });
}

}  // namespace symbez
