#include "symbez/group.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "symbez/errors.hpp"

namespace symbez {

namespace {

void check_degree(int degree) {
  if (degree != 3 && degree != 4) throw std::invalid_argument("only S3 and S4 are supported");
}

using Signature = std::pair<int, std::vector<std::vector<int>>>;

Signature signature_of(std::span<const Permutation> elements) {
  Signature s{static_cast<int>(elements.size()), {}};
  for (const auto& g : elements) s.second.push_back(g.cycle_type());
  std::sort(s.second.begin(), s.second.end());
  return s;
}

SubgroupClass make_class(int degree, std::string name, std::vector<std::vector<std::vector<int>>> gens, int rank) {
  SubgroupClass c;
  c.degree = degree;
  c.name = std::move(name);
  for (const auto& cycles : gens) c.generators.push_back(Permutation::from_cycles(degree, cycles));
  c.order = static_cast<int>(generate_subgroup(degree, c.generators).size());
  c.rank = rank;
  return c;
}

std::vector<SubgroupClass> build_catalog(int degree) {
  std::vector<SubgroupClass> out;
  int rank = 0;
  auto add = [&](std::string name, std::vector<std::vector<std::vector<int>>> gens) {
    out.push_back(make_class(degree, std::move(name), std::move(gens), rank++));
  };
  if (degree == 3) {
    add("Trivial", {});
    add("C2", {{{0, 1}}});
    add("C3", {{{0, 1, 2}}});
    add("S3", {{{0, 1}}, {{0, 1, 2}}});
  } else {
    add("Trivial", {});
    add("C2o", {{{0, 1}}});
    add("C2e", {{{0, 1}, {2, 3}}});
    add("C4", {{{0, 1, 2, 3}}});
    add("K4n", {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}});
    add("K4", {{{0, 1}}, {{2, 3}}});
    add("D8", {{{0, 1, 2, 3}}, {{0, 2}}});
    add("C3", {{{0, 1, 2}}});
    add("S3", {{{0, 1}}, {{0, 1, 2}}});
    add("A4", {{{0, 1, 2}}, {{0, 1}, {2, 3}}});
    add("S4", {{{0, 1}}, {{0, 1, 2, 3}}});
  }
  return out;
}

const std::vector<std::pair<Signature, int>>& catalog_signatures(int degree) {
  static const auto make = [](int d) {
    std::vector<std::pair<Signature, int>> sigs;
    const auto& cat = subgroup_catalog(d);
    for (size_t k = 0; k < cat.size(); ++k) {
      const auto elems = cat[k].elements();
      sigs.emplace_back(signature_of(elems), static_cast<int>(k));
    }
    return sigs;
  };
  static const auto s3 = make(3);
  static const auto s4 = make(4);
  return degree == 3 ? s3 : s4;
}

}  // namespace

// ---------------------------------------------------------------------------
// Groups and subgroup classes

std::string group_name(int degree) {
  check_degree(degree);
  return degree == 3 ? "S3" : "S4";
}

int group_order(int degree) {
  check_degree(degree);
  return degree == 3 ? 6 : 24;
}

const std::vector<Permutation>& group_elements(int degree) {
  check_degree(degree);
  static const auto s3 = all_permutations(3);
  static const auto s4 = all_permutations(4);
  return degree == 3 ? s3 : s4;
}

std::vector<Permutation> generate_subgroup(int degree, std::span<const Permutation> generators) {
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& h : frontier) {
      for (const auto& g : generators) {
        if (g.size() != degree) throw std::invalid_argument("generator of the wrong degree");
        Permutation p = g * h;
        if (seen.insert(p).second) next.push_back(std::move(p));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<Permutation> SubgroupClass::elements() const { return generate_subgroup(degree, generators); }

const std::vector<SubgroupClass>& subgroup_catalog(int degree) {
  check_degree(degree);
  static const auto s3 = build_catalog(3);
  static const auto s4 = build_catalog(4);
  return degree == 3 ? s3 : s4;
}

const SubgroupClass& subgroup_class(int degree, const std::string& name) {
  for (const auto& c : subgroup_catalog(degree)) {
    if (c.name == name) return c;
  }
  throw std::invalid_argument("unknown subgroup class " + name + " of " + group_name(degree));
}

SubgroupClass classify_subgroup(std::span<const Permutation> elements) {
  if (elements.empty()) throw std::invalid_argument("empty set is not a subgroup");
  const int degree = elements.front().size();
  check_degree(degree);
  const std::set<Permutation> set(elements.begin(), elements.end());
  if (set.size() != elements.size()) throw std::invalid_argument("repeated elements");
  if (!set.contains(Permutation::identity(degree))) throw std::invalid_argument("not a subgroup: identity missing");
  for (const auto& a : set) {
    if (a.size() != degree) throw std::invalid_argument("mixed degrees");
    for (const auto& b : set) {
      if (!set.contains(a * b)) {
        throw std::invalid_argument("not a subgroup: " + a.to_string() + " * " + b.to_string() + " missing");
      }
    }
  }
  const Signature sig = signature_of(elements);
  for (const auto& [s, k] : catalog_signatures(degree)) {
    if (s == sig) return subgroup_catalog(degree)[static_cast<size_t>(k)];
  }
  throw std::logic_error("subgroup matches no catalog class");
}

// ---------------------------------------------------------------------------
// Exact points

ProjPointExact::ProjPointExact(std::vector<Cyclo12> coords) : coords_(std::move(coords)) {
  auto last = std::find_if(coords_.rbegin(), coords_.rend(), [](const Cyclo12& c) { return !c.is_zero(); });
  if (last == coords_.rend()) throw std::invalid_argument("projective point with all coordinates zero");
  if (last->is_one()) return;
  const Cyclo12 s = last->inverse();
  for (auto& c : coords_) c *= s;
}

ProjPointExact ProjPointExact::conj() const {
  std::vector<Cyclo12> c;
  c.reserve(coords_.size());
  for (const auto& x : coords_) c.push_back(x.conj());
  return ProjPointExact(std::move(c));
}

bool ProjPointExact::is_real() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Cyclo12& c) { return c.is_real(); });
}

std::string ProjPointExact::to_string() const {
  std::string s = "[";
  for (size_t k = 0; k < coords_.size(); ++k) {
    if (k != 0) s += ":";
    s += coords_[k].to_string();
  }
  return s + "]";
}

bool operator<(const ProjPointExact& a, const ProjPointExact& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end());
}

// ---------------------------------------------------------------------------
// Numeric points

ProjPointNumeric::ProjPointNumeric(std::vector<ComplexApprox> coords, double match_tolerance)
    : coords_(std::move(coords)), tol_(match_tolerance) {
  if (coords_.empty()) throw std::invalid_argument("projective point needs coordinates");
  const long prec = coords_.front().precision_bits();
  BigFloat total(0.0, prec);
  size_t big = 0;
  BigFloat big_norm(0.0, prec);
  for (size_t k = 0; k < coords_.size(); ++k) {
    BigFloat n = coords_[k].norm();
    total += n;
    // Prefer the earliest index among near-ties so the phase choice is stable.
    BigFloat cut = big_norm * BigFloat(1.0 + 1e-12, prec);
    if (n > cut) {
      big = k;
      big_norm = n;
    }
  }
  if (!total.is_finite() || total.is_zero()) throw NumericalError("projective point with all coordinates zero");
  const BigFloat mag = coords_[big].abs();
  // Multiply by conj(c_big) / (|c_big| * |p|).
  ComplexApprox scale = coords_[big].conj();
  scale *= BigFloat(1.0, prec) / (mag * sqrt(total));
  for (auto& c : coords_) c *= scale;
  coords_[big] = ComplexApprox(coords_[big].real(), BigFloat(0.0, prec));
}

ProjPointNumeric ProjPointNumeric::from_exact(const ProjPointExact& p, long precision_bits, double match_tolerance) {
  std::vector<ComplexApprox> c;
  c.reserve(static_cast<size_t>(p.size()));
  for (const auto& x : p.coords()) c.push_back(embed(x, precision_bits));
  return ProjPointNumeric(std::move(c), match_tolerance);
}

long ProjPointNumeric::precision_bits() const { return coords_.empty() ? 0 : coords_.front().precision_bits(); }

double ProjPointNumeric::distance(const ProjPointNumeric& o) const {
  if (o.size() != size()) throw std::invalid_argument("points of different dimension");
  std::vector<std::complex<double>> a, b;
  for (const auto& c : coords_) a.push_back(c.to_complex());
  for (const auto& c : o.coords_) b.push_back(c.to_complex());
  double d = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = i + 1; j < a.size(); ++j) d = std::max(d, std::abs(a[i] * b[j] - a[j] * b[i]));
  }
  return d;
}

ProjPointNumeric ProjPointNumeric::conj() const {
  std::vector<ComplexApprox> c;
  for (const auto& x : coords_) c.push_back(x.conj());
  return ProjPointNumeric(std::move(c), tol_);
}

bool ProjPointNumeric::is_real() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [this](const ComplexApprox& c) { return std::abs(c.imag().to_double()) < tol_; });
}

std::vector<std::complex<double>> ProjPointNumeric::to_complex() const {
  std::vector<std::complex<double>> c;
  for (const auto& x : coords_) c.push_back(x.to_complex());
  for (size_t k = c.size(); k-- > 0;) {
    if (std::abs(c[k]) > tol_) {
      const auto s = c[k];
      for (auto& x : c) x /= s;
      for (size_t j = k + 1; j < c.size(); ++j) c[j] = 0;
      break;
    }
  }
  return c;
}

std::string ProjPointNumeric::to_string(int digits) const {
  std::string s = "[";
  const auto c = to_complex();
  for (size_t k = 0; k < c.size(); ++k) {
    if (k != 0) s += " : ";
    s += ComplexApprox(c[k], 53).to_string(digits);
  }
  return s + "]";
}

// ---------------------------------------------------------------------------
// Action, stabilizers, orbits

ProjPointExact act(const Permutation& sigma, const ProjPointExact& p) {
  if (sigma.size() != p.size()) throw std::invalid_argument("permutation and point dimension differ");
  std::vector<Cyclo12> c(static_cast<size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) c[static_cast<size_t>(sigma(i))] = p[i];
  return ProjPointExact(std::move(c));
}

ProjPointNumeric act(const Permutation& sigma, const ProjPointNumeric& p) {
  if (sigma.size() != p.size()) throw std::invalid_argument("permutation and point dimension differ");
  std::vector<ComplexApprox> c(static_cast<size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) c[static_cast<size_t>(sigma(i))] = p[i];
  return ProjPointNumeric(std::move(c), p.match_tolerance());
}

namespace {

bool same(const ProjPointExact& a, const ProjPointExact& b) { return a == b; }
bool same(const ProjPointNumeric& a, const ProjPointNumeric& b) { return a.matches(b); }

template <class P>
Stabilizer stabilizer_impl(const P& p) {
  Stabilizer s;
  for (const auto& g : group_elements(p.size())) {
    if (same(act(g, p), p)) s.elements.push_back(g);
  }
  try {
    s.cls = classify_subgroup(s.elements);
  } catch (const std::invalid_argument& e) {
    throw NumericalError(std::string("stabilizer is not a subgroup (matching too loose): ") + e.what());
  }
  return s;
}

template <class P>
std::vector<P> orbit_impl(const P& p) {
  std::vector<P> out;
  for (const auto& g : group_elements(p.size())) {
    P q = act(g, p);
    if (std::none_of(out.begin(), out.end(), [&](const P& r) { return same(r, q); })) out.push_back(std::move(q));
  }
  return out;
}

template <class P>
OrbitDecomposition decompose_impl(std::span<const P> points, int degree) {
  check_degree(degree);
  OrbitDecomposition d{OrbitType(degree), std::vector<int>(points.size(), -1), {}};
  d.stabilizers.resize(points.size());
  int next_id = 0;
  for (size_t k = 0; k < points.size(); ++k) {
    if (points[k].size() != degree) throw std::invalid_argument("point dimension does not match the group");
  }
  for (size_t k = 0; k < points.size(); ++k) {
    if (d.orbit_id[k] != -1) continue;
    const int id = next_id++;
    const Stabilizer stab = stabilizer_impl(points[k]);
    int members = 0;
    for (const auto& g : group_elements(degree)) {
      const P q = act(g, points[k]);
      size_t hit = points.size();
      for (size_t j = 0; j < points.size(); ++j) {
        if (!same(q, points[j])) continue;
        if (hit != points.size()) {
          if constexpr (std::is_same_v<P, ProjPointExact>) {
            throw std::invalid_argument("repeated point " + points[j].to_string());
          } else {
            throw NumericalError("ambiguous orbit matching near " + points[j].to_string());
          }
        }
        hit = j;
      }
      if (hit == points.size()) throw NotClosedError(g.to_string(), points[k].to_string());
      if (d.orbit_id[hit] == -1) {
        d.orbit_id[hit] = id;
        d.stabilizers[hit] = stab.cls;
        ++members;
      } else if (d.orbit_id[hit] != id) {
        throw NumericalError("inconsistent orbit matching near " + points[hit].to_string());
      }
    }
    if (members * stab.cls.order != group_order(degree)) {
      throw NumericalError("orbit size disagrees with stabilizer order at " + points[k].to_string());
    }
    d.type.add(stab.cls);
  }
  return d;
}

}  // namespace

Stabilizer stabilizer(const ProjPointExact& p) { return stabilizer_impl(p); }
Stabilizer stabilizer(const ProjPointNumeric& p) { return stabilizer_impl(p); }

std::vector<ProjPointExact> orbit(const ProjPointExact& p) {
  auto o = orbit_impl(p);
  std::sort(o.begin(), o.end());
  return o;
}

std::vector<ProjPointNumeric> orbit(const ProjPointNumeric& p) { return orbit_impl(p); }

OrbitDecomposition decompose_orbits_detailed(std::span<const ProjPointExact> points, int degree) {
  return decompose_impl(points, degree);
}
OrbitDecomposition decompose_orbits_detailed(std::span<const ProjPointNumeric> points, int degree) {
  return decompose_impl(points, degree);
}
OrbitType decompose_orbits(std::span<const ProjPointExact> points, int degree) {
  return decompose_impl(points, degree).type;
}
OrbitType decompose_orbits(std::span<const ProjPointNumeric> points, int degree) {
  return decompose_impl(points, degree).type;
}

// ---------------------------------------------------------------------------
// Orbit types

void OrbitType::add(const SubgroupClass& h, int multiplicity) {
  if (h.degree != degree_) throw std::invalid_argument("subgroup class from a different group");
  if (multiplicity < 0) throw std::invalid_argument("negative multiplicity");
  if (multiplicity == 0) return;
  for (auto& [cls, m] : terms_) {
    if (cls == h) {
      m += multiplicity;
      return;
    }
  }
  terms_.emplace_back(h, multiplicity);
  std::sort(terms_.begin(), terms_.end(), [](const auto& a, const auto& b) {
    if (a.first.order != b.first.order) return a.first.order > b.first.order;
    return a.first.rank < b.first.rank;
  });
}

int OrbitType::orbit_count() const {
  int n = 0;
  for (const auto& t : terms_) n += t.second;
  return n;
}

int OrbitType::size() const {
  int n = 0;
  for (const auto& [cls, m] : terms_) n += m * (group_order(degree_) / cls.order);
  return n;
}

int OrbitType::multiplicity(const std::string& class_name) const {
  for (const auto& [cls, m] : terms_) {
    if (cls.name == class_name) return m;
  }
  return 0;
}

std::string OrbitType::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [cls, m] : terms_) {
    if (!s.empty()) s += " + ";
    if (m != 1) s += std::to_string(m);
    s += "[" + group_name(degree_);
    if (cls.name != "Trivial") s += "/" + cls.name;
    s += "]";
  }
  return s;
}

}  // namespace symbez
