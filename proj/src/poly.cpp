#include "symbez/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "symbez/random.hpp"

namespace symbez {

int total_degree(const ExponentVector& e) { return e[0] + e[1] + e[2] + e[3]; }

bool GrlexLess::operator()(const ExponentVector& a, const ExponentVector& b) const {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

namespace {

void check_var_count(int n) {
  if (n < 1 || n > kMaxVars) throw std::invalid_argument("polynomials have between 1 and 4 variables");
}

void check_var_index(int n, int var) {
  if (var < 0 || var >= n) throw std::invalid_argument("variable index out of range");
}

const char* const kVarNames[kMaxVars] = {"X", "Y", "Z", "W"};

std::string render_coefficient(const Cyclo12& c, bool first, bool has_monomial) {
  std::string out;
  if (c.is_rational()) {
    const BigRational& q = c[0];
    const bool neg = q < 0;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    const BigRational mag = neg ? BigRational(-q) : q;
    if (mag != 1 || !has_monomial) {
      out += mag.get_str();
      if (has_monomial) out += "*";
    }
    return out;
  }
  out += first ? "" : " + ";
  out += "(" + c.to_string() + ")";
  if (has_monomial) out += "*";
  return out;
}

std::string render_monomial(const ExponentVector& e, int n, const char* const* names) {
  std::string out;
  for (int v = 0; v < n; ++v) {
    const int k = e[static_cast<size_t>(v)];
    if (k == 0) continue;
    if (!out.empty()) out += "*";
    out += names[v];
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

std::string render(const MultiPoly& f, const char* const* names) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const std::string mono = render_monomial(it->first, f.num_vars(), names);
    out += render_coefficient(it->second, first, !mono.empty());
    out += mono;
    first = false;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly::MultiPoly(int num_vars) : num_vars_(num_vars) { check_var_count(num_vars); }

MultiPoly MultiPoly::constant(int num_vars, const Cyclo12& c) {
  MultiPoly p(num_vars);
  p.add_term(ExponentVector{}, c);
  return p;
}

MultiPoly MultiPoly::variable(int num_vars, int index) {
  check_var_index(num_vars, index);
  ExponentVector e{};
  e[static_cast<size_t>(index)] = 1;
  return monomial(num_vars, e, Cyclo12(1));
}

MultiPoly MultiPoly::monomial(int num_vars, const ExponentVector& e, const Cyclo12& c) {
  MultiPoly p(num_vars);
  p.add_term(e, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

std::optional<int> MultiPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return total_degree(terms_.rbegin()->first);
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return total_degree(terms_.begin()->first) == total_degree(terms_.rbegin()->first);
}

int MultiPoly::degree_in(int var) const {
  check_var_index(num_vars_, var);
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<size_t>(var)]);
  return d;
}

Cyclo12 MultiPoly::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Cyclo12() : it->second;
}

void MultiPoly::add_term(const ExponentVector& e, const Cyclo12& c) {
  for (int v = num_vars_; v < kMaxVars; ++v) {
    if (e[static_cast<size_t>(v)] != 0) throw std::invalid_argument("exponent on a variable outside the ring");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::conj() const {
  MultiPoly r(num_vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, c.conj());
  return r;
}

bool MultiPoly::has_real_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_real(); });
}

double MultiPoly::coefficient_norm1() const {
  double s = 0;
  for (const auto& [e, c] : terms_) s += std::abs(c.embed(53).to_complex());
  return s;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (o.num_vars_ != num_vars_) throw std::invalid_argument("mismatched variable count");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly r(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      ExponentVector e{};
      for (int v = 0; v < kMaxVars; ++v) e[static_cast<size_t>(v)] = ea[static_cast<size_t>(v)] + eb[static_cast<size_t>(v)];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Cyclo12& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MultiPoly operator-(MultiPoly a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(num_vars_, Cyclo12(1));
  MultiPoly base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

std::string MultiPoly::to_string() const { return render(*this, kVarNames); }

// ---------------------------------------------------------------------------
// ElemBasisPoly

namespace {

int weight_of(const ExponentVector& e) {
  int w = 0;
  for (int k = 0; k < kMaxVars; ++k) w += (k + 1) * e[static_cast<size_t>(k)];
  return w;
}

const char* const kElemNames[kMaxVars] = {"e1", "e2", "e3", "e4"};

}  // namespace

std::optional<int> ElemBasisPoly::weighted_degree() const {
  if (poly.is_zero()) return std::nullopt;
  int w = 0;
  for (const auto& [e, c] : poly.terms()) w = std::max(w, weight_of(e));
  return w;
}

bool ElemBasisPoly::is_weighted_homogeneous() const {
  if (poly.is_zero()) return true;
  const int w = weight_of(poly.terms().begin()->first);
  return std::all_of(poly.terms().begin(), poly.terms().end(),
                     [w](const auto& t) { return weight_of(t.first) == w; });
}

std::string ElemBasisPoly::to_string() const { return render(poly, kElemNames); }

// ---------------------------------------------------------------------------
// Free operations

MultiPoly poly_add(const MultiPoly& f, const MultiPoly& g) { return f + g; }
MultiPoly poly_sub(const MultiPoly& f, const MultiPoly& g) { return f - g; }
MultiPoly poly_mul(const MultiPoly& f, const MultiPoly& g) { return f * g; }
MultiPoly poly_scale(const MultiPoly& f, const Cyclo12& s) { return f * s; }

MultiPoly partial_derivative(const MultiPoly& f, int var) {
  check_var_index(f.num_vars(), var);
  MultiPoly r(f.num_vars());
  for (const auto& [e, c] : f.terms()) {
    const int k = e[static_cast<size_t>(var)];
    if (k == 0) continue;
    ExponentVector d = e;
    d[static_cast<size_t>(var)] = k - 1;
    r.add_term(d, c * Cyclo12(k));
  }
  return r;
}

MultiPoly euler_residual(const MultiPoly& f) {
  if (!f.is_homogeneous()) throw std::invalid_argument("euler_residual requires a homogeneous polynomial");
  const int n = f.num_vars();
  MultiPoly acc(n);
  for (int v = 0; v < n; ++v) acc += MultiPoly::variable(n, v) * partial_derivative(f, v);
  if (auto d = f.degree()) acc -= f * Cyclo12(*d);
  return acc;
}

MultiPoly apply_permutation(const MultiPoly& f, const Permutation& sigma) {
  if (sigma.size() != f.num_vars()) throw std::invalid_argument("permutation size differs from variable count");
  MultiPoly r(f.num_vars());
  for (const auto& [e, c] : f.terms()) {
    ExponentVector p{};
    for (int i = 0; i < f.num_vars(); ++i) p[static_cast<size_t>(sigma(i))] = e[static_cast<size_t>(i)];
    r.add_term(p, c);
  }
  return r;
}

bool is_symmetric(const MultiPoly& f) {
  const int n = f.num_vars();
  if (n == 1) return true;
  std::vector<int> full(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) full[static_cast<size_t>(i)] = (i + 1) % n;
  return apply_permutation(f, Permutation::transposition(n, 0, 1)) == f &&
         apply_permutation(f, Permutation(full)) == f;
}

MultiPoly elementary_symmetric(int num_vars, int k) {
  check_var_count(num_vars);
  MultiPoly r(num_vars);
  if (k < 0 || k > num_vars) return r;
  for (unsigned mask = 0; mask < (1U << num_vars); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    ExponentVector e{};
    for (int v = 0; v < num_vars; ++v) e[static_cast<size_t>(v)] = (mask >> v) & 1U;
    r.add_term(e, Cyclo12(1));
  }
  return r;
}

ElemBasisPoly to_elementary_basis(const MultiPoly& f) {
  if (!is_symmetric(f)) throw std::invalid_argument("to_elementary_basis requires a symmetric polynomial");
  const int n = f.num_vars();
  std::vector<MultiPoly> elem;
  for (int k = 1; k <= n; ++k) elem.push_back(elementary_symmetric(n, k));
  // powers[k][j] = e_{k+1}^j, grown on demand
  std::vector<std::vector<MultiPoly>> powers(static_cast<size_t>(n));
  auto power = [&](int k, int j) -> const MultiPoly& {
    auto& pk = powers[static_cast<size_t>(k)];
    if (pk.empty()) pk.push_back(MultiPoly::constant(n, Cyclo12(1)));
    while (static_cast<int>(pk.size()) <= j) pk.push_back(pk.back() * elem[static_cast<size_t>(k)]);
    return pk[static_cast<size_t>(j)];
  };

  ElemBasisPoly out{MultiPoly(n)};
  MultiPoly rest = f;
  while (!rest.is_zero()) {
    const auto [lead, c] = rest.leading_term();
    ExponentVector k{};
    MultiPoly prod = MultiPoly::constant(n, c);
    for (int j = 0; j < n; ++j) {
      const int next = j + 1 < n ? lead[static_cast<size_t>(j + 1)] : 0;
      const int kj = lead[static_cast<size_t>(j)] - next;
      if (kj < 0) throw std::logic_error("leading exponent of a symmetric polynomial must be non-increasing");
      k[static_cast<size_t>(j)] = kj;
      if (kj > 0) prod *= power(j, kj);
    }
    out.poly.add_term(k, c);
    rest -= prod;
  }
  return out;
}

MultiPoly from_elementary_basis(const ElemBasisPoly& p) {
  const int n = p.num_vars();
  std::vector<MultiPoly> elem;
  for (int k = 1; k <= n; ++k) elem.push_back(elementary_symmetric(n, k));
  return compose(p.poly, elem);
}

MultiPoly dehomogenize(const MultiPoly& f, int var) {
  check_var_index(f.num_vars(), var);
  MultiPoly r(f.num_vars());
  for (const auto& [e, c] : f.terms()) {
    ExponentVector d = e;
    d[static_cast<size_t>(var)] = 0;
    r.add_term(d, c);
  }
  return r;
}

MultiPoly divide_exact(const MultiPoly& f, const MultiPoly& g) {
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (f.num_vars() != g.num_vars()) throw std::invalid_argument("mismatched variable count");
  const int n = f.num_vars();
  const auto& [glead, gc] = g.leading_term();
  const Cyclo12 ginv = gc.inverse();
  MultiPoly q(n), rest = f;
  while (!rest.is_zero()) {
    const auto& [lead, c] = rest.leading_term();
    ExponentVector e{};
    for (int v = 0; v < kMaxVars; ++v) {
      e[static_cast<size_t>(v)] = lead[static_cast<size_t>(v)] - glead[static_cast<size_t>(v)];
      if (e[static_cast<size_t>(v)] < 0) throw std::domain_error("divide_exact: divisor does not divide dividend");
    }
    const Cyclo12 t = c * ginv;
    q.add_term(e, t);
    for (const auto& [ge, gcoef] : g.terms()) {
      ExponentVector s{};
      for (int v = 0; v < kMaxVars; ++v) s[static_cast<size_t>(v)] = ge[static_cast<size_t>(v)] + e[static_cast<size_t>(v)];
      rest.add_term(s, -(gcoef * t));
    }
  }
  return q;
}

std::vector<MultiPoly> coefficients_in(const MultiPoly& f, int var) {
  const int d = f.degree_in(var);
  std::vector<MultiPoly> out(static_cast<size_t>(std::max(d + 1, 0)), MultiPoly(f.num_vars()));
  for (const auto& [e, c] : f.terms()) {
    ExponentVector r = e;
    const int k = r[static_cast<size_t>(var)];
    r[static_cast<size_t>(var)] = 0;
    out[static_cast<size_t>(k)].add_term(r, c);
  }
  return out;
}

std::vector<ExponentVector> weighted_monomials(int num_vars, int weight) {
  check_var_count(num_vars);
  std::vector<ExponentVector> out;
  ExponentVector k{};
  // Recurse from the heaviest generator down to e1.
  auto rec = [&](auto&& self, int j, int remaining) -> void {
    if (j == 0) {
      k[0] = remaining;
      out.push_back(k);
      return;
    }
    const int w = j + 1;
    for (int c = 0; c * w <= remaining; ++c) {
      k[static_cast<size_t>(j)] = c;
      self(self, j - 1, remaining - c * w);
    }
    k[static_cast<size_t>(j)] = 0;
  };
  if (weight >= 0) rec(rec, num_vars - 1, weight);
  std::sort(out.begin(), out.end());
  return out;
}

MultiPoly random_symmetric(int num_vars, int degree, std::uint64_t seed, int coeff_bound) {
  if (degree < 1) throw std::invalid_argument("random_symmetric requires degree >= 1");
  if (coeff_bound < 1) throw std::invalid_argument("coefficient bound must be positive");
  Rng rng(seed);
  const auto monos = weighted_monomials(num_vars, degree);
  ElemBasisPoly p{MultiPoly(num_vars)};
  while (p.poly.is_zero()) {
    for (const auto& m : monos) p.poly.add_term(m, Cyclo12(rng.uniform(-coeff_bound, coeff_bound)));
  }
  return from_elementary_basis(p);
}

Cyclo12 evaluate_exact(const MultiPoly& f, std::span<const Cyclo12> point) {
  if (static_cast<int>(point.size()) != f.num_vars()) throw std::invalid_argument("point length differs from variable count");
  return evaluate_with<Cyclo12>(f, point, Cyclo12(), Cyclo12(1), [](const Cyclo12& c) { return c; });
}

ComplexApprox evaluate_numeric(const MultiPoly& f, std::span<const ComplexApprox> point) {
  if (static_cast<int>(point.size()) != f.num_vars()) throw std::invalid_argument("point length differs from variable count");
  const long prec = point.empty() ? kDefaultPrecisionBits : point[0].precision_bits();
  const ComplexApprox zero(prec), one(1.0, 0.0, prec);
  return evaluate_with<ComplexApprox>(f, point, zero, one, [prec](const Cyclo12& c) { return c.embed(prec); });
}

namespace {

// Nested Horner scheme: f = sum_k x_v^k f_k(x_{v+1}, ...), so each step only
// multiplies by a substituted variable rather than by full monomials.
MultiPoly compose_from(const std::vector<std::pair<ExponentVector, Cyclo12>>& terms, int v, int n,
                       std::span<const MultiPoly> sub, int m) {
  if (terms.empty()) return MultiPoly(m);
  if (v == n) {
    Cyclo12 c;
    for (const auto& t : terms) c += t.second;
    return MultiPoly::constant(m, c);
  }
  int top = 0;
  for (const auto& t : terms) top = std::max(top, t.first[static_cast<size_t>(v)]);
  std::vector<std::vector<std::pair<ExponentVector, Cyclo12>>> buckets(static_cast<size_t>(top) + 1);
  for (const auto& t : terms) buckets[static_cast<size_t>(t.first[static_cast<size_t>(v)])].push_back(t);
  MultiPoly acc(m);
  for (int k = top; k >= 0; --k) {
    if (!acc.is_zero()) acc = acc * sub[static_cast<size_t>(v)];
    acc += compose_from(buckets[static_cast<size_t>(k)], v + 1, n, sub, m);
  }
  return acc;
}

}  // namespace

MultiPoly compose(const MultiPoly& f, std::span<const MultiPoly> substitution) {
  if (static_cast<int>(substitution.size()) != f.num_vars()) throw std::invalid_argument("substitution length differs from variable count");
  const int m = substitution.empty() ? f.num_vars() : substitution[0].num_vars();
  std::vector<std::pair<ExponentVector, Cyclo12>> terms(f.terms().begin(), f.terms().end());
  return compose_from(terms, 0, f.num_vars(), substitution, m);
}

}  // namespace symbez
