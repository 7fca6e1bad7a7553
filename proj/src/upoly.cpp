#include "symbez/upoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace symbez {

UPoly::UPoly(std::vector<Cyclo12> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::from_multipoly(const MultiPoly& f, int var) {
  std::vector<Cyclo12> c(static_cast<size_t>(std::max(f.degree_in(var) + 1, 0)));
  for (const auto& [e, v] : f.terms()) {
    for (int k = 0; k < f.num_vars(); ++k) {
      if (k != var && e[static_cast<size_t>(k)] != 0) {
        throw std::invalid_argument("polynomial is not univariate in the requested variable");
      }
    }
    c[static_cast<size_t>(e[static_cast<size_t>(var)])] = v;
  }
  return UPoly(std::move(c));
}

MultiPoly UPoly::to_multipoly(int num_vars, int var) const {
  MultiPoly f(num_vars);
  for (size_t k = 0; k < c_.size(); ++k) {
    ExponentVector e{};
    e[static_cast<size_t>(var)] = static_cast<int>(k);
    f.add_term(e, c_[k]);
  }
  return f;
}

Cyclo12 UPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return {};
  return c_[static_cast<size_t>(k)];
}

Cyclo12 UPoly::evaluate(const Cyclo12& t) const {
  Cyclo12 r;
  for (size_t k = c_.size(); k-- > 0;) r = r * t + c_[k];
  return r;
}

ComplexApprox UPoly::evaluate(const ComplexApprox& t) const {
  const long prec = t.precision_bits();
  ComplexApprox r(0.0, 0.0, prec);
  for (size_t k = c_.size(); k-- > 0;) r = r * t + c_[k].embed(prec);
  return r;
}

UPoly UPoly::derivative() const {
  std::vector<Cyclo12> d;
  for (size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Cyclo12(static_cast<long>(k)));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (c_.empty() || leading().is_one()) return *this;
  return *this * leading().inverse();
}

bool UPoly::has_real_coefficients() const {
  return std::all_of(c_.begin(), c_.end(), [](const Cyclo12& c) { return c.is_real(); });
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Cyclo12> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(c));
}

UPoly operator*(UPoly a, const Cyclo12& s) {
  for (auto& c : a.c_) c *= s;
  a.trim();
  return a;
}

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  MultiPoly f = to_multipoly(3, 0);
  std::string s = f.to_string();
  // MultiPoly renders the first variable as X.
  std::string out;
  for (char ch : s) {
    if (ch == 'X') {
      out += var;
    } else {
      out += ch;
    }
  }
  return out;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Cyclo12> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UPoly(), a};
  std::vector<Cyclo12> q(static_cast<size_t>(a.degree() - db + 1));
  const Cyclo12 inv = b.leading().inverse();
  const auto& bc = b.coeffs();
  for (int k = a.degree(); k >= db; --k) {
    const Cyclo12& top = r[static_cast<size_t>(k)];
    if (top.is_zero()) continue;
    const Cyclo12 t = top * inv;
    for (int j = 0; j <= db; ++j) r[static_cast<size_t>(k - db + j)] -= t * bc[static_cast<size_t>(j)];
    q[static_cast<size_t>(k - db)] = t;
  }
  r.resize(static_cast<size_t>(db));
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a.monic(), y = b.monic();
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

std::vector<UPoly> squarefree_decomposition(const UPoly& a) {
  if (a.is_zero()) throw std::invalid_argument("square-free decomposition of zero");
  // Yun's algorithm.
  std::vector<UPoly> parts;
  const UPoly f = a.monic();
  const UPoly fp = f.derivative();
  UPoly g = gcd(f, fp);
  UPoly b = divmod(f, g).first;
  UPoly c = divmod(fp, g).first;
  UPoly d = c - b.derivative();
  while (b.degree() > 0) {
    UPoly s = gcd(b, d);
    parts.push_back(s);
    b = divmod(b, s).first;
    c = divmod(d, s).first;
    d = c - b.derivative();
  }
  while (!parts.empty() && parts.back().degree() == 0) parts.pop_back();
  return parts;
}

UPoly squarefree_part(const UPoly& a) {
  UPoly p = UPoly::constant(1);
  for (const auto& s : squarefree_decomposition(a)) p = p * s;
  return p;
}

Cyclo12 resultant(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.degree() == 0) return a.leading().pow(static_cast<unsigned>(b.degree()));
  if (b.degree() == 0) return b.leading().pow(static_cast<unsigned>(a.degree()));
  // res(a, b) = (-1)^(deg a deg b) lc(b)^(deg a - deg r) res(b, r), r = a mod b.
  Cyclo12 scale(1);
  UPoly x = a, y = b;
  while (y.degree() > 0) {
    UPoly r = divmod(x, y).second;
    if (r.is_zero()) return {};
    if ((x.degree() * y.degree()) % 2 != 0) scale = -scale;
    scale *= y.leading().pow(static_cast<unsigned>(x.degree() - r.degree()));
    x = std::move(y);
    y = std::move(r);
  }
  return scale * y.leading().pow(static_cast<unsigned>(x.degree()));
}

}  // namespace symbez
