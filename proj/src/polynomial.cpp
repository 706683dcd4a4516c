#include "wolfkit/polynomial.hpp"

#include <numeric>

#include "wolfkit/errors.hpp"

namespace wolfkit {

unsigned total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

bool GradedLexDescending::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw UsageError("variable index out of range");
  Polynomial p(nvars);
  Exponents e(nvars, 0);
  e[i] = 1;
  p.add_term(e, 1);
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(total_degree(terms_.begin()->first));
}

Rational Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != nvars_) throw UsageError("exponent vector has wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Polynomial::evaluate(std::span<const Rational> x) const {
  if (x.size() != nvars_) throw UsageError("evaluate: wrong number of arguments");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) t *= x[i];
    sum += t;
  }
  return sum;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw UsageError("polynomial sum: variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw UsageError("polynomial difference: variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw UsageError("polynomial product: variable count mismatch");
  Polynomial p(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  return p;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [e, c] : p.terms()) {
    std::string coeff = to_string(c);
    if (!s.empty()) {
      if (coeff[0] == '-') {
        s += " - ";
        coeff.erase(0, 1);
      } else {
        s += " + ";
      }
    }
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      s += coeff;
    else if (coeff == "1")
      s += mono;
    else if (coeff == "-1")
      s += "-" + mono;
    else
      s += coeff + "*" + mono;
  }
  return s;
}

PolynomialMap::PolynomialMap(std::size_t in_vars, std::vector<Polynomial> components)
    : in_vars_(in_vars), components_(std::move(components)) {
  for (const auto& c : components_)
    if (c.nvars() != in_vars_) throw UsageError("polynomial map: component arity mismatch");
}

PolynomialMap PolynomialMap::identity(std::size_t n) {
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < n; ++i) comps.push_back(Polynomial::variable(n, i));
  return PolynomialMap(n, std::move(comps));
}

PolynomialMap PolynomialMap::affine(const Matrix& m, const Matrix& offset) {
  if (!offset.empty() && (offset.rows() != m.rows() || offset.cols() != 1))
    throw UsageError("affine map: offset has wrong shape");
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Polynomial p(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Exponents e(m.cols(), 0);
      e[j] = 1;
      p.add_term(e, m(i, j));
    }
    if (!offset.empty()) p.add_term(Exponents(m.cols(), 0), offset[i]);
    comps.push_back(std::move(p));
  }
  return PolynomialMap(m.cols(), std::move(comps));
}

int PolynomialMap::degree() const {
  int d = -1;
  for (const auto& c : components_) d = std::max(d, c.degree());
  return d;
}

Matrix PolynomialMap::evaluate(const Matrix& x) const {
  if (x.rows() != in_vars_ || (in_vars_ > 0 && x.cols() != 1))
    throw UsageError("polynomial map evaluate: argument has wrong shape");
  std::vector<Rational> args(x.entries().begin(), x.entries().end());
  Matrix y(components_.size(), 1);
  for (std::size_t i = 0; i < components_.size(); ++i) y[i] = components_[i].evaluate(args);
  return y;
}

PolynomialMap operator-(const PolynomialMap& a, const PolynomialMap& b) {
  if (a.in_vars_ != b.in_vars_ || a.out_vars() != b.out_vars())
    throw UsageError("polynomial map difference: arity mismatch");
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < a.out_vars(); ++i) comps.push_back(a[i] - b[i]);
  return PolynomialMap(a.in_vars_, std::move(comps));
}

PolynomialMap compose(const PolynomialMap& f, const PolynomialMap& g) {
  if (f.in_vars() != g.out_vars())
    throw UsageError("compose: f takes " + std::to_string(f.in_vars()) +
                     " variables but g produces " + std::to_string(g.out_vars()));
  const std::size_t n = g.in_vars();
  // powers[c][k] = g_c^k, grown on demand
  std::vector<std::vector<Polynomial>> powers(g.out_vars());
  auto power = [&](std::size_t c, unsigned k) -> const Polynomial& {
    auto& pw = powers[c];
    if (pw.empty()) pw.push_back(Polynomial::constant(n, 1));
    while (pw.size() <= k) pw.push_back(pw.back() * g[c]);
    return pw[k];
  };
  std::vector<Polynomial> comps;
  for (const auto& fc : f.components()) {
    Polynomial acc(n);
    for (const auto& [e, c] : fc.terms()) {
      Polynomial t = Polynomial::constant(n, c);
      for (std::size_t v = 0; v < e.size(); ++v)
        if (e[v] > 0) t = t * power(v, e[v]);
      acc += t;
    }
    comps.push_back(std::move(acc));
  }
  return PolynomialMap(n, std::move(comps));
}

bool poly_identity_zero(const PolynomialMap& f) {
  for (const auto& c : f.components())
    if (!c.is_zero()) return false;
  return true;
}

}  // namespace wolfkit
