#ifndef WOLFKIT_POLYNOMIAL_HPP
#define WOLFKIT_POLYNOMIAL_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "wolfkit/matrix.hpp"

namespace wolfkit {

using Exponents = std::vector<unsigned>;

// Graded lexicographic order, largest monomial first: higher total degree
// wins, ties broken by the first differing exponent.
struct GradedLexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

unsigned total_degree(const Exponents& e);

// Multivariate polynomial over Q. Zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<Exponents, Rational, GradedLexDescending>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // -1 for the zero polynomial.
  int degree() const;
  Rational coefficient(const Exponents& e) const;

  void add_term(const Exponents& e, const Rational& c);

  Rational evaluate(std::span<const Rational> x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  std::size_t nvars_;
  Terms terms_;
};

std::string to_string(const Polynomial& p);

// Tuple of polynomials, all in the same in_vars variables.
class PolynomialMap {
 public:
  PolynomialMap() = default;
  PolynomialMap(std::size_t in_vars, std::vector<Polynomial> components);

  static PolynomialMap identity(std::size_t n);
  // x -> m x + offset (offset may be empty for zero).
  static PolynomialMap affine(const Matrix& m, const Matrix& offset = Matrix());

  std::size_t in_vars() const { return in_vars_; }
  std::size_t out_vars() const { return components_.size(); }
  const std::vector<Polynomial>& components() const { return components_; }
  const Polynomial& operator[](std::size_t i) const { return components_[i]; }
  int degree() const;

  Matrix evaluate(const Matrix& x) const;

  friend PolynomialMap operator-(const PolynomialMap& a, const PolynomialMap& b);
  friend bool operator==(const PolynomialMap& a, const PolynomialMap& b) = default;

 private:
  std::size_t in_vars_ = 0;
  std::vector<Polynomial> components_;
};

// (f o g)(x) = f(g(x)). Requires f.in_vars == g.out_vars.
PolynomialMap compose(const PolynomialMap& f, const PolynomialMap& g);

// Exact coefficient test: every component is the zero polynomial.
bool poly_identity_zero(const PolynomialMap& f);

}  // namespace wolfkit

#endif  // WOLFKIT_POLYNOMIAL_HPP
