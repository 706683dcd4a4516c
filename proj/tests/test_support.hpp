#ifndef WOLFKIT_TEST_SUPPORT_HPP
#define WOLFKIT_TEST_SUPPORT_HPP

#include "wolfkit/matrix.hpp"
#include "wolfkit/polynomial.hpp"

namespace wolfkit::testing {

inline Matrix random_matrix(RationalSampler& s, std::size_t r, std::size_t c) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = s.next();
  return m;
}

inline Matrix random_invertible(RationalSampler& s, std::size_t n) {
  for (;;) {
    Matrix m = random_matrix(s, n, n);
    if (rank(m) == n) return m;
  }
}

inline Matrix random_symmetric(RationalSampler& s, std::size_t n) {
  Matrix m = random_matrix(s, n, n);
  return m + m.transpose();
}

// Random polynomial with every monomial of total degree <= deg.
inline Polynomial random_polynomial(RationalSampler& s, std::size_t nvars, unsigned deg) {
  Polynomial p(nvars);
  Exponents e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
    if (var == nvars) {
      p.add_term(e, s.next());
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[var] = k;
      self(self, var + 1, left - k);
    }
    e[var] = 0;
  };
  rec(rec, 0, deg);
  return p;
}

inline PolynomialMap random_map(RationalSampler& s, std::size_t in, std::size_t out,
                                unsigned deg) {
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < out; ++i) comps.push_back(random_polynomial(s, in, deg));
  return PolynomialMap(in, std::move(comps));
}

inline Matrix random_point(RationalSampler& s, std::size_t n) { return random_matrix(s, n, 1); }

}  // namespace wolfkit::testing

#endif  // WOLFKIT_TEST_SUPPORT_HPP
