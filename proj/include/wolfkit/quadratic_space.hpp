#ifndef WOLFKIT_QUADRATIC_SPACE_HPP
#define WOLFKIT_QUADRATIC_SPACE_HPP

#include "wolfkit/matrix.hpp"

namespace wolfkit {

// R^n with a symmetric invertible Gram matrix of signature (n-s, s),
// n - s >= s.
class QuadraticSpace {
 public:
  explicit QuadraticSpace(Matrix gram);

  // diag(1,...,1,-1,...,-1) with s minus signs.
  static QuadraticSpace standard(std::size_t n, std::size_t s);

  std::size_t dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  // (n - s, s, 0)
  const Inertia& signature() const { return signature_; }

  Rational inner(const Matrix& x, const Matrix& y) const;

  friend bool operator==(const QuadraticSpace& a, const QuadraticSpace& b) {
    return a.gram_ == b.gram_;
  }

 private:
  Matrix gram_;
  Inertia signature_;
};

}  // namespace wolfkit

#endif  // WOLFKIT_QUADRATIC_SPACE_HPP
