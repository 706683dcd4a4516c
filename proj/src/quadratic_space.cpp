#include "wolfkit/quadratic_space.hpp"

#include "wolfkit/errors.hpp"

namespace wolfkit {

QuadraticSpace::QuadraticSpace(Matrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_symmetric()) throw UsageError("gram matrix is not symmetric");
  signature_ = inertia(gram_);
  if (signature_.null != 0) throw UsageError("gram matrix is singular");
  if (signature_.plus < signature_.minus)
    throw UsageError("signature " + to_string(signature_) +
                     " violates n - s >= s; negate the form");
}

QuadraticSpace QuadraticSpace::standard(std::size_t n, std::size_t s) {
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) g(i, i) = i + s < n ? 1 : -1;
  return QuadraticSpace(std::move(g));
}

Rational QuadraticSpace::inner(const Matrix& x, const Matrix& y) const {
  return (x.transpose() * gram_ * y)(0, 0);
}

}  // namespace wolfkit
