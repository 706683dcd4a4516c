#ifndef WOLFKIT_ISOMETRY_HPP
#define WOLFKIT_ISOMETRY_HPP

#include <memory>

#include "wolfkit/quadratic_space.hpp"

namespace wolfkit {

using SpacePtr = std::shared_ptr<const QuadraticSpace>;

SpacePtr make_space(Matrix gram);
bool same_space(const SpacePtr& a, const SpacePtr& b);

// Element X = (A, v) of the Lie algebra of affine maps, acting as the
// vector field p -> A p + v.
class InfinitesimalIsometry {
 public:
  InfinitesimalIsometry(SpacePtr space, Matrix a, Matrix v);
  static InfinitesimalIsometry zero(SpacePtr space);
  static InfinitesimalIsometry translation(SpacePtr space, Matrix v);

  const SpacePtr& space() const { return space_; }
  std::size_t dim() const { return a_.rows(); }
  const Matrix& A() const { return a_; }
  const Matrix& v() const { return v_; }

  // gram A + A^T gram = 0
  bool is_gram_skew() const;
  // b(p) = A p + v
  Matrix at(const Matrix& p) const;
  // [[A, v], [0, 0]]
  Matrix homogeneous() const;
  bool is_zero() const { return a_.is_zero() && v_.is_zero(); }

  InfinitesimalIsometry& operator+=(const InfinitesimalIsometry& o);
  friend InfinitesimalIsometry operator+(InfinitesimalIsometry a,
                                         const InfinitesimalIsometry& b) {
    return a += b;
  }
  friend InfinitesimalIsometry operator-(const InfinitesimalIsometry& a,
                                         const InfinitesimalIsometry& b);
  friend InfinitesimalIsometry operator*(const Rational& s, const InfinitesimalIsometry& x);
  friend bool operator==(const InfinitesimalIsometry& a, const InfinitesimalIsometry& b) {
    return a.a_ == b.a_ && a.v_ == b.v_;
  }

 private:
  SpacePtr space_;
  Matrix a_;
  Matrix v_;
};

// Matrix commutator of homogeneous matrices: ([A,B], A w - B v).
InfinitesimalIsometry bracket(const InfinitesimalIsometry& x, const InfinitesimalIsometry& y);

// Affine map g = (I + A, v): p -> p + A p + v. Construction only checks
// shapes; preserves_form() reports whether I + A is an isometry.
class AffineIsometry {
 public:
  AffineIsometry(SpacePtr space, Matrix linear_offset, Matrix v);
  static AffineIsometry identity(SpacePtr space);

  const SpacePtr& space() const { return space_; }
  std::size_t dim() const { return a_.rows(); }
  const Matrix& A() const { return a_; }
  const Matrix& v() const { return v_; }
  Matrix linear() const;

  bool preserves_form() const;
  Matrix apply(const Matrix& p) const;
  Matrix homogeneous() const;
  AffineIsometry inverse() const;
  bool is_identity() const { return a_.is_zero() && v_.is_zero(); }

  friend AffineIsometry operator*(const AffineIsometry& g, const AffineIsometry& h);
  friend bool operator==(const AffineIsometry& a, const AffineIsometry& b) {
    return a.a_ == b.a_ && a.v_ == b.v_;
  }

 private:
  SpacePtr space_;
  Matrix a_;
  Matrix v_;
};

// (A, v) -> (I + A, v). Requires A^2 = 0 and A v = 0; otherwise throws
// PreconditionError with the failing expression as witness.
AffineIsometry exp(const InfinitesimalIsometry& x);

// (I + A, v) -> (A, v)
InfinitesimalIsometry log(const AffineIsometry& g);

// g1 g2 g1^-1 g2^-1 by matrix arithmetic.
AffineIsometry commutator(const AffineIsometry& g1, const AffineIsometry& g2);

}  // namespace wolfkit

#endif  // WOLFKIT_ISOMETRY_HPP
