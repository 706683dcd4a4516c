#include "wolfkit/isometry.hpp"

#include "wolfkit/errors.hpp"

namespace wolfkit {

namespace {

void check_shapes(const SpacePtr& space, const Matrix& a, const Matrix& v) {
  if (!space) throw UsageError("isometry without a quadratic space");
  std::size_t n = space->dim();
  if (a.rows() != n || a.cols() != n)
    throw UsageError("linear part must be " + std::to_string(n) + "x" + std::to_string(n));
  if (v.rows() != n || v.cols() != 1)
    throw UsageError("translation part must have " + std::to_string(n) + " entries");
}

void check_same_space(const SpacePtr& a, const SpacePtr& b) {
  if (!same_space(a, b)) throw UsageError("isometries act on different spaces");
}

}  // namespace

SpacePtr make_space(Matrix gram) {
  return std::make_shared<const QuadraticSpace>(std::move(gram));
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
  return a == b || (a && b && *a == *b);
}

InfinitesimalIsometry::InfinitesimalIsometry(SpacePtr space, Matrix a, Matrix v)
    : space_(std::move(space)), a_(std::move(a)), v_(std::move(v)) {
  check_shapes(space_, a_, v_);
}

InfinitesimalIsometry InfinitesimalIsometry::zero(SpacePtr space) {
  std::size_t n = space->dim();
  return {std::move(space), Matrix(n, n), Matrix(n, 1)};
}

InfinitesimalIsometry InfinitesimalIsometry::translation(SpacePtr space, Matrix v) {
  std::size_t n = space->dim();
  return {std::move(space), Matrix(n, n), std::move(v)};
}

bool InfinitesimalIsometry::is_gram_skew() const {
  const Matrix& g = space_->gram();
  return (g * a_ + a_.transpose() * g).is_zero();
}

Matrix InfinitesimalIsometry::at(const Matrix& p) const { return a_ * p + v_; }

Matrix InfinitesimalIsometry::homogeneous() const {
  std::size_t n = dim();
  Matrix h(n + 1, n + 1);
  h.set_block(0, 0, a_);
  h.set_block(0, n, v_);
  return h;
}

InfinitesimalIsometry& InfinitesimalIsometry::operator+=(const InfinitesimalIsometry& o) {
  check_same_space(space_, o.space_);
  a_ += o.a_;
  v_ += o.v_;
  return *this;
}

InfinitesimalIsometry operator-(const InfinitesimalIsometry& a,
                                const InfinitesimalIsometry& b) {
  check_same_space(a.space_, b.space_);
  return {a.space_, a.a_ - b.a_, a.v_ - b.v_};
}

InfinitesimalIsometry operator*(const Rational& s, const InfinitesimalIsometry& x) {
  return {x.space_, s * x.a_, s * x.v_};
}

InfinitesimalIsometry bracket(const InfinitesimalIsometry& x, const InfinitesimalIsometry& y) {
  check_same_space(x.space(), y.space());
  return {x.space(), x.A() * y.A() - y.A() * x.A(), x.A() * y.v() - y.A() * x.v()};
}

AffineIsometry::AffineIsometry(SpacePtr space, Matrix linear_offset, Matrix v)
    : space_(std::move(space)), a_(std::move(linear_offset)), v_(std::move(v)) {
  check_shapes(space_, a_, v_);
}

AffineIsometry AffineIsometry::identity(SpacePtr space) {
  std::size_t n = space->dim();
  return {std::move(space), Matrix(n, n), Matrix(n, 1)};
}

Matrix AffineIsometry::linear() const { return Matrix::identity(dim()) + a_; }

bool AffineIsometry::preserves_form() const {
  Matrix l = linear();
  return l.transpose() * space_->gram() * l == space_->gram();
}

Matrix AffineIsometry::apply(const Matrix& p) const { return p + a_ * p + v_; }

Matrix AffineIsometry::homogeneous() const {
  std::size_t n = dim();
  Matrix h = Matrix::identity(n + 1);
  h.set_block(0, 0, linear());
  h.set_block(0, n, v_);
  return h;
}

AffineIsometry AffineIsometry::inverse() const {
  Matrix li = wolfkit::inverse(linear());
  return {space_, li - Matrix::identity(dim()), -(li * v_)};
}

AffineIsometry operator*(const AffineIsometry& g, const AffineIsometry& h) {
  check_same_space(g.space_, h.space_);
  // (I+A)(I+B) = I + A + B + AB; translation (I+A) w + v
  return {g.space_, g.a_ + h.a_ + g.a_ * h.a_, g.apply(h.v_)};
}

AffineIsometry exp(const InfinitesimalIsometry& x) {
  Matrix a2 = x.A() * x.A();
  if (!a2.is_zero())
    throw PreconditionError("exp: A^2 != 0, element is not in a Wolf algebra",
                            to_string(a2));
  Matrix av = x.A() * x.v();
  if (!av.is_zero())
    throw PreconditionError("exp: A v != 0, element is not in a Wolf algebra",
                            to_string(av));
  return {x.space(), x.A(), x.v()};
}

InfinitesimalIsometry log(const AffineIsometry& g) { return {g.space(), g.A(), g.v()}; }

AffineIsometry commutator(const AffineIsometry& g1, const AffineIsometry& g2) {
  check_same_space(g1.space(), g2.space());
  return g1 * g2 * g1.inverse() * g2.inverse();
}

}  // namespace wolfkit
