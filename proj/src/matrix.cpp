#include "wolfkit/matrix.hpp"

#include <utility>

#include "wolfkit/errors.hpp"

namespace wolfkit {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw UsageError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::column(std::span<const Rational> entries) {
  Matrix m(entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m.data_[i] = entries[i];
  return m;
}

Matrix Matrix::column(std::initializer_list<Rational> entries) {
  return column(std::span<const Rational>(entries.begin(), entries.size()));
}

Matrix Matrix::from_columns(std::span<const Matrix> columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].rows() != rows || columns[j].cols() != 1)
      throw UsageError("from_columns: column has wrong shape");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::col(std::size_t j) const { return block(0, j, rows_, 1); }
Matrix Matrix::row(std::size_t i) const { return block(i, 0, 1, cols_); }

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                     std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw UsageError("block out of range");
  Matrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  if (r0 + m.rows() > rows_ || c0 + m.cols() > cols_)
    throw UsageError("set_block out of range");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw UsageError("matrix sum: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw UsageError("matrix difference: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw UsageError("matrix product: shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) c(i, j) += aik * b(k, j);
    }
  return c;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw UsageError("hstack: row mismatch");
  Matrix m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw UsageError("vstack: column mismatch");
  Matrix m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

std::string to_string(const Matrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += ",";
    s += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ",";
      s += to_string(m(i, j));
    }
    s += "]";
  }
  return s + "]";
}

RowEchelon rref(Matrix m) {
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel(const Matrix& m) {
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Matrix> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Matrix v(m.cols(), 1);
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(basis, m.cols());
}

Matrix column_basis(const Matrix& m) {
  RowEchelon e = rref(m);
  Matrix b(m.rows(), e.pivots.size());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) b.set_block(0, k, m.col(e.pivots[k]));
  return b;
}

Matrix canonical_column_basis(const Matrix& m) {
  RowEchelon e = rref(m.transpose());
  return e.reduced.block(0, 0, e.pivots.size(), m.rows()).transpose();
}

bool in_span(const Matrix& basis, const Matrix& vectors) {
  if (vectors.cols() == 0) return true;
  if (basis.cols() == 0) return vectors.is_zero();
  return rank(hstack(basis, vectors)) == rank(basis);
}

bool same_span(const Matrix& a, const Matrix& b) {
  return in_span(a, b) && in_span(b, a);
}

LinearSolution solve_linear(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || b.cols() != 1)
    throw UsageError("solve_linear: a is " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " but b is " + std::to_string(b.rows()) +
                     "x" + std::to_string(b.cols()));
  LinearSolution out;
  out.kernel = kernel(a);
  RowEchelon e = rref(hstack(a, b));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return out;
  Matrix x(a.cols(), 1);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
  out.particular = std::move(x);
  return out;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw UsageError("inverse: matrix not square");
  std::size_t n = m.rows();
  RowEchelon e = rref(hstack(m, Matrix::identity(n)));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
    throw UsageError("inverse: matrix is singular");
  return e.reduced.block(0, n, n, n);
}

std::string to_string(const Inertia& in) {
  return "(" + std::to_string(in.plus) + "," + std::to_string(in.minus) + "," +
         std::to_string(in.null) + ")";
}

Inertia inertia(const Matrix& sym) {
  if (!sym.is_symmetric()) throw UsageError("inertia: matrix is not symmetric");
  Matrix m = sym;
  const std::size_t n = m.rows();
  Inertia out;

  auto swap_index = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < n; ++j) std::swap(m(a, j), m(b, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(m(i, a), m(i, b));
  };
  // x_a -> x_a + x_b as a congruence: row a += row b, col a += col b.
  auto add_index = [&](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < n; ++j) m(a, j) += m(b, j);
    for (std::size_t i = 0; i < n; ++i) m(i, a) += m(i, b);
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, p) == 0) ++p;
    if (p == n) {
      std::size_t a = n, b = n;
      for (std::size_t i = k; i < n && a == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (m(i, j) != 0) {
            a = i;
            b = j;
            break;
          }
      if (a == n) {
        out.null += n - k;
        break;
      }
      add_index(a, b);  // new diagonal entry is 2 m(a,b) != 0
      p = a;
    }
    swap_index(k, p);
    const Rational pivot = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      Rational f = m(i, k) / pivot;
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
      for (std::size_t j = k; j < n; ++j) m(j, i) = m(i, j);
    }
    (pivot > 0 ? out.plus : out.minus) += 1;
  }
  return out;
}

}  // namespace wolfkit
