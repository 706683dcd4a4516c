#ifndef WOLFKIT_MATRIX_HPP
#define WOLFKIT_MATRIX_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wolfkit/rational.hpp"

namespace wolfkit {

// Dense row-major matrix of exact rationals. Column vectors are n x 1
// matrices.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix column(std::span<const Rational> entries);
  static Matrix column(std::initializer_list<Rational> entries);
  // Columns of the result are the given column vectors (all n x 1).
  static Matrix from_columns(std::span<const Matrix> columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  // Entry access for column vectors.
  Rational& operator[](std::size_t i) { return data_[i]; }
  const Rational& operator[](std::size_t i) const { return data_[i]; }

  const std::vector<Rational>& entries() const { return data_; }

  Matrix transpose() const;
  Matrix col(std::size_t j) const;
  Matrix row(std::size_t i) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) { return a *= Rational(-1); }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

// Renders as nested arrays of rational strings, e.g. [[1,0],[0,-1/2]].
std::string to_string(const Matrix& m);

struct RowEchelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);

// Basis of the null space as columns of a cols x d matrix, one vector per
// free column (free variable set to 1, others 0).
Matrix kernel(const Matrix& m);

// Maximal independent subset of the columns, earliest columns preferred.
Matrix column_basis(const Matrix& m);

// Canonical basis of the column space: columns are the transposed nonzero
// rows of rref(m^T).
Matrix canonical_column_basis(const Matrix& m);

// Whether every column of `vectors` lies in the column span of `basis`.
bool in_span(const Matrix& basis, const Matrix& vectors);

// Column spaces equal.
bool same_span(const Matrix& a, const Matrix& b);

struct LinearSolution {
  std::optional<Matrix> particular;  // none when a.x = b is inconsistent
  Matrix kernel;                     // a.cols x d basis of ker a
};

// Exact solution of a.x = b for a column b. The particular solution sets
// every free variable to zero. Throws UsageError on dimension mismatch.
LinearSolution solve_linear(const Matrix& a, const Matrix& b);

// Inverse of a square matrix; throws UsageError when singular.
Matrix inverse(const Matrix& m);

struct Inertia {
  std::size_t plus = 0;
  std::size_t minus = 0;
  std::size_t null = 0;
  friend auto operator<=>(const Inertia&, const Inertia&) = default;
};

std::string to_string(const Inertia& in);

// Signature of a symmetric matrix by exact congruence diagonalization.
// Pivots are chosen lowest index first; an all-zero diagonal block with a
// nonzero off-diagonal entry is handled by the substitution x -> x + y.
Inertia inertia(const Matrix& sym);

}  // namespace wolfkit

#endif  // WOLFKIT_MATRIX_HPP
