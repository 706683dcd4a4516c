#ifndef WOLFKIT_NIL_ALGEBRA_HPP
#define WOLFKIT_NIL_ALGEBRA_HPP

#include <optional>
#include <vector>

#include "wolfkit/isometry.hpp"

namespace wolfkit {

// Nonzero bracket of two basis elements, 0-based indices i < j.
struct BracketEntry {
  std::size_t i;
  std::size_t j;
  Matrix result;  // k x 1 coefficients of [X_i, X_j]
};

// Two-step nilpotent Lie algebra given by structure constants in a fixed
// basis X_1..X_k, optionally realized by infinitesimal isometries.
// Elements are coefficient columns (k x 1).
class NilLieAlgebra {
 public:
  // Brackets not listed are zero; [X_j, X_i] is implied by antisymmetry.
  // Throws ConsistencyError when the constants are not 2-step nilpotent or
  // disagree with the ambient matrix brackets.
  NilLieAlgebra(std::size_t dim, const std::vector<BracketEntry>& brackets,
                std::optional<std::vector<InfinitesimalIsometry>> ambient = std::nullopt);

  static NilLieAlgebra abelian(std::size_t dim);

  std::size_t dim() const { return dim_; }
  // c_{ij}: coefficients of [X_i, X_j]
  const Matrix& bracket(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  const Rational& structure_constant(std::size_t i, std::size_t j, std::size_t m) const {
    return table_[i * dim_ + j][m];
  }
  Matrix bracket(const Matrix& x, const Matrix& y) const;
  // ad_x as a k x k matrix acting on coefficient columns.
  Matrix ad(const Matrix& x) const;
  Matrix basis_vector(std::size_t i) const;
  std::vector<BracketEntry> nonzero_brackets() const;
  bool is_abelian() const;

  bool has_ambient() const { return ambient_.has_value(); }
  const std::vector<InfinitesimalIsometry>& ambient() const;
  const SpacePtr& space() const;
  // Sum x_i X_i as an infinitesimal isometry.
  InfinitesimalIsometry realize(const Matrix& x) const;
  // Coefficients of an ambient element, none if outside the span.
  std::optional<Matrix> coordinates(const InfinitesimalIsometry& x) const;

  // Algebra in the basis f_j = sum_i change(i, j) X_i (change invertible).
  NilLieAlgebra change_basis(const Matrix& change) const;
  // Subalgebra spanned by the columns of `basis` (must be closed).
  NilLieAlgebra subalgebra(const Matrix& basis) const;

 private:
  std::size_t dim_;
  std::vector<Matrix> table_;
  std::optional<std::vector<InfinitesimalIsometry>> ambient_;
};

// Subspaces of an algebra are returned as k x d matrices whose columns are
// a canonical (reduced echelon) basis.
Matrix center(const NilLieAlgebra& alg);
Matrix commutator_ideal(const NilLieAlgebra& alg);

// Lattice generators together with the algebra their logs generate.
struct Lattice {
  std::vector<AffineIsometry> generators;
  NilLieAlgebra algebra;
};

// Algebra spanned by the generator logs and their brackets, in that order.
// Throws PreconditionError when a log fails A^2 = 0 or A v = 0, or the span
// is not closed under brackets.
NilLieAlgebra algebra_from_lattice(const std::vector<AffineIsometry>& gens);
Lattice make_lattice(std::vector<AffineIsometry> gens);

// Hirsch length: dimension of the 2-step closure of the generator logs.
std::size_t rank(const Lattice& lattice);

struct MalcevBasis {
  Matrix change;              // columns: new basis in old coordinates
  NilLieAlgebra algebra;      // the algebra re-expressed in that basis
  std::size_t commutator_start;  // index of the first commutator-ideal vector
};

// Old basis vectors outside the commutator ideal first (input order), then
// the canonical commutator ideal basis.
MalcevBasis malcev_basis(const NilLieAlgebra& alg);

}  // namespace wolfkit

#endif  // WOLFKIT_NIL_ALGEBRA_HPP
