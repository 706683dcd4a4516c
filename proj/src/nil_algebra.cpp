#include "wolfkit/nil_algebra.hpp"

#include "wolfkit/certificate.hpp"
#include "wolfkit/errors.hpp"

namespace wolfkit {

namespace {

Matrix flatten(const InfinitesimalIsometry& x) {
  std::size_t n = x.dim();
  Matrix f(n * n + n, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) f[i * n + j] = x.A()(i, j);
  for (std::size_t i = 0; i < n; ++i) f[n * n + i] = x.v()[i];
  return f;
}

std::optional<Matrix> express(const Matrix& basis, const Matrix& target) {
  LinearSolution s = solve_linear(basis, target);
  if (!s.particular) return std::nullopt;
  if (s.kernel.cols() != 0) throw ConsistencyError("basis vectors are linearly dependent");
  return s.particular;
}

}  // namespace

NilLieAlgebra::NilLieAlgebra(std::size_t dim, const std::vector<BracketEntry>& brackets,
                             std::optional<std::vector<InfinitesimalIsometry>> ambient)
    : dim_(dim), table_(dim * dim, Matrix(dim, 1)), ambient_(std::move(ambient)) {
  for (const auto& b : brackets) {
    if (b.i >= dim || b.j >= dim || b.result.rows() != dim || b.result.cols() != 1)
      throw UsageError("bracket entry out of range");
    if (b.i == b.j) {
      if (!b.result.is_zero()) throw UsageError("bracket [X,X] must vanish");
      continue;
    }
    table_[b.i * dim + b.j] = b.result;
    table_[b.j * dim + b.i] = -b.result;
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t l = 0; l < dim; ++l)
        if (!bracket(basis_vector(i), bracket(j, l)).is_zero())
          throw ConsistencyError("structure constants are not 2-step nilpotent: [X" +
                                 std::to_string(i + 1) + ", [X" + std::to_string(j + 1) +
                                 ", X" + std::to_string(l + 1) + "]] != 0");
  if (ambient_) {
    if (ambient_->size() != dim) throw UsageError("ambient basis has wrong length");
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i + 1; j < dim; ++j)
        if (wolfkit::bracket((*ambient_)[i], (*ambient_)[j]) != realize(bracket(i, j)))
          throw ConsistencyError("matrix bracket of X" + std::to_string(i + 1) + ", X" +
                                 std::to_string(j + 1) + " disagrees with structure constants");
  }
}

NilLieAlgebra NilLieAlgebra::abelian(std::size_t dim) { return NilLieAlgebra(dim, {}); }

Matrix NilLieAlgebra::bracket(const Matrix& x, const Matrix& y) const {
  Matrix out(dim_, 1);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0 || i == j) continue;
      out += (x[i] * y[j]) * table_[i * dim_ + j];
    }
  }
  return out;
}

Matrix NilLieAlgebra::ad(const Matrix& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) m.set_block(0, j, bracket(x, basis_vector(j)));
  return m;
}

Matrix NilLieAlgebra::basis_vector(std::size_t i) const {
  Matrix e(dim_, 1);
  e[i] = 1;
  return e;
}

std::vector<BracketEntry> NilLieAlgebra::nonzero_brackets() const {
  std::vector<BracketEntry> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (!bracket(i, j).is_zero()) out.push_back({i, j, bracket(i, j)});
  return out;
}

bool NilLieAlgebra::is_abelian() const { return nonzero_brackets().empty(); }

const std::vector<InfinitesimalIsometry>& NilLieAlgebra::ambient() const {
  if (!ambient_) throw UsageError("algebra has no ambient representation");
  return *ambient_;
}

const SpacePtr& NilLieAlgebra::space() const {
  if (!ambient_ || ambient_->empty()) throw UsageError("algebra has no ambient representation");
  return ambient_->front().space();
}

InfinitesimalIsometry NilLieAlgebra::realize(const Matrix& x) const {
  const auto& basis = ambient();
  InfinitesimalIsometry out = InfinitesimalIsometry::zero(space());
  for (std::size_t i = 0; i < dim_; ++i)
    if (x[i] != 0) out += x[i] * basis[i];
  return out;
}

std::optional<Matrix> NilLieAlgebra::coordinates(const InfinitesimalIsometry& x) const {
  const auto& basis = ambient();
  std::vector<Matrix> cols;
  for (const auto& b : basis) cols.push_back(flatten(b));
  Matrix target = flatten(x);
  return express(Matrix::from_columns(cols, target.rows()), target);
}

NilLieAlgebra NilLieAlgebra::change_basis(const Matrix& change) const {
  if (change.rows() != dim_ || change.cols() != dim_ || rank(change) != dim_)
    throw UsageError("change of basis must be an invertible k x k matrix");
  return subalgebra(change);
}

NilLieAlgebra NilLieAlgebra::subalgebra(const Matrix& basis) const {
  const std::size_t d = basis.cols();
  if (basis.rows() != dim_ || rank(basis) != d)
    throw UsageError("subalgebra basis must be independent columns");
  std::vector<BracketEntry> brackets;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Matrix b = bracket(basis.col(i), basis.col(j));
      if (b.is_zero()) continue;
      auto coords = express(basis, b);
      if (!coords) throw UsageError("subspace is not closed under the bracket");
      brackets.push_back({i, j, *coords});
    }
  std::optional<std::vector<InfinitesimalIsometry>> amb;
  if (ambient_) {
    amb.emplace();
    for (std::size_t j = 0; j < d; ++j) amb->push_back(realize(basis.col(j)));
  }
  return NilLieAlgebra(d, brackets, std::move(amb));
}

Matrix center(const NilLieAlgebra& alg) {
  const std::size_t k = alg.dim();
  // x is central iff [x, X_j] = 0 for all j: stack ad-columns into one system.
  Matrix system(k * k, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < k; ++i) {
      // column i of the system: coefficients of [X_i, X_j]
      const Matrix& b = alg.bracket(i, j);
      for (std::size_t m = 0; m < k; ++m) system(j * k + m, i) = b[m];
    }
  return canonical_column_basis(kernel(system));
}

Matrix commutator_ideal(const NilLieAlgebra& alg) {
  const std::size_t k = alg.dim();
  std::vector<Matrix> cols;
  for (const auto& b : alg.nonzero_brackets()) cols.push_back(b.result);
  return canonical_column_basis(Matrix::from_columns(cols, k));
}

NilLieAlgebra algebra_from_lattice(const std::vector<AffineIsometry>& gens) {
  SpanningSet span = two_step_span(gens);
  for (std::size_t i = 0; i < span.elements.size(); ++i) {
    try {
      (void)exp(span.elements[i]);
    } catch (const PreconditionError& e) {
      throw PreconditionError(span.labels[i] + ": " + e.what(), e.witness());
    }
  }
  const auto& xs = span.elements;
  const std::size_t k = xs.size();
  const std::size_t n = gens.front().dim();
  std::vector<Matrix> cols;
  for (const auto& x : xs) cols.push_back(flatten(x));
  Matrix basis = Matrix::from_columns(cols, n * n + n);
  std::vector<BracketEntry> brackets;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      InfinitesimalIsometry b = bracket(xs[i], xs[j]);
      if (b.is_zero()) continue;
      auto coords = express(basis, flatten(b));
      if (!coords)
        throw PreconditionError("span of logs and brackets is not closed: [" + span.labels[i] +
                                    ", " + span.labels[j] + "] leaves it",
                                to_string(b.homogeneous()));
      brackets.push_back({i, j, *coords});
    }
  try {
    return NilLieAlgebra(k, brackets, xs);
  } catch (const ConsistencyError& e) {
    throw PreconditionError(e.what(), "");
  }
}

Lattice make_lattice(std::vector<AffineIsometry> gens) {
  NilLieAlgebra alg = algebra_from_lattice(gens);
  return Lattice{std::move(gens), std::move(alg)};
}

std::size_t rank(const Lattice& lattice) {
  return two_step_span(lattice.generators).elements.size();
}

MalcevBasis malcev_basis(const NilLieAlgebra& alg) {
  const std::size_t k = alg.dim();
  Matrix comm = commutator_ideal(alg);
  Matrix chosen = comm;
  std::vector<Matrix> head;
  for (std::size_t i = 0; i < k && head.size() + comm.cols() < k; ++i) {
    Matrix e = alg.basis_vector(i);
    if (in_span(chosen, e)) continue;
    chosen = hstack(chosen, e);
    head.push_back(e);
  }
  Matrix change = hstack(Matrix::from_columns(head, k), comm);
  return MalcevBasis{change, alg.change_basis(change), head.size()};
}

}  // namespace wolfkit
