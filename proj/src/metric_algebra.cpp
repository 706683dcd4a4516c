#include "wolfkit/metric_algebra.hpp"

#include "wolfkit/errors.hpp"
#include "wolfkit/orbit.hpp"

namespace wolfkit {

namespace {

// (ad*_x xi)(w) = -xi([x, w]); returns dual coordinates.
Matrix coadjoint(const NilLieAlgebra& n, const Matrix& x, const Matrix& xi) {
  const std::size_t k = n.dim();
  Matrix out(k, 1);
  for (std::size_t w = 0; w < k; ++w)
    out[w] = -(xi.transpose() * n.bracket(x, n.basis_vector(w)))(0, 0);
  return out;
}

Matrix split_form(std::size_t k) {
  Matrix g(2 * k, 2 * k);
  g.set_block(0, k, Matrix::identity(k));
  g.set_block(k, 0, Matrix::identity(k));
  return g;
}

}  // namespace

MetricNilAlgebra make_metric_algebra(NilLieAlgebra algebra, Matrix form) {
  if (form.rows() != algebra.dim() || form.cols() != algebra.dim())
    throw UsageError("form must be k x k");
  if (!form.is_symmetric()) throw UsageError("form is not symmetric");
  Report r = invariance_check(form, algebra);
  const CheckEntry* e = r.find("bi_invariance");
  if (e->status == Status::Fail) throw ConsistencyError("form is not invariant: " + e->detail);
  return MetricNilAlgebra{std::move(algebra), std::move(form)};
}

NilLieAlgebra heisenberg() {
  return NilLieAlgebra(3, {{0, 1, Matrix::column({0, 0, 1})}});
}

MetricNilAlgebra canonical_b6() {
  const NilLieAlgebra h = heisenberg();
  // slot of each element in the basis (X, Y, Z*, X*, Y*, Z)
  const std::size_t h_slot[3] = {0, 1, 5};
  const std::size_t dual_slot[3] = {3, 4, 2};
  auto embed = [&](const Matrix& h_part, const Matrix& dual_part) {
    Matrix v(6, 1);
    for (std::size_t a = 0; a < 3; ++a) {
      v[h_slot[a]] += h_part[a];
      v[dual_slot[a]] += dual_part[a];
    }
    return v;
  };
  // basis element as (h-part, dual-part)
  std::vector<std::pair<Matrix, Matrix>> basis(6, {Matrix(3, 1), Matrix(3, 1)});
  for (std::size_t a = 0; a < 3; ++a) {
    basis[h_slot[a]].first[a] = 1;
    basis[dual_slot[a]].second[a] = 1;
  }
  std::vector<BracketEntry> brackets;
  Matrix form(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      const auto& [x, xi] = basis[i];
      const auto& [y, eta] = basis[j];
      form(i, j) = (xi.transpose() * y)(0, 0) + (eta.transpose() * x)(0, 0);
      if (i < j) {
        Matrix b = embed(h.bracket(x, y), coadjoint(h, x, eta) - coadjoint(h, y, xi));
        if (!b.is_zero()) brackets.push_back({i, j, b});
      }
    }
  return make_metric_algebra(NilLieAlgebra(6, brackets), std::move(form));
}

MetricNilAlgebra cocycle_extension(const NilLieAlgebra& n, const std::vector<BracketEntry>& omega) {
  const std::size_t k = n.dim();
  std::vector<Matrix> om(k * k, Matrix(k, 1));
  for (const auto& w : omega) {
    if (w.i >= k || w.j >= k || w.result.rows() != k || w.result.cols() != 1)
      throw UsageError("omega entry out of range");
    if (w.i == w.j) {
      if (!w.result.is_zero()) throw PreconditionError("omega is not alternating", to_string(w.result));
      continue;
    }
    om[w.i * k + w.j] = w.result;
    om[w.j * k + w.i] = -w.result;
  }
  auto omega_of = [&](const Matrix& x, const Matrix& y) {
    Matrix out(k, 1);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (x[i] != 0 && y[j] != 0) out += (x[i] * y[j]) * om[i * k + j];
    return out;
  };

  // d omega (x,y,z) = x.w(y,z) - y.w(x,z) + z.w(x,y) - w([x,y],z) + w([x,z],y) - w([y,z],x)
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      for (std::size_t c = b + 1; c < k; ++c) {
        Matrix x = n.basis_vector(a), y = n.basis_vector(b), z = n.basis_vector(c);
        Matrix d = coadjoint(n, x, omega_of(y, z)) - coadjoint(n, y, omega_of(x, z)) +
                   coadjoint(n, z, omega_of(x, y)) - omega_of(n.bracket(x, y), z) +
                   omega_of(n.bracket(x, z), y) - omega_of(n.bracket(y, z), x);
        if (!d.is_zero())
          throw PreconditionError("omega violates the cocycle identity at (e" +
                                      std::to_string(a + 1) + ", e" + std::to_string(b + 1) +
                                      ", e" + std::to_string(c + 1) + ")",
                                  to_string(d));
      }

  auto split = [k](const Matrix& v) { return std::pair{v.block(0, 0, k, 1), v.block(k, 0, k, 1)}; };
  std::vector<BracketEntry> brackets;
  for (std::size_t i = 0; i < 2 * k; ++i)
    for (std::size_t j = i + 1; j < 2 * k; ++j) {
      Matrix ei(2 * k, 1), ej(2 * k, 1);
      ei[i] = 1;
      ej[j] = 1;
      auto [x, xi] = split(ei);
      auto [y, eta] = split(ej);
      Matrix b = vstack(n.bracket(x, y),
                        coadjoint(n, x, eta) - coadjoint(n, y, xi) + omega_of(x, y));
      if (!b.is_zero()) brackets.push_back({i, j, b});
    }
  std::optional<NilLieAlgebra> ext;
  try {
    ext.emplace(2 * k, brackets);
  } catch (const ConsistencyError& e) {
    throw PreconditionError(std::string("extension is not 2-step nilpotent: ") + e.what(), "");
  }
  try {
    return make_metric_algebra(std::move(*ext), split_form(k));
  } catch (const ConsistencyError& e) {
    throw PreconditionError(std::string("dual pairing is not invariant: ") + e.what(), "");
  }
}

WolfRealization wolf_from_metric_algebra(const MetricNilAlgebra& m) {
  Inertia in = inertia(m.form);
  if (in.null != 0)
    throw PreconditionError("form is degenerate, no ambient pseudo-scalar product",
                            "signature " + to_string(in));
  SpacePtr space = make_space(m.form);
  std::vector<AffineIsometry> left, right;
  const std::size_t k = m.algebra.dim();
  for (std::size_t i = 0; i < k; ++i) {
    Matrix e = m.algebra.basis_vector(i);
    Matrix half_ad = Rational(1, 2) * m.algebra.ad(e);
    left.emplace_back(space, half_ad, e);
    right.emplace_back(space, -half_ad, e);
  }
  Lattice lattice = make_lattice(left);
  return WolfRealization{std::move(space), std::move(left), std::move(right), std::move(lattice)};
}

}  // namespace wolfkit
