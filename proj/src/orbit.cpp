#include "wolfkit/orbit.hpp"

#include "wolfkit/errors.hpp"

namespace wolfkit {

namespace {

Matrix orbit_gram(const NilLieAlgebra& alg, const Matrix& p) {
  const Matrix& g = alg.space()->gram();
  std::vector<Matrix> dirs;
  for (const auto& x : alg.ambient()) dirs.push_back(x.at(p));
  Matrix b = Matrix::from_columns(dirs, p.rows());
  return b.transpose() * g * b;
}

std::string triple_name(std::size_t i, std::size_t j, std::size_t l) {
  return "(X" + std::to_string(i + 1) + ", X" + std::to_string(j + 1) + ", X" +
         std::to_string(l + 1) + ")";
}

Rational pair(const Matrix& gram, const Matrix& x, const Matrix& y) {
  return (x.transpose() * gram * y)(0, 0);
}

}  // namespace

bool OrbitChart::contains(const Matrix& q) const {
  if (directions.cols() == 0) return q == base;
  return solve_linear(directions, q - base).particular.has_value();
}

OrbitChart orbit_chart(const NilLieAlgebra& alg, const Matrix& p) {
  if (p.rows() != alg.space()->dim() || p.cols() != 1)
    throw UsageError("point has wrong dimension");
  std::vector<Matrix> dirs;
  for (const auto& x : alg.ambient()) dirs.push_back(x.at(p));
  OrbitChart chart{p, Matrix::from_columns(dirs, p.rows())};
  Matrix ker = kernel(chart.directions);
  if (ker.cols() != 0)
    throw PreconditionError("orbit directions are dependent: action is not free at p",
                            to_string(ker.col(0)));
  return chart;
}

OrbitMetric orbit_metric(const NilLieAlgebra& alg, const Matrix& p,
                         const OrbitMetricOptions& options) {
  (void)orbit_chart(alg, p);
  Matrix gram = orbit_gram(alg, p);
  RationalSampler sampler(options.seed);
  for (std::size_t s = 0; s < options.samples; ++s) {
    Matrix q(p.rows(), 1);
    for (std::size_t i = 0; i < p.rows(); ++i) q[i] = sampler.next();
    Matrix other = orbit_gram(alg, q);
    if (other != gram)
      throw ConsistencyError("orbit metric depends on the point: Gram at " + to_string(q) +
                             " is " + to_string(other) + ", at p it is " + to_string(gram));
  }
  return metric_from_form(alg, gram);
}

OrbitMetric metric_from_form(const NilLieAlgebra& alg, const Matrix& form) {
  if (form.rows() != alg.dim() || !form.is_symmetric())
    throw UsageError("form must be a symmetric k x k matrix");
  return OrbitMetric{form, inertia(form), radical(form, alg)};
}

Report invariance_check(const Matrix& gram, const NilLieAlgebra& alg) {
  const std::size_t k = alg.dim();
  Report r;
  if (gram.rows() != k || gram.cols() != k) throw UsageError("Gram has wrong size");

  {
    std::size_t failures = 0;
    CheckEntry e{"bi_invariance", Status::Pass, "", std::nullopt};
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t l = 0; l < k; ++l) {
          Rational lhs = pair(gram, alg.bracket(i, j), alg.basis_vector(l));
          Rational rhs = -pair(gram, alg.basis_vector(j), alg.bracket(i, l));
          if (lhs == rhs) continue;
          if (failures++ == 0) {
            e.status = Status::Fail;
            e.detail = "([X_i,X_j],X_l) != -(X_j,[X_i,X_l]) at " + triple_name(i, j, l);
            e.witness = Matrix{{lhs, rhs}};
          }
        }
    if (failures == 0)
      e.detail = std::to_string(k * k * k) + " triples checked";
    else
      e.detail += " (" + std::to_string(failures) + " triples failed)";
    r.entries.push_back(std::move(e));
  }

  Matrix comm = commutator_ideal(alg);
  Matrix cen = center(alg);
  {
    Matrix block = comm.transpose() * gram * comm;
    if (block.is_zero())
      r.add("commutator_isotropic", Status::Pass,
            "[g,g] of dim " + std::to_string(comm.cols()) + " is totally isotropic");
    else
      r.add("commutator_isotropic", Status::Fail, "Gram restricted to [g,g] is nonzero", block);
  }
  {
    Matrix block = cen.transpose() * gram * comm;
    if (block.is_zero())
      r.add("center_perp_commutator", Status::Pass, "center is orthogonal to [g,g]");
    else
      r.add("center_perp_commutator", Status::Fail, "(center, [g,g]) pairing is nonzero", block);
  }
  {
    CheckEntry e{"bracket_perp_span", Status::Pass, "", std::nullopt};
    std::size_t pairs = 0;
    for (const auto& b : alg.nonzero_brackets()) {
      ++pairs;
      Matrix row{{pair(gram, b.result, alg.basis_vector(b.i)),
                  pair(gram, b.result, alg.basis_vector(b.j)), pair(gram, b.result, b.result)}};
      if (!row.is_zero() && e.status == Status::Pass) {
        e.status = Status::Fail;
        e.detail = "Z = [X" + std::to_string(b.i + 1) + ", X" + std::to_string(b.j + 1) +
                   "] not orthogonal to span{X,Y,Z}";
        e.witness = row;
      }
    }
    if (e.status == Status::Pass) e.detail = std::to_string(pairs) + " nonzero brackets checked";
    r.entries.push_back(std::move(e));
  }
  {
    // (Z, W) != 0 for Z in [g,g] forces W outside the center.
    CheckEntry e{"pairing_partner_not_central", Status::Pass, "", std::nullopt};
    std::size_t witnesses = 0;
    for (std::size_t c = 0; c < comm.cols(); ++c)
      for (std::size_t m = 0; m < k; ++m) {
        if (pair(gram, comm.col(c), alg.basis_vector(m)) == 0) continue;
        ++witnesses;
        if (in_span(cen, alg.basis_vector(m)) && e.status == Status::Pass) {
          e.status = Status::Fail;
          e.detail = "X" + std::to_string(m + 1) + " pairs with [g,g] but is central";
          e.witness = comm.col(c);
        }
      }
    if (e.status == Status::Pass)
      e.detail = std::to_string(witnesses) + " pairing witnesses found";
    r.entries.push_back(std::move(e));
  }
  return r;
}

Matrix radical(const Matrix& gram, const NilLieAlgebra& alg) {
  Matrix rad = canonical_column_basis(kernel(gram));
  for (std::size_t c = 0; c < rad.cols(); ++c)
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      Matrix b = alg.bracket(rad.col(c), alg.basis_vector(j));
      if (!in_span(rad, b))
        throw ConsistencyError("radical is not an ideal: bracket " + to_string(b) +
                               " leaves it");
    }
  return rad;
}

Connection connection(const NilLieAlgebra& alg) {
  const std::size_t k = alg.dim();
  Connection c;
  c.table.reserve(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) c.table.push_back(Rational(1, 2) * alg.bracket(i, j));

  auto nabla = [&](const Matrix& x, const Matrix& y) {
    Matrix out(k, 1);
    for (std::size_t i = 0; i < k; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < k; ++j)
        if (y[j] != 0) out += (x[i] * y[j]) * c.table[i * k + j];
    }
    return out;
  };

  CheckEntry torsion{"torsion_free", Status::Pass, "", std::nullopt};
  CheckEntry flat{"flat", Status::Pass, "", std::nullopt};
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Matrix xi = alg.basis_vector(i), xj = alg.basis_vector(j);
      Matrix t = nabla(xi, xj) - nabla(xj, xi) - alg.bracket(i, j);
      if (!t.is_zero() && torsion.status == Status::Pass) {
        torsion.status = Status::Fail;
        torsion.detail = "T(X" + std::to_string(i + 1) + ", X" + std::to_string(j + 1) + ") != 0";
        torsion.witness = t;
      }
      for (std::size_t l = 0; l < k; ++l) {
        Matrix xl = alg.basis_vector(l);
        Matrix curv = nabla(xi, nabla(xj, xl)) - nabla(xj, nabla(xi, xl)) -
                      nabla(alg.bracket(i, j), xl);
        if (!curv.is_zero() && flat.status == Status::Pass) {
          flat.status = Status::Fail;
          flat.detail = "R at " + triple_name(i, j, l) + " != 0";
          flat.witness = curv;
        }
      }
    }
  if (torsion.status == Status::Pass) torsion.detail = std::to_string(k * k) + " pairs checked";
  if (flat.status == Status::Pass) flat.detail = std::to_string(k * k * k) + " triples checked";
  c.report.entries.push_back(std::move(torsion));
  c.report.entries.push_back(std::move(flat));
  return c;
}

}  // namespace wolfkit
