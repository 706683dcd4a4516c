#include "wolfkit/butterfly.hpp"

#include "wolfkit/certificate.hpp"
#include "wolfkit/errors.hpp"

namespace wolfkit {

namespace {

Rational pair(const Matrix& form, const Matrix& x, const Matrix& y) {
  return (x.transpose() * form * y)(0, 0);
}

Matrix split_form3() {
  Matrix g(6, 6);
  g.set_block(0, 3, Matrix::identity(3));
  g.set_block(3, 0, Matrix::identity(3));
  return g;
}

}  // namespace

std::string_view to_string(NoButterflyReason r) {
  switch (r) {
    case NoButterflyReason::Abelian: return "abelian";
    case NoButterflyReason::CommutatorsInRadical: return "Z in radical: every commutator lies in the radical";
  }
  return "unknown";
}

ButterflyResult extract_butterfly(const NilLieAlgebra& alg, const Matrix& form) {
  const std::size_t k = alg.dim();
  if (form.rows() != k || form.cols() != k) throw UsageError("form must be k x k");
  auto brackets = alg.nonzero_brackets();
  if (brackets.empty()) return {std::nullopt, NoButterflyReason::Abelian};

  for (const auto& b : brackets) {
    const Matrix& z = b.result;
    for (std::size_t m = 0; m < k; ++m) {
      Rational p = pair(form, z, alg.basis_vector(m));
      if (p == 0) continue;

      Matrix x = alg.basis_vector(b.i);
      Matrix y = alg.basis_vector(b.j);
      Matrix zs = (1 / p) * alg.basis_vector(m);
      if (in_span(center(alg), zs))
        throw ConsistencyError("pairing partner Z* of a commutator is central");
      // (X, [Y,Z*]) = (Y, [Z*,X]) = (Z, Z*) = 1 for an invariant form
      Matrix xs = alg.bracket(y, zs);
      Matrix ys = alg.bracket(zs, x);

      // central shifts: X, then Y, then Z*
      x = x - Rational(1, 2) * pair(form, x, x) * xs - pair(form, x, y) * ys -
          pair(form, x, zs) * z;
      y = y - Rational(1, 2) * pair(form, y, y) * ys - pair(form, y, zs) * z;
      zs = zs - Rational(1, 2) * pair(form, zs, zs) * z;

      std::vector<Matrix> cols{x, y, zs, xs, ys, z};
      Matrix vectors = Matrix::from_columns(cols, k);
      if (rank(vectors) != 6)
        throw ConsistencyError("butterfly frame vectors are linearly dependent");
      Matrix gram = vectors.transpose() * form * vectors;
      if (gram != split_form3())
        throw ConsistencyError("canonicalized frame Gram is " + to_string(gram) +
                               ", not the split form");
      NilLieAlgebra frame_alg = alg.subalgebra(vectors);
      return {ButterflyFrame{std::move(vectors), std::move(gram), std::move(frame_alg)},
              std::nullopt};
    }
  }
  return {std::nullopt, NoButterflyReason::CommutatorsInRadical};
}

NondegenerateAnalysis nondegenerate_analysis(const std::vector<AffineIsometry>& gens,
                                             const OrbitMetricOptions& options) {
  NilLieAlgebra alg = algebra_from_lattice(gens);
  Matrix origin(gens.front().dim(), 1);
  NondegenerateAnalysis out{{}, orbit_metric(alg, origin, options), std::nullopt, {}};
  Report& r = out.report;
  const Inertia& sig = out.metric.signature;

  if (sig.null != 0) {
    r.add("nondegenerate", Status::Skip, "orbit metric is degenerate, signature " + to_string(sig));
    return out;
  }
  r.add("nondegenerate", Status::Pass, "orbit metric signature " + to_string(sig));

  bool abelian_hol = holonomy_abelian(gens);
  r.add("holonomy_abelian", abelian_hol ? Status::Pass : Status::Fail,
        abelian_hol ? "linear parts commute"
                    : "non-degenerate orbit metric with non-abelian holonomy: invalid input");

  if (alg.is_abelian()) {
    r.add("butterfly", Status::Skip, "algebra is abelian, no butterfly required");
    return out;
  }
  r.add("dim_at_least_6", alg.dim() >= 6 ? Status::Pass : Status::Fail,
        "dim g = " + std::to_string(alg.dim()));
  ButterflyResult b = extract_butterfly(alg, out.metric.gram);
  if (!b.frame) {
    r.add("butterfly", Status::Fail,
          std::string("non-abelian with non-degenerate metric but no butterfly: ") +
              std::string(to_string(*b.reason)));
    return out;
  }
  r.add("butterfly", Status::Pass, "frame found", b.frame->vectors);
  for (std::size_t c = 0; c < 6; ++c)
    out.butterfly_lattice.push_back(exp(alg.realize(b.frame->vectors.col(c))));
  r.add("butterfly_lattice", Status::Evidence,
        "subgroup generated by the 6 frame exponentials: a lattice contained in the "
        "intersection of the butterfly subgroup with the lattice (equality not decided)");
  out.frame = std::move(b.frame);
  return out;
}

}  // namespace wolfkit
