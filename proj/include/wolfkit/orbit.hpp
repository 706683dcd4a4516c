#ifndef WOLFKIT_ORBIT_HPP
#define WOLFKIT_ORBIT_HPP

#include <cstdint>
#include <vector>

#include "wolfkit/nil_algebra.hpp"
#include "wolfkit/report.hpp"

namespace wolfkit {

// Orbit F_p = p + span{b_1(p), ..., b_k(p)} with b_i(p) = A_i p + v_i.
struct OrbitChart {
  Matrix base;        // p
  Matrix directions;  // n x k, column i is b_i(p)

  std::size_t dim() const { return directions.cols(); }
  bool contains(const Matrix& q) const;
};

// Throws PreconditionError (freeness violation) when the b_i(p) are
// linearly dependent; the witness is a kernel vector.
OrbitChart orbit_chart(const NilLieAlgebra& alg, const Matrix& p);

// Pullback of the ambient form to the algebra.
struct OrbitMetric {
  Matrix gram;        // (X_i, X_j) = <b_i(p), b_j(p)>
  Inertia signature;  // (n_plus, n_minus, n_null)
  Matrix radical;     // canonical basis of the radical, in algebra coordinates
};

struct OrbitMetricOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 20;
};

// Gram at p, checked equal at `samples` further random points. Throws
// ConsistencyError when the Gram depends on the point.
OrbitMetric orbit_metric(const NilLieAlgebra& alg, const Matrix& p,
                         const OrbitMetricOptions& options = {});

// Metric attached to an abstract invariant form.
OrbitMetric metric_from_form(const NilLieAlgebra& alg, const Matrix& form);

// Bi-invariance on all basis triples, isotropy of [g,g], orthogonality of
// the center to [g,g], Z = [X,Y] orthogonal to span{X,Y,Z}, and pairing
// partners of commutators lying outside the center.
Report invariance_check(const Matrix& gram, const NilLieAlgebra& alg);

// Kernel of the Gram matrix; throws ConsistencyError if it is not an ideal.
Matrix radical(const Matrix& gram, const NilLieAlgebra& alg);

// The connection nabla_{X_i} X_j = 1/2 [X_i, X_j] with its torsion and
// curvature verified on all basis triples.
struct Connection {
  std::vector<Matrix> table;  // table[i * k + j] = coefficients of nabla_{X_i} X_j
  Report report;              // entries "torsion_free", "flat"
};

Connection connection(const NilLieAlgebra& alg);

}  // namespace wolfkit

#endif  // WOLFKIT_ORBIT_HPP
