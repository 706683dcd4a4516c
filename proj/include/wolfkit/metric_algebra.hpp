#ifndef WOLFKIT_METRIC_ALGEBRA_HPP
#define WOLFKIT_METRIC_ALGEBRA_HPP

#include <vector>

#include "wolfkit/nil_algebra.hpp"

namespace wolfkit {

// Two-step nilpotent algebra with an invariant symmetric form,
// ([X,Y],Z) = -(Y,[X,Z]).
struct MetricNilAlgebra {
  NilLieAlgebra algebra;
  Matrix form;
};

// Verifies symmetry and invariance on all basis triples; throws
// ConsistencyError naming the first violating triple.
MetricNilAlgebra make_metric_algebra(NilLieAlgebra algebra, Matrix form);

// Heisenberg algebra on (X, Y, Z) with [X, Y] = Z.
NilLieAlgebra heisenberg();

// h3 + h3^* with the coadjoint action, basis (X, Y, Z*, X*, Y*, Z), and
// the pairing (x + xi, y + eta) = xi(y) + eta(x).
MetricNilAlgebra canonical_b6();

// n + n^* with bracket [(x,xi),(y,eta)] = ([x,y], ad*_x eta - ad*_y xi + omega(x,y))
// and the dual pairing. Basis: e_1..e_k then e_1^*..e_k^*. The omega
// entries give omega(e_i, e_j) in dual coordinates for i < j.
// Throws PreconditionError when omega fails the cocycle identity, or the
// result is not 2-step nilpotent or the pairing is not invariant.
MetricNilAlgebra cocycle_extension(const NilLieAlgebra& n, const std::vector<BracketEntry>& omega);

// Left translations (I + 1/2 ad_e, e) and right translations
// (I - 1/2 ad_e, e) of the group with Lie algebra m, acting on R^k with the
// form of m as ambient metric.
struct WolfRealization {
  SpacePtr space;
  std::vector<AffineIsometry> left;
  std::vector<AffineIsometry> right;
  Lattice lattice;  // generated by the left translations exp(e_i)
};

// Throws PreconditionError when the form is degenerate.
WolfRealization wolf_from_metric_algebra(const MetricNilAlgebra& m);

}  // namespace wolfkit

#endif  // WOLFKIT_METRIC_ALGEBRA_HPP
