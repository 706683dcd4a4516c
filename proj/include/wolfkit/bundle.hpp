#ifndef WOLFKIT_BUNDLE_HPP
#define WOLFKIT_BUNDLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wolfkit/nil_algebra.hpp"
#include "wolfkit/polynomial.hpp"
#include "wolfkit/report.hpp"

namespace wolfkit {

// Coordinates t with p + sum t_i b_i(p) = q, i.e. exp(sum t_i X_i).p = q.
// None when q is not in the orbit of p. Throws PreconditionError when the
// solution is not unique (the action is not free at p).
std::optional<Matrix> beta(const Matrix& q, const Matrix& p, const NilLieAlgebra& alg);
bool same_orbit(const Matrix& q, const Matrix& p, const NilLieAlgebra& alg);

// One slicing step. Coordinates before the step are the original ambient
// coordinates that survived the earlier steps.
struct SliceStep {
  Matrix direction;             // k x 1, algebra coordinates of X_j
  Matrix functional;            // 1 x m, phi_j on the current coordinates
  std::size_t eliminated;       // ambient index of the dropped coordinate
  PolynomialMap retraction;     // r_j: R^m -> R^(m-1)
};

struct Trivialization {
  PolynomialMap projection;     // pi: R^n -> R^(n-k)
  PolynomialMap section;        // sigma: R^(n-k) -> R^n
  std::vector<SliceStep> history;
  std::vector<std::size_t> base_coordinates;  // ambient indices kept by pi
  Report verification;
};

// The slicing stalled: no central candidate admits a linear functional.
struct NotSliceable {
  std::size_t stage;                     // 0-based
  std::vector<Matrix> candidates;        // directions tried (k x 1)
  std::vector<PolynomialMap> induced;    // their induced actions (u, t) -> u'
  PolynomialMap retraction;              // R^n -> current coordinates
};

struct TrivializeOptions {
  std::uint64_t seed = 0;
  std::size_t invariance_samples = 100;
  std::size_t orbit_samples = 50;
};

// Iterated central slicing over the realized algebra. Every returned
// trivialization has passed its verification checks; a failed check throws
// ConsistencyError. Throws PreconditionError without an ambient realization.
std::variant<Trivialization, NotSliceable> trivialize(const NilLieAlgebra& alg,
                                                      const TrivializeOptions& options = {});

}  // namespace wolfkit

#endif  // WOLFKIT_BUNDLE_HPP
