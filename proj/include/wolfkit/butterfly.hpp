#ifndef WOLFKIT_BUTTERFLY_HPP
#define WOLFKIT_BUTTERFLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "wolfkit/metric_algebra.hpp"
#include "wolfkit/orbit.hpp"
#include "wolfkit/report.hpp"

namespace wolfkit {

// Six host-algebra vectors (X, Y, Z*, X*, Y*, Z), canonicalized so that
// [X,Y] = Z, X* = [Y,Z*], Y* = [Z*,X] and the frame Gram is the split form
// [[0, I3], [I3, 0]].
struct ButterflyFrame {
  Matrix vectors;          // k x 6, columns in the order above
  Matrix gram;             // 6 x 6 frame Gram
  NilLieAlgebra algebra;   // structure constants in the frame basis
};

enum class NoButterflyReason { Abelian, CommutatorsInRadical };

std::string_view to_string(NoButterflyReason r);

struct ButterflyResult {
  std::optional<ButterflyFrame> frame;
  std::optional<NoButterflyReason> reason;
};

// Searches Z = [X_i, X_j] in lexicographic pair order and Z* among basis
// vectors in index order; first hit wins. Throws ConsistencyError when the
// constructed frame fails verification (form not invariant).
ButterflyResult extract_butterfly(const NilLieAlgebra& alg, const Matrix& form);

struct NondegenerateAnalysis {
  Report report;
  OrbitMetric metric;
  std::optional<ButterflyFrame> frame;
  // exp of the frame vectors: generators of a lattice contained in the
  // intersection of the butterfly subgroup with the lattice
  std::vector<AffineIsometry> butterfly_lattice;
};

// Consequences of a non-degenerate orbit metric: abelian holonomy, and for
// non-abelian algebras dim >= 6 with a butterfly subalgebra. Violations are
// reported as failures (they indicate invalid input).
NondegenerateAnalysis nondegenerate_analysis(const std::vector<AffineIsometry>& gens,
                                             const OrbitMetricOptions& options = {});

}  // namespace wolfkit

#endif  // WOLFKIT_BUTTERFLY_HPP
