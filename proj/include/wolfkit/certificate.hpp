#ifndef WOLFKIT_CERTIFICATE_HPP
#define WOLFKIT_CERTIFICATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wolfkit/isometry.hpp"
#include "wolfkit/report.hpp"

namespace wolfkit {

// Spanning set of the Lie algebra generated by the generator logs: the
// independent logs followed by the independent brackets of those logs.
struct SpanningSet {
  std::vector<InfinitesimalIsometry> elements;
  std::vector<std::string> labels;  // "log g1", "[log g1, log g2]"
};

SpanningSet two_step_span(const std::vector<AffineIsometry>& gens);

// Necessary conditions for a Wolf group plus transitivity evidence. Each
// entry carries the first failing expression as witness. The certificate
// never claims sufficiency.
struct WolfCertificate {
  // per element of the spanning set
  CheckEntry square_zero;
  CheckEntry v_perp_imA;
  CheckEntry imA_isotropic;
  CheckEntry Av_zero;
  CheckEntry gram_skew;
  CheckEntry imA_eq_kerA_perp;
  CheckEntry preserves_form;  // per generator: (I+A)^T gram (I+A) = gram
  // over pairs and triples of the spanning set
  CheckEntry anticommute;
  CheckEntry cross_translation;
  CheckEntry triple_products_zero;
  // group level
  CheckEntry two_step_nilpotent;
  CheckEntry free_action;
  CheckEntry transitivity_evidence;

  SpanningSet span;
  std::size_t transitivity_min_rank = 0;

  // Identities of the Lie algebra itself (everything except freeness and
  // transitivity).
  bool algebraic_conditions_pass() const;
  // All necessary conditions: algebraic ones and freeness.
  bool necessary_conditions_pass() const;
  Report to_report() const;
};

struct CertificateOptions {
  std::uint64_t seed = 0;
  std::size_t free_samples = 100;
  std::size_t transitivity_samples = 20;
};

// Throws UsageError on an empty list or mixed spaces.
WolfCertificate wolf_certificate(const std::vector<AffineIsometry>& gens,
                                 const CertificateOptions& options = {});

// Basis of {(B, w): B gram-skew, (B, w) commutes with every generator}.
std::vector<InfinitesimalIsometry> centralizer_algebra(const std::vector<AffineIsometry>& gens);

// Rank of the evaluation map (B, w) -> B p + w over an algebra basis.
std::size_t evaluation_rank(const std::vector<InfinitesimalIsometry>& algebra, const Matrix& p);

// Whether the linear parts commute over the spanning set. Throws
// PreconditionError when the algebraic certificate conditions fail.
bool holonomy_abelian(const std::vector<AffineIsometry>& gens);

}  // namespace wolfkit

#endif  // WOLFKIT_CERTIFICATE_HPP
