#ifndef WOLFKIT_CATALOG_HPP
#define WOLFKIT_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "wolfkit/metric_algebra.hpp"

namespace wolfkit {

// A Wolf group given by generators in a quadratic space, optionally with the
// abstract metric algebra it was built from.
struct CatalogEntry {
  std::string name;
  SpacePtr space;
  std::vector<AffineIsometry> generators;
  std::optional<MetricNilAlgebra> metric_algebra;
};

// Pure translations along e_1..e_k in R^n with s negative directions.
CatalogEntry translations(std::size_t n, std::size_t s, std::size_t k);
// Left translations of the butterfly group on R^6 with split form.
CatalogEntry b6_wolf_group();
// exp(X), exp(Y) from the b6 left translations: a Heisenberg group with
// totally isotropic orbits.
CatalogEntry h3_isotropic();
// Realization of n + omega n^* read from a JSON file.
CatalogEntry b_n_omega(const std::string& path);

// Names accepted by lookup_catalog:
//   "translations:<n>,<s>" or "translations:<n>,<s>,<k>", "b6",
//   "h3-isotropic", "b-n-omega:<file>".
std::vector<std::string> catalog_names();
// Throws UsageError for unknown names.
CatalogEntry lookup_catalog(const std::string& name);

}  // namespace wolfkit

#endif  // WOLFKIT_CATALOG_HPP
