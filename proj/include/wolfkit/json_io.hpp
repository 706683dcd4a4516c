#ifndef WOLFKIT_JSON_IO_HPP
#define WOLFKIT_JSON_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "wolfkit/bundle.hpp"
#include "wolfkit/metric_algebra.hpp"
#include "wolfkit/report.hpp"

namespace wolfkit {

using Json = nlohmann::ordered_json;

// Parsed instance: either isometry generators in a quadratic space, or an
// abstract algebra with an invariant form. Rationals are JSON strings.
struct Instance {
  SpacePtr space;                               // set iff generators are given
  std::vector<AffineIsometry> generators;
  std::optional<MetricNilAlgebra> algebra;     // form symmetric, invariance unchecked
  std::optional<std::string> catalog;
};

// All parse functions throw UsageError whose message starts with the JSON
// pointer of the offending location.
Rational rational_from_json(const Json& j, const std::string& where);
Matrix matrix_from_json(const Json& j, const std::string& where);
Matrix vector_from_json(const Json& j, const std::string& where);
Json to_json(const Rational& q);
Json matrix_to_json(const Matrix& m);
Json vector_to_json(const Matrix& v);

// {"space": {"gram": ...}, "A": ..., "v": ...}
Json isometry_to_json(const AffineIsometry& g);
AffineIsometry isometry_from_json(const Json& j, const SpacePtr& space, const std::string& where);

// 1-based {"i", "j", "result"} entries.
std::vector<BracketEntry> brackets_from_json(const Json& j, std::size_t dim, const std::string& where);
Json brackets_to_json(const NilLieAlgebra& alg);

Instance parse_instance(const Json& j);
Instance parse_instance_text(const std::string& text);
Instance read_instance_file(const std::string& path);
Json instance_to_json(const Instance& inst);

// {"version": 1, "n": {"dim": k, "brackets": [...]}, "omega": [...]}
MetricNilAlgebra read_cocycle_file(const std::string& path);

Json polynomial_to_json(const Polynomial& p);
Json polynomial_map_to_json(const PolynomialMap& f);
Json trivialization_to_json(const Trivialization& t);
Json not_sliceable_to_json(const NotSliceable& s);

Json check_to_json(const CheckEntry& e);
Json report_to_json(const Report& r);

}  // namespace wolfkit

#endif  // WOLFKIT_JSON_IO_HPP
