#include "wolfkit/json_io.hpp"

#include <fstream>
#include <sstream>

#include "wolfkit/errors.hpp"

namespace wolfkit {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw UsageError((where.empty() ? std::string("/") : where) + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t index_from_json(const Json& j, std::size_t dim, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_string()))
    fail(where, "expected a 1-based index");
  std::size_t i = 0;
  if (j.is_string()) {
    Rational q = rational_from_json(j, where);
    if (q.get_den() != 1 || q < 1) fail(where, "expected a 1-based index");
    i = q.get_num().get_ui();
  } else {
    i = j.get<std::size_t>();
  }
  if (i < 1 || i > dim) fail(where, "index out of range 1.." + std::to_string(dim));
  return i - 1;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

}  // namespace

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const UsageError& e) {
      fail(where, e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.dump());
  fail(where, "expected a rational string");
}

Matrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  if (rows > 0) {
    if (!j[0].is_array()) fail(where + "/0", "expected a row array");
    cols = j[0].size();
  }
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rw = where + "/" + std::to_string(r);
    if (!j[r].is_array() || j[r].size() != cols) fail(rw, "row length differs from row 0");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = rational_from_json(j[r][c], rw + "/" + std::to_string(c));
  }
  return m;
}

Matrix vector_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  Matrix v(j.size(), 1);
  for (std::size_t i = 0; i < j.size(); ++i)
    v[i] = rational_from_json(j[i], where + "/" + std::to_string(i));
  return v;
}

Json to_json(const Rational& q) { return to_string(q); }

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json vector_to_json(const Matrix& v) {
  Json out = Json::array();
  for (std::size_t i = 0; i < v.rows(); ++i) out.push_back(to_json(v[i]));
  return out;
}

Json isometry_to_json(const AffineIsometry& g) {
  Json j;
  j["space"]["gram"] = matrix_to_json(g.space()->gram());
  j["A"] = matrix_to_json(g.A());
  j["v"] = vector_to_json(g.v());
  return j;
}

AffineIsometry isometry_from_json(const Json& j, const SpacePtr& space, const std::string& where) {
  const std::size_t n = space->dim();
  Matrix a = matrix_from_json(field(j, "A", where), where + "/A");
  Matrix v = vector_from_json(field(j, "v", where), where + "/v");
  if (a.rows() != n || a.cols() != n) fail(where + "/A", "expected " + std::to_string(n) + "x" + std::to_string(n));
  if (v.rows() != n) fail(where + "/v", "expected length " + std::to_string(n));
  if (j.contains("space")) {
    Matrix g = matrix_from_json(field(j["space"], "gram", where + "/space"), where + "/space/gram");
    if (g != space->gram()) fail(where + "/space/gram", "differs from the instance space");
  }
  return AffineIsometry(space, std::move(a), std::move(v));
}

std::vector<BracketEntry> brackets_from_json(const Json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of brackets");
  std::vector<BracketEntry> out;
  for (std::size_t b = 0; b < j.size(); ++b) {
    const std::string w = where + "/" + std::to_string(b);
    std::size_t i = index_from_json(field(j[b], "i", w), dim, w + "/i");
    std::size_t jj = index_from_json(field(j[b], "j", w), dim, w + "/j");
    Matrix r = vector_from_json(field(j[b], "result", w), w + "/result");
    if (r.rows() != dim) fail(w + "/result", "expected length " + std::to_string(dim));
    if (i == jj) fail(w, "i and j must differ");
    if (i > jj) {
      std::swap(i, jj);
      r = Rational(-1) * r;
    }
    out.push_back(BracketEntry{i, jj, std::move(r)});
  }
  return out;
}

Json brackets_to_json(const NilLieAlgebra& alg) {
  Json out = Json::array();
  for (const BracketEntry& b : alg.nonzero_brackets()) {
    Json e;
    e["i"] = b.i + 1;
    e["j"] = b.j + 1;
    e["result"] = vector_to_json(b.result);
    out.push_back(std::move(e));
  }
  return out;
}

Instance parse_instance(const Json& j) {
  if (!j.is_object()) fail("", "expected an object");
  const Json& version = field(j, "version", "");
  if (!(version == 1 || version == "1")) fail("/version", "unsupported version (expected 1)");
  Instance inst;
  if (j.contains("catalog")) {
    if (!j["catalog"].is_string()) fail("/catalog", "expected a string");
    inst.catalog = j["catalog"].get<std::string>();
  }
  const bool has_gens = j.contains("generators");
  const bool has_alg = j.contains("algebra");
  if (has_gens == has_alg) fail("", "expected exactly one of \"generators\" or \"algebra\"");
  if (has_gens) {
    Matrix gram = matrix_from_json(field(field(j, "space", ""), "gram", "/space"), "/space/gram");
    try {
      inst.space = make_space(gram);
    } catch (const std::invalid_argument& e) {
      fail("/space/gram", e.what());
    }
    const Json& gens = j["generators"];
    if (!gens.is_array() || gens.empty()) fail("/generators", "expected a non-empty array");
    for (std::size_t i = 0; i < gens.size(); ++i)
      inst.generators.push_back(isometry_from_json(gens[i], inst.space, "/generators/" + std::to_string(i)));
    return inst;
  }
  const Json& a = j["algebra"];
  const Json& dim_j = field(a, "dim", "/algebra");
  if (!dim_j.is_number_unsigned() || dim_j.get<std::size_t>() == 0) fail("/algebra/dim", "expected a positive integer");
  const std::size_t dim = dim_j.get<std::size_t>();
  std::vector<BracketEntry> br =
      a.contains("brackets") ? brackets_from_json(a["brackets"], dim, "/algebra/brackets") : std::vector<BracketEntry>{};
  Matrix form = matrix_from_json(field(a, "form", "/algebra"), "/algebra/form");
  if (form.rows() != dim || form.cols() != dim) fail("/algebra/form", "expected " + std::to_string(dim) + "x" + std::to_string(dim));
  if (!form.is_symmetric()) fail("/algebra/form", "form is not symmetric");
  try {
    // invariance is reported by the analysis, not enforced here
    inst.algebra = MetricNilAlgebra{NilLieAlgebra(dim, br), std::move(form)};
  } catch (const ConsistencyError& e) {
    fail("/algebra/brackets", e.what());
  }
  return inst;
}

Instance parse_instance_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
  return parse_instance(j);
}

Instance read_instance_file(const std::string& path) {
  Json j = read_json_file(path);
  try {
    return parse_instance(j);
  } catch (const UsageError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Json instance_to_json(const Instance& inst) {
  Json j;
  j["version"] = 1;
  if (inst.catalog) j["catalog"] = *inst.catalog;
  if (inst.space) {
    j["space"]["gram"] = matrix_to_json(inst.space->gram());
    Json gens = Json::array();
    for (const AffineIsometry& g : inst.generators) {
      Json e;
      e["A"] = matrix_to_json(g.A());
      e["v"] = vector_to_json(g.v());
      gens.push_back(std::move(e));
    }
    j["generators"] = std::move(gens);
  } else if (inst.algebra) {
    j["algebra"]["dim"] = inst.algebra->algebra.dim();
    j["algebra"]["brackets"] = brackets_to_json(inst.algebra->algebra);
    j["algebra"]["form"] = matrix_to_json(inst.algebra->form);
  }
  return j;
}

MetricNilAlgebra read_cocycle_file(const std::string& path) {
  Json j = read_json_file(path);
  try {
    if (!(field(j, "version", "") == 1)) fail("/version", "unsupported version (expected 1)");
    const Json& n = field(j, "n", "");
    const Json& dim_j = field(n, "dim", "/n");
    if (!dim_j.is_number_unsigned() || dim_j.get<std::size_t>() == 0) fail("/n/dim", "expected a positive integer");
    const std::size_t k = dim_j.get<std::size_t>();
    std::vector<BracketEntry> br =
        n.contains("brackets") ? brackets_from_json(n["brackets"], k, "/n/brackets") : std::vector<BracketEntry>{};
    std::vector<BracketEntry> omega =
        j.contains("omega") ? brackets_from_json(j["omega"], k, "/omega") : std::vector<BracketEntry>{};
    NilLieAlgebra base = [&] {
      try {
        return NilLieAlgebra(k, br);
      } catch (const ConsistencyError& e) {
        fail("/n", e.what());
      }
    }();
    return cocycle_extension(base, omega);
  } catch (const UsageError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Json polynomial_to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t;
    t["exponents"] = e;
    t["coeff"] = to_json(c);
    out.push_back(std::move(t));
  }
  return out;
}

Json polynomial_map_to_json(const PolynomialMap& f) {
  Json out = Json::array();
  for (const Polynomial& p : f.components()) out.push_back(polynomial_to_json(p));
  return out;
}

Json trivialization_to_json(const Trivialization& t) {
  Json j;
  j["pi"] = polynomial_map_to_json(t.projection);
  j["sigma"] = polynomial_map_to_json(t.section);
  Json hist = Json::array();
  for (const SliceStep& s : t.history) {
    Json h;
    h["direction"] = vector_to_json(s.direction);
    h["phi"] = vector_to_json(s.functional.transpose());
    h["eliminated"] = s.eliminated + 1;
    h["retraction"] = polynomial_map_to_json(s.retraction);
    hist.push_back(std::move(h));
  }
  j["history"] = std::move(hist);
  Json base = Json::array();
  for (std::size_t i : t.base_coordinates) base.push_back(i + 1);
  j["base_coordinates"] = std::move(base);
  j["degrees"]["pi"] = t.projection.degree();
  j["degrees"]["sigma"] = t.section.degree();
  return j;
}

Json not_sliceable_to_json(const NotSliceable& s) {
  Json j;
  j["stage"] = s.stage + 1;
  Json tried = Json::array();
  for (std::size_t i = 0; i < s.candidates.size(); ++i) {
    Json c;
    c["direction"] = vector_to_json(s.candidates[i]);
    c["induced_action"] = polynomial_map_to_json(s.induced[i]);
    tried.push_back(std::move(c));
  }
  j["candidates"] = std::move(tried);
  j["retraction"] = polynomial_map_to_json(s.retraction);
  return j;
}

Json check_to_json(const CheckEntry& e) {
  Json j;
  j["name"] = e.name;
  j["status"] = std::string(to_string(e.status));
  if (!e.detail.empty()) j["detail"] = e.detail;
  if (e.witness) j["witness"] = matrix_to_json(*e.witness);
  return j;
}

Json report_to_json(const Report& r) {
  Json out = Json::array();
  for (const CheckEntry& e : r.entries) out.push_back(check_to_json(e));
  return out;
}

}  // namespace wolfkit
