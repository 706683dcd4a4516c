#include "wolfkit/catalog.hpp"

#include "wolfkit/errors.hpp"
#include "wolfkit/json_io.hpp"

namespace wolfkit {

CatalogEntry translations(std::size_t n, std::size_t s, std::size_t k) {
  if (k == 0 || k > n) throw UsageError("translations: need 1 <= k <= n");
  CatalogEntry e;
  e.name = "translations:" + std::to_string(n) + "," + std::to_string(s) +
           (k == n ? std::string() : "," + std::to_string(k));
  e.space = std::make_shared<const QuadraticSpace>(QuadraticSpace::standard(n, s));
  for (std::size_t i = 0; i < k; ++i) {
    Matrix v(n, 1);
    v[i] = 1;
    e.generators.emplace_back(e.space, Matrix(n, n), v);
  }
  return e;
}

CatalogEntry b6_wolf_group() {
  MetricNilAlgebra b6 = canonical_b6();
  WolfRealization w = wolf_from_metric_algebra(b6);
  return CatalogEntry{"b6", w.space, w.left, std::move(b6)};
}

CatalogEntry h3_isotropic() {
  CatalogEntry b6 = b6_wolf_group();
  // generators 0 and 1 are exp(X) and exp(Y); closure adjoins Z
  return CatalogEntry{"h3-isotropic", b6.space, {b6.generators[0], b6.generators[1]}, std::nullopt};
}

CatalogEntry b_n_omega(const std::string& path) {
  MetricNilAlgebra m = read_cocycle_file(path);
  WolfRealization w = wolf_from_metric_algebra(m);
  return CatalogEntry{"b-n-omega:" + path, w.space, w.left, std::move(m)};
}

std::vector<std::string> catalog_names() {
  return {"translations:<n>,<s>[,<k>]", "b6", "h3-isotropic", "b-n-omega:<file>"};
}

CatalogEntry lookup_catalog(const std::string& name) {
  if (name == "b6") return b6_wolf_group();
  if (name == "h3-isotropic") return h3_isotropic();
  const std::string trans = "translations:";
  if (name.rfind(trans, 0) == 0) {
    std::vector<std::size_t> nums;
    std::string rest = name.substr(trans.size());
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      std::size_t comma = rest.find(',', pos);
      std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError("bad catalog name '" + name + "'");
      nums.push_back(std::stoul(tok));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (nums.size() < 2 || nums.size() > 3) throw UsageError("bad catalog name '" + name + "'");
    return translations(nums[0], nums[1], nums.size() == 3 ? nums[2] : nums[0]);
  }
  const std::string bno = "b-n-omega:";
  if (name.rfind(bno, 0) == 0) return b_n_omega(name.substr(bno.size()));
  throw UsageError("unknown catalog entry '" + name + "'");
}

}  // namespace wolfkit
