#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wolfkit/bundle.hpp"
#include "wolfkit/catalog.hpp"
#include "wolfkit/workbench.hpp"

namespace py = pybind11;
using namespace wolfkit;

namespace {

Matrix point_from_strings(const std::vector<std::string>& xs) {
  Matrix p(xs.size(), 1);
  for (std::size_t i = 0; i < xs.size(); ++i) p[i] = parse_rational(xs[i]);
  return p;
}

std::pair<int, std::string> json_result(const CommandResult& r) { return {r.exit_code, r.output}; }

WorkbenchOptions json_opts(std::uint64_t seed) { return {OutputFormat::Json, seed}; }

}  // namespace

PYBIND11_MODULE(_wolfkit, m) {
  m.doc() = "Exact Wolf group analysis (C++ core)";

  m.def("catalog_names", &catalog_names);
  m.def("catalog_emit", [](const std::string& name) { return cmd_catalog_emit(name).output; },
        py::arg("name"));
  m.def("check", [](const std::string& inst, std::uint64_t seed) {
          return json_result(cmd_check(load_instance(inst), json_opts(seed)));
        }, py::arg("instance"), py::arg("seed") = 0);
  m.def("analyze", [](const std::string& inst, std::uint64_t seed) {
          return json_result(cmd_analyze(load_instance(inst), json_opts(seed)));
        }, py::arg("instance"), py::arg("seed") = 0);
  m.def("trivialize", [](const std::string& inst, std::uint64_t seed) {
          return json_result(cmd_trivialize(load_instance(inst), json_opts(seed)));
        }, py::arg("instance"), py::arg("seed") = 0);
  m.def("beta",
        [](const std::string& inst, const std::vector<std::string>& q,
           const std::vector<std::string>& p) -> std::optional<std::vector<std::string>> {
          Instance in = load_instance(inst);
          if (in.algebra) throw py::value_error("beta needs an instance with generators");
          std::optional<Matrix> t = beta(point_from_strings(q), point_from_strings(p),
                                         algebra_from_lattice(in.generators));
          if (!t) return std::nullopt;
          std::vector<std::string> out;
          for (std::size_t i = 0; i < t->rows(); ++i) out.push_back(to_string((*t)[i]));
          return out;
        },
        py::arg("instance"), py::arg("q"), py::arg("p"));
  m.def("inertia", [](const std::vector<std::vector<std::string>>& rows) {
          Matrix g(rows.size(), rows.empty() ? 0 : rows[0].size());
          for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != g.cols()) throw py::value_error("ragged matrix");
            for (std::size_t c = 0; c < g.cols(); ++c) g(r, c) = parse_rational(rows[r][c]);
          }
          Inertia i = inertia(g);
          return py::make_tuple(i.plus, i.minus, i.null);
        }, py::arg("gram"));
}
