// Thin bindings over the command layer. Reports cross the boundary as JSON
// text; the Python package decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "pglob/commands.hpp"
#include "pglob/manifest.hpp"
#include "pglob/words.hpp"

namespace py = pybind11;
using namespace pglob;

namespace {

std::string dump(const Report& r) { return r.to_json().dump(); }

}  // namespace

PYBIND11_MODULE(_pglob, m) {
  m.doc() = "Globalization of partial actions: native core";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  auto& precondition = py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_RuntimeError);
  py::register_exception<StepBudgetExceeded>(m, "StepBudgetExceeded", precondition.ptr());
  // Later translators run first; malformed JSON is passed on as InputError.
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const nlohmann::json::exception& e) {
      throw InputError(e.what());
    }
  });

  py::class_<Manifest>(m, "Manifest")
      .def_static(
          "load",
          [](const std::string& path, std::optional<std::size_t> step_budget) {
            return load_manifest(path, step_budget);
          },
          py::arg("path"), py::arg("step_budget") = py::none())
      .def_static(
          "from_json",
          [](const std::string& text, std::optional<std::size_t> step_budget) {
            return parse_manifest(nlohmann::json::parse(text), step_budget);
          },
          py::arg("text"), py::arg("step_budget") = py::none())
      .def_property_readonly("points", [](const Manifest& x) { return x.space.point_names; })
      .def_property_readonly("generators",
                             [](const Manifest& x) {
                               return x.action ? x.action->presentation().generator_names()
                                               : std::vector<std::string>{};
                             })
      .def_property_readonly("has_metric", [](const Manifest& x) { return x.space.metric.has_value(); })
      .def_property_readonly("has_topology", [](const Manifest& x) { return x.space.topology.has_value(); });

  m.def("validate", [](const Manifest& x) { return dump(cmd_validate(x)); });
  m.def("confluence", [](const Manifest& x) { return dump(cmd_confluence(x)); });
  m.def(
      "distance",
      [](const Manifest& x, const std::string& a, const std::string& b, bool oracle, bool group_formula,
         bool geodesic, std::optional<std::size_t> oracle_segments, std::optional<std::size_t> oracle_depth,
         std::optional<double> cap_infinite) {
        DistanceOptions opts;
        opts.oracle = oracle;
        opts.group_formula = group_formula;
        opts.geodesic = geodesic;
        opts.oracle_segments = oracle_segments;
        opts.oracle_depth = oracle_depth;
        opts.cap_infinite = cap_infinite;
        return dump(cmd_distance(x, a, b, opts));
      },
      py::arg("manifest"), py::arg("a"), py::arg("b"), py::arg("oracle") = false,
      py::arg("group_formula") = false, py::arg("geodesic") = false, py::arg("oracle_segments") = py::none(),
      py::arg("oracle_depth") = py::none(), py::arg("cap_infinite") = py::none());
  m.def(
      "truncation",
      [](const Manifest& x, std::size_t n, bool distances, std::optional<double> cap_infinite) {
        return dump(cmd_truncation(x, n, distances, cap_infinite));
      },
      py::arg("manifest"), py::arg("n"), py::arg("distances") = false, py::arg("cap_infinite") = py::none());
  m.def(
      "topology",
      [](const Manifest& x, bool embedding, bool t1) { return dump(cmd_topology(x, embedding, t1)); },
      py::arg("manifest"), py::arg("embedding") = true, py::arg("t1") = true);
  m.def("glue", [](const std::string& text) { return dump(cmd_glue(nlohmann::json::parse(text))); },
        py::arg("text"));
  m.def(
      "homogenize",
      [](const Manifest& x, std::size_t n, const std::string& gamma) {
        return dump(cmd_homogenize(x, n, gamma));
      },
      py::arg("manifest"), py::arg("n"), py::arg("gamma") = "singletons");
}
