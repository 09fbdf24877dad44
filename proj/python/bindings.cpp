// Thin pybind11 layer. Structured results cross the boundary as JSON text
// and are decoded on the Python side.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lieindex/cascade.hpp"
#include "lieindex/indexcalc.hpp"
#include "lieindex/paraquasi.hpp"
#include "lieindex/realform.hpp"
#include "lieindex/report.hpp"
#include "lieindex/verify.hpp"

namespace py = pybind11;
using namespace lieindex;

namespace {

std::shared_ptr<RealForm> lookup(const std::string& name) {
  auto rf = registry_lookup(name);
  if (!rf) throw py::key_error("unknown real form: " + name);
  return rf;
}

std::string index_report(const std::string& name, const std::string& which) {
  auto rf = lookup(name);
  IndexReport rep;
  if (which == "b") {
    if (rf->is_compact()) throw py::value_error(name + " is compact: b is zero");
    rep = verify_formule_indice(*rf, analyze(*rf));
  } else if (which == "borel" || which == "minimal-parabolic") {
    Subalgebra q = which == "borel" ? borel(*rf) : minimal_parabolic(*rf);
    IndexResult ir = compute_index(q);
    rep.name = rf->name();
    rep.dim_b = q.dim();
    rep.index_b = ir.index;
    rep.star = true;
    if (!rf->is_compact()) {
      CascadeAnalysis an = analyze(*rf);
      rep.rg_diff = an.rg_g - an.rg_k;
      rep.star = an.star;
    }
    rep.stable = is_stable(q, ir.regular);
    rep.reductive = is_reductive_form(q, ir.regular, ir.index);
  } else {
    throw py::value_error("subalgebra must be b, borel or minimal-parabolic");
  }
  return index_json(rep, which).dump();
}

}  // namespace

PYBIND11_MODULE(_lieindex, m) {

  m.def("k_g", [](const std::string& type) { return k_g(SimpleType::parse(type)); }, py::arg("type"));
  m.def("cascade_json", [](const std::string& type) { return cascade_json(SimpleType::parse(type)).dump(); },
        py::arg("type"));
  m.def("analysis_json", [](const std::string& name) { return analysis_json(*lookup(name)).dump(); },
        py::arg("name"));
  m.def("index_json", &index_report, py::arg("name"), py::arg("subalgebra") = "b",
        py::call_guard<py::gil_scoped_release>());
  m.def("table4_json", [](const std::string& type) { return table4_json(table4_row(SimpleType::parse(type))).dump(); },
        py::arg("type"), py::call_guard<py::gil_scoped_release>());
  m.def("table4_types", [](int max_rank) {
    std::vector<std::string> out;
    for (SimpleType t : table4_types(max_rank)) out.push_back(t.name());
    return out;
  }, py::arg("max_rank") = 8);
  m.def("registry_names", &registry_names);
  m.def("criteria_in_scope", &criteria_in_scope, py::arg("scope") = "all");

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("id", &CheckResult::id)
      .def_readonly("name", &CheckResult::name)
      .def_readonly("scope", &CheckResult::scope)
      .def_readonly("passed", &CheckResult::passed)
      .def_readonly("detail", &CheckResult::detail)
      .def_readonly("failures", &CheckResult::failures)
      .def_readonly("warnings", &CheckResult::warnings)
      .def_readonly("seconds", &CheckResult::seconds)
      .def("__repr__", [](const CheckResult& r) {
        return "<CheckResult " + std::to_string(r.id) + " " + (r.passed ? "PASS" : "FAIL") + ">";
      });
  m.def("run_criterion", &run_criterion, py::arg("id"), py::call_guard<py::gil_scoped_release>());
}
