#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ctcsa/harness.hpp"
#include "ctcsa/logic.hpp"
#include "ctcsa/properties.hpp"
#include "ctcsa/psl2.hpp"
#include "ctcsa/recipe.hpp"

namespace py = pybind11;
using namespace ctcsa;

namespace {

Config config_or_default(const std::optional<std::string>& json_text) {
  return json_text ? parse_config(*json_text) : default_config();
}

py::dict witness_dict(const std::optional<Witness>& w) {
  py::dict d;
  if (!w) return d;
  d["elements"] = w->elements;
  d["labels"] = w->labels;
  d["subgroup"] = w->subgroup ? py::cast(*w->subgroup) : py::none();
  d["note"] = w->note;
  return d;
}

py::dict report_dict(const PropertyReport& r) {
  py::dict d;
  d["property"] = r.property;
  d["method"] = r.method;
  d["verdict"] = r.verdict;
  d["witness"] = r.witness ? py::object(witness_dict(r.witness)) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_ctcsa, m) {
  m.doc() = "Commutative-transitive and CSA checks on finite groups";

  // Messages start with the error code name, e.g. "OrderCapExceeded: ...".
  py::register_exception<Error>(m, "CtcsaError", PyExc_RuntimeError);

  py::class_<FiniteGroup>(m, "Group")
      .def(py::init([](const std::string& recipe) { return build_group(recipe); }), py::arg("recipe"))
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("provenance", &FiniteGroup::provenance)
      .def_property_readonly("labels", &FiniteGroup::labels)
      .def("mul", &FiniteGroup::mul)
      .def("inv", &FiniteGroup::inv)
      .def("element_order", &FiniteGroup::element_order)
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def(
          "is_ct",
          [](const FiniteGroup& g, const std::string& method) {
            CtMethod m = CtMethod::centralizer;
            if (method == "triple-scan") m = CtMethod::triple_scan;
            else if (method == "maximal-abelian") m = CtMethod::maximal_abelian;
            else if (method != "centralizer") throw Error(ErrorCode::InvalidArgument, "unknown CT method '" + method + "'");
            return report_dict(is_ct(g, m));
          },
          py::arg("method") = "centralizer")
      .def(
          "is_csa",
          [](const FiniteGroup& g, const std::string& method) {
            if (method != "malnormal" && method != "sentence") {
              throw Error(ErrorCode::InvalidArgument, "unknown CSA method '" + method + "'");
            }
            return report_dict(is_csa(g, method == "sentence" ? CsaMethod::sentence : CsaMethod::malnormal));
          },
          py::arg("method") = "malnormal")
      .def("wu_class",
           [](const FiniteGroup& g) {
             const WuClass w = wu_classify(g);
             py::dict d;
             d["kind"] = to_string(w.kind);
             d["f"] = w.f;
             d["detail"] = w.detail;
             return d;
           })
      .def("extract_abelian_normal",
           [](const FiniteGroup& g) {
             const Theorem41Result t = theorem41_extract(g);
             py::dict d;
             d["witness"] = std::vector<Elem>(t.witness.begin(), t.witness.end());
             d["g0"] = t.g0.elements();
             d["a"] = t.a.elements();
             return d;
           })
      .def("__len__", &FiniteGroup::order)
      .def("__repr__", [](const FiniteGroup& g) { return "<Group " + g.provenance() + " of order " + std::to_string(g.order()) + ">"; });

  m.def(
      "evaluate",
      [](const std::string& sentence, const FiniteGroup& g) {
        const EvalResult r = evaluate(parse_sentence(sentence), g);
        py::dict d;
        d["verdict"] = r.verdict;
        if (r.assignment) {
          py::dict a;
          for (const auto& [var, x] : *r.assignment) a[py::str(var)] = x;
          d["assignment"] = a;
        } else {
          d["assignment"] = py::none();
        }
        return d;
      },
      py::arg("sentence"), py::arg("group"));
  m.def("builtin_text", &builtin_text, py::arg("name"));
  m.def("normalize_sentence", [](const std::string& s) { return to_string(parse_sentence(s)); }, py::arg("sentence"));
  m.def("psl2_order", &psl2_order, py::arg("q"));
  m.def("group_info", [](const std::string& recipe) { return to_json(group_info(recipe)); }, py::arg("recipe"));
  m.def("suite_names", &suite_names);
  m.def(
      "run_suite",
      [](const std::string& name, const std::optional<std::string>& config_json, bool timestamp) {
        const Config c = config_or_default(config_json);
        const auto rows = name == "all" ? run_all(c) : run_suite(name, c);
        return emit_json(rows, c, timestamp);
      },
      py::arg("name"), py::arg("config_json") = py::none(), py::arg("timestamp") = true);
  m.def("default_config_json", [] { return config_to_json(default_config()); });
}
