#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>

#include "nsgp/admission.hpp"
#include "nsgp/duplication.hpp"
#include "nsgp/literals.hpp"
#include "nsgp/variety.hpp"

namespace py = pybind11;
using namespace nsgp;

namespace {

py::object degree_value(Degree d) {
  if (d.is_infinite()) return py::float_(std::numeric_limits<double>::infinity());
  return py::int_(d.value());
}

Pattern to_pattern(const py::object& obj) {
  if (py::isinstance<Pattern>(obj)) return obj.cast<Pattern>();
  if (py::isinstance<py::str>(obj)) return parse_pattern(obj.cast<std::string>());
  return Pattern(obj.cast<std::vector<std::int64_t>>());
}

}  // namespace

PYBIND11_MODULE(_nsgp, m) {
  m.doc() = "Linear patterns on numerical semigroups";

  static py::exception<Error> error_type(m, "NsgpError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type.ptr())(e.what());
      exc.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<NumericalSemigroup>(m, "NumericalSemigroup")
      .def(py::init<>())
      .def_static("from_generators",
                  [](const std::vector<Int>& g) { return semigroup_from_generators(g); })
      .def_static("from_gaps", [](const std::vector<Int>& g) { return semigroup_from_gap_set(g); })
      .def_static("parse", [](const std::string& s) { return parse_semigroup_literal(s); })
      .def("__contains__", &NumericalSemigroup::contains)
      .def_property_readonly("conductor", &NumericalSemigroup::conductor)
      .def_property_readonly("frobenius", &NumericalSemigroup::frobenius)
      .def_property_readonly("multiplicity", &NumericalSemigroup::multiplicity)
      .def_property_readonly("genus", &NumericalSemigroup::genus)
      .def_property_readonly("gaps", &NumericalSemigroup::gaps)
      .def_property_readonly("minimal_generators", &NumericalSemigroup::minimal_generators)
      .def("members_below_conductor", &NumericalSemigroup::members_below_conductor)
      .def("__eq__", [](const NumericalSemigroup& a, const NumericalSemigroup& b) { return a == b; })
      .def("__hash__", [](const NumericalSemigroup& s) { return py::hash(py::tuple(py::cast(s.gaps()))); })
      .def("__str__", &format_semigroup)
      .def("__repr__", [](const NumericalSemigroup& s) {
        return "NumericalSemigroup('" + format_semigroup(s) + "')";
      });

  py::class_<SemigroupIdeal>(m, "SemigroupIdeal")
      .def("__contains__", &SemigroupIdeal::contains)
      .def_property_readonly("min", &SemigroupIdeal::min)
      .def_property_readonly("conductor", &SemigroupIdeal::conductor)
      .def_property_readonly("generators", &SemigroupIdeal::generators)
      .def_property_readonly("parent", &SemigroupIdeal::parent)
      .def("__str__", &format_ideal);

  py::class_<Pattern>(m, "Pattern")
      .def(py::init([](const py::object& o) { return to_pattern(o); }))
      .def_property_readonly("coefficients",
                             [](const Pattern& p) {
                               auto c = p.coefficients();
                               return std::vector<std::int64_t>(c.begin(), c.end());
                             })
      .def_property_readonly("is_monic", &Pattern::is_monic)
      .def("__len__", &Pattern::length)
      .def("__eq__", [](const Pattern& a, const Pattern& b) { return a == b; })
      .def("__str__", &format_pattern)
      .def("__repr__", [](const Pattern& p) { return "Pattern('" + format_pattern(p) + "')"; });
  py::implicitly_convertible<py::str, Pattern>();

  py::class_<AdmissionDecision>(m, "AdmissionDecision")
      .def_readonly("admits", &AdmissionDecision::admits)
      .def_readonly("counterexample", &AdmissionDecision::counterexample)
      .def_property_readonly("method",
                             [](const AdmissionDecision& d) { return std::string(to_string(d.method)); })
      .def("__bool__", [](const AdmissionDecision& d) { return d.admits; });

  py::class_<EventualDecision>(m, "EventualDecision")
      .def_readonly("eventually_admits", &EventualDecision::eventually_admits)
      .def_readonly("failing_condition", &EventualDecision::failing_condition)
      .def_readonly("threshold_d", &EventualDecision::threshold_d)
      .def_property_readonly("reason",
                             [](const EventualDecision& d) { return std::string(to_string(d.reason)); });

  // Patterns
  m.def("prefix_sums", [](const py::object& p) { return prefix_sums(to_pattern(p)); });
  m.def("derive", [](const py::object& p) { return derive(to_pattern(p)); });
  m.def("admissibility_degree",
        [](const py::object& p) { return degree_value(admissibility_degree(to_pattern(p))); },
        "Admissibility degree; math.inf when all coefficients are positive.");
  m.def("classify", [](const py::object& p) {
    const auto c = classify(to_pattern(p));
    return py::dict(py::arg("admissible") = c.admissible,
                    py::arg("strongly_admissible") = c.strongly_admissible);
  });
  m.def("standard_decomposition", [](const py::object& p) {
    const auto d = standard_decomposition(to_pattern(p));
    return py::dict(py::arg("head") = d.head, py::arg("center") = d.center,
                    py::arg("tail") = d.tail, py::arg("h") = d.h,
                    py::arg("center_first") = d.center_first, py::arg("t") = d.t,
                    py::arg("degree") = degree_value(d.degree));
  });
  m.def("subtraction_pattern", &subtraction_pattern);
  m.def("arf_pattern", &arf_pattern);

  // Semigroups and ideals
  m.def("quotient", &quotient);
  m.def("principal_ideal", &principal_ideal);
  m.def("ideal_from_generators", [](const NumericalSemigroup& s, const std::vector<Int>& g) {
    return ideal_from_generators(s, g);
  });
  m.def("parse_ideal", &parse_ideal_literal);
  m.def("ideal_difference", [](const SemigroupIdeal& e, const SemigroupIdeal& f) {
    const auto d = ideal_difference(e, f);
    return py::dict(py::arg("min") = d.min(), py::arg("conductor") = d.conductor(),
                    py::arg("members_below_conductor") = d.members_below_conductor());
  });
  m.def("duplication", &duplication);
  m.def("is_arf", &is_arf);

  // Admission
  m.def("eval_pattern", [](const py::object& p, const std::vector<Int>& t) {
    return eval_pattern(to_pattern(p), t);
  });
  m.def("admits", [](const NumericalSemigroup& s, const py::object& p) { return admits(s, to_pattern(p)); });
  m.def("admits_oracle",
        [](const NumericalSemigroup& s, const py::object& p) { return admits_oracle(s, to_pattern(p)); });
  m.def("is_arf_equivalent", [](const py::object& p) { return is_arf_equivalent(to_pattern(p)); });
  m.def("separating_semigroup", &separating_semigroup);
  m.def("arf_witness_semigroup", &arf_witness_semigroup);

  // Varieties
  m.def("p_closure", [](const NumericalSemigroup& s, const py::object& p) { return p_closure(s, to_pattern(p)); });
  m.def("tree_children",
        [](const NumericalSemigroup& s, const py::object& p) { return tree_children(s, to_pattern(p)); });
  m.def(
      "count_by_genus",
      [](const py::object& p, Int genus_max, Int genus_cap) {
        const Pattern q = to_pattern(p);
        py::gil_scoped_release release;
        return enumerate_by_genus(q, genus_max, false, genus_cap).counts;
      },
      py::arg("pattern"), py::arg("genus_max"), py::arg("genus_cap") = kDefaultGenusCap);

  // Duplication analysis
  m.def("admits_for_d", [](const NumericalSemigroup& s, const SemigroupIdeal& e, const py::object& p,
                           Int d) { return admits_for_d(s, e, to_pattern(p), d); });
  m.def("d_table", [](const NumericalSemigroup& s, const SemigroupIdeal& e, const py::object& p,
                      const std::vector<Int>& ds) {
    std::vector<std::pair<Int, bool>> rows;
    for (const auto& r : d_table(s, e, to_pattern(p), ds).rows) rows.emplace_back(r.d, r.admits);
    return rows;
  });
  m.def("format_dtable", [](const NumericalSemigroup& s, const SemigroupIdeal& e, const py::object& p,
                            const std::vector<Int>& ds) {
    return format_dtable_text(d_table(s, e, to_pattern(p), ds));
  });
  m.def("eventual_threshold", &eventual_threshold);
  m.def("eventual", [](const NumericalSemigroup& s, const SemigroupIdeal& e, const py::object& p) {
    return eventual(s, e, to_pattern(p));
  });
}
