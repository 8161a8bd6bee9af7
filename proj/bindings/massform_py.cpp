#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "massform/expr.hpp"
#include "massform/mass.hpp"
#include "massform/reference.hpp"

namespace py = pybind11;
using namespace massform;

namespace {

PermGroup group_from_text(const std::string& text, long long max_order) {
  return build_group(*parse_group(text), max_order);
}

TameCountingFunction counting_from_text(const std::string& text, const PermGroup& g) {
  return build_counting(*parse_counting(text), g);
}

py::dict report_to_dict(const FormulaReport& report) {
  py::dict d;
  d["group"] = report.group_label;
  d["counting"] = report.counting_name;
  d["modulus"] = report.modulus;
  py::dict residues;
  for (const auto& [a, poly] : report.residue_masses)
    residues[py::int_(a)] = poly.coeffs();
  d["residues"] = residues;
  d["formula_exists"] = report.exists;
  if (report.polynomial) d["polynomial"] = report.polynomial->coeffs();
  else d["polynomial"] = py::none();
  d["notes"] = report.notes;
  return d;
}

}  // namespace

PYBIND11_MODULE(_massform, m) {
  m.doc() = "Exact tame local masses for permutation groups built from "
            "symmetric groups by wreath and cross products";

  py::class_<PermGroup>(m, "Group")
      .def_property_readonly("expr", &PermGroup::label)
      .def_property_readonly("order", &PermGroup::order)
      .def_property_readonly("degree", &PermGroup::degree)
      .def_property_readonly("class_count",
                             [](const PermGroup& g) { return g.classes().size(); })
      .def("__repr__", [](const PermGroup& g) {
        return "<Group " + g.label() + " order=" + std::to_string(g.order()) +
               " degree=" + std::to_string(g.degree()) + ">";
      });

  py::class_<TameCountingFunction>(m, "Counting")
      .def_property_readonly("name", &TameCountingFunction::name)
      .def("__repr__", [](const TameCountingFunction& c) {
        return "<Counting " + c.name() + ">";
      });

  m.def("build_group", &group_from_text, py::arg("expr"),
        py::arg("max_order") = kDefaultMaxOrder,
        "Build a group from a DSL expression such as 'wr(S2,S2)'.");

  m.def("build_counting", &counting_from_text, py::arg("expr"), py::arg("group"),
        "Build a counting function such as 'wreath(perm,perm)' on a group.");

  m.def("total_mass",
        [](const PermGroup& g, const TameCountingFunction& c, long long a) {
          return total_mass(g, c, a).coeffs();
        },
        py::arg("group"), py::arg("counting"), py::arg("residue") = 1,
        "Ascending coefficients of the total mass in x = 1/q.");

  m.def("mass_by_type",
        [](const PermGroup& g, const TameCountingFunction& c, long long a) {
          py::dict d;
          for (const auto& [key, mass] : mass_by_type(g, c, a))
            d[py::str(key.str())] = mass.coeffs();
          return d;
        },
        py::arg("group"), py::arg("counting"), py::arg("residue") = 1);

  m.def("mass_by_wreath_type",
        [](const PermGroup& g, const TameCountingFunction& c, long long a) {
          py::dict d;
          for (const auto& [key, mass] : mass_by_wreath_type(g, c, a))
            d[py::str(key.str())] = mass.coeffs();
          return d;
        },
        py::arg("group"), py::arg("counting"), py::arg("residue") = 1);

  m.def("mass_by_product_type",
        [](const PermGroup& g, const TameCountingFunction& c, long long a) {
          py::dict d;
          for (const auto& [key, mass] : mass_by_product_type(g, c, a))
            d[py::make_tuple(key.first.str(), key.second.str())] = mass.coeffs();
          return d;
        },
        py::arg("group"), py::arg("counting"), py::arg("residue") = 1);

  m.def("mass_by_image",
        [](const PermGroup& g, const TameCountingFunction& c, long long a) {
          py::dict d;
          for (const auto& [key, mass] : mass_by_image(g, c, a))
            d[py::str(image_class_label(g, key))] = mass.coeffs();
          return d;
        },
        py::arg("group"), py::arg("counting"), py::arg("residue") = 1);

  m.def("check_mass_formula",
        [](const PermGroup& g, const TameCountingFunction& c) {
          return report_to_dict(check_mass_formula(g, c));
        },
        py::arg("group"), py::arg("counting"));

  m.def("rational_character_table",
        [](const PermGroup& g) { return rational_character_table(g); },
        py::arg("group"));

  m.def("frobenius_solution_count",
        [](const PermGroup& g, long long element_index, long long a) {
          if (element_index < 0 || element_index >= g.order())
            throw py::index_error("element index out of range");
          return frobenius_solutions(g, g.element(static_cast<int>(element_index)), a)
              .size();
        },
        py::arg("group"), py::arg("element_index"), py::arg("residue"));

  m.def("partition_p", &partition_p, py::arg("k"), py::arg("m"),
        "Partitions of k into at most m parts.");

  m.def("bhargava_rhs",
        [](int n) { return bhargava_rhs(n).coeffs(); }, py::arg("n"),
        "Unscaled mass polynomial coefficients for S_n.");

  m.def("ambient_counts",
        [](const std::string& sub, const std::string& target, const std::string& ambient,
           long long max_order) {
          const PermGroup s = group_from_text(sub, max_order);
          const PermGroup d = group_from_text(target, max_order);
          const PermGroup amb = group_from_text(ambient, max_order);
          return py::make_tuple(conjugators_into(s.elements(), d.elements(), amb),
                                ambient_centralizer_order(s.elements(), amb));
        },
        py::arg("group"), py::arg("target"), py::arg("ambient"),
        py::arg("max_order") = kDefaultMaxOrder,
        "(j, k): conjugator count into the target and ambient centralizer order.");

  m.def("catalog", []() {
    py::list entries;
    for (const auto& entry : massform::catalog()) {
      py::dict d;
      d["name"] = entry.name;
      d["expr"] = entry.group_text;
      d["order"] = entry.expected_order;
      d["rational"] = entry.rational;
      entries.append(std::move(d));
    }
    return entries;
  });

  m.attr("DEFAULT_MAX_ORDER") = kDefaultMaxOrder;
}
