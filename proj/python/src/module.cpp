#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hopftwist/io.hpp"

namespace py = pybind11;
using namespace hopftwist;

namespace {

py::dict report_dict(const Report& r) {
  py::dict d;
  d["title"] = r.title();
  d["passed"] = r.passed();
  py::list checks;
  for (const auto& c : r.checks()) {
    py::dict cd;
    cd["name"] = c.name;
    cd["passed"] = c.passed;
    cd["detail"] = c.detail;
    checks.append(cd);
  }
  d["checks"] = checks;
  py::dict values;
  for (const auto& [k, v] : r.values()) values[py::str(k)] = v;
  d["values"] = values;
  return d;
}

// pybind11 holders cannot point to const.
using PyGroup = std::shared_ptr<FiniteGroup>;
PyGroup mut(const GroupPtr& g) { return std::const_pointer_cast<FiniteGroup>(g); }

GroupPtr named(const std::string& name) {
  auto cg = catalog_group(name);
  if (!cg) throw py::value_error("unknown catalog group '" + name + "'");
  return cg->group;
}

}  // namespace

PYBIND11_MODULE(_hopftwist, m) {
  m.doc() = "Exact Drinfeld twists of finite group algebras";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<CertificateFailure>(m, "CertificateFailure", PyExc_RuntimeError);
  py::register_exception<ConstructionError>(m, "ConstructionError", PyExc_RuntimeError);

  py::class_<FiniteGroup, PyGroup>(m, "Group")
      .def_property_readonly("name", &FiniteGroup::name)
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("identity", &FiniteGroup::identity)
      .def_property_readonly("labels", &FiniteGroup::labels)
      .def("mul", &FiniteGroup::mul)
      .def("inv", &FiniteGroup::inv)
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def("is_solvable", [](const FiniteGroup& g) { return is_solvable(g); })
      .def("to_text", [](const FiniteGroup& g) { return write_group(g); })
      .def_static("from_text", [](const std::string& t) { return mut(read_group(t)); })
      .def("__eq__", [](const FiniteGroup& a, const FiniteGroup& b) { return a == b; })
      .def("__repr__", [](const FiniteGroup& g) {
        return "<Group " + (g.name().empty() ? std::string("?") : g.name()) + " of order " + std::to_string(g.order()) + ">";
      });

  m.def("catalog_group", [](const std::string& n) { return mut(named(n)); }, py::arg("name"));
  m.def(
      "group_catalog",
      [](int max_order) {
        std::vector<std::string> names;
        for (const auto& cg : group_catalog(max_order)) names.push_back(cg.name);
        return names;
      },
      py::arg("max_order") = 32);

  py::class_<TensorElement>(m, "Tensor")
      .def_property_readonly("rank", &TensorElement::rank)
      .def_property_readonly("group", [](const TensorElement& t) { return mut(t.group()); })
      .def("__len__", &TensorElement::size)
      .def("terms",
           [](const TensorElement& t) {
             std::vector<std::pair<std::vector<int>, std::string>> out;
             for (const auto& [k, c] : t.terms()) out.emplace_back(t.unpack(k), c.to_string());
             return out;
           })
      .def("to_text", [](const TensorElement& t) { return write_tensor(t); })
      .def_static("from_text", &read_tensor)
      .def("__mul__", [](const TensorElement& a, const TensorElement& b) { return a * b; })
      .def("__eq__", [](const TensorElement& a, const TensorElement& b) { return a == b; })
      .def("__repr__", [](const TensorElement& t) { return t.to_string(); });

  py::class_<Twist>(m, "Twist")
      .def_property_readonly("element", &Twist::element)
      .def_property_readonly("inverse", &Twist::inverse)
      .def_property_readonly("group", [](const Twist& j) { return mut(j.group()); });

  py::class_<Bijective1Cocycle>(m, "Cocycle")
      .def_property_readonly("pi", [](const Bijective1Cocycle& d) { return d.pi; })
      .def_property_readonly("group", [](const Bijective1Cocycle& d) { return mut(d.action.acting); })
      .def_property_readonly("factors", [](const Bijective1Cocycle& d) { return d.action.target->factors(); })
      .def("to_text", [](const Bijective1Cocycle& d) { return write_cocycle_data(d); })
      .def_static("from_text", &read_cocycle_data);

  m.def("twist_report", [](const TensorElement& j) { return report_dict(twist_report(j)); });
  m.def("verify_twist", &verify_twist, py::arg("twist"), py::arg("inverse") = py::none());
  m.def("r_matrix", [](const Twist& j, int u) {
    auto r = r_matrix(j);
    return u == j.group()->identity() ? r : r * r_u(j.group(), u);
  }, py::arg("twist"), py::arg("u") = 0);
  m.def("verify_triangular", [](const Twist& j, const TensorElement& r) { return report_dict(verify_triangular(j, r)); });
  m.def("drinfeld_element", [](const Twist& j, const TensorElement& r) { return drinfeld_element(r, twisted_antipode(j)); });
  m.def("verify_minimal", &verify_minimal);
  m.def("count_grouplikes", &count_grouplikes);
  m.def("movshev_report", [](const Twist& j) {
    auto a = dual_movshev(j);
    auto r = certify_simple(a);
    r.merge(certify_regular_action(a));
    return report_dict(r);
  });
  m.def("trivialize_symmetric_twist", &trivialize_symmetric_twist, py::arg("twist"), py::arg("seed") = 1);

  m.def(
      "find_bijective_1cocycles",
      [](const std::string& g, const std::vector<int>& factors) {
        std::vector<Bijective1Cocycle> out;
        for (const auto& act : all_actions(named(g), make_abelian(factors)))
          for (auto& d : find_bijective_1cocycles(act)) out.push_back(std::move(d));
        return out;
      },
      py::arg("group"), py::arg("factors"));
  m.def(
      "twist_from_1cocycle",
      [](const Bijective1Cocycle& d, const std::string& field) { return twist_from_1cocycle(d, parse_field_option(field)).twist; },
      py::arg("data"), py::arg("field") = "cyclotomic");
  m.def(
      "twist_from_rep_text",
      [](const std::string& text, std::uint64_t seed) { return twist_from_rep(read_rep(text), seed).twist; },
      py::arg("text"), py::arg("seed") = 1);
  m.def(
      "verify_eq2345",
      [](const Bijective1Cocycle& d, const std::string& field) { return report_dict(verify_eq2345(d, parse_field_option(field))); },
      py::arg("data"), py::arg("field") = "cyclotomic");

  m.def(
      "classify",
      [](int order, const std::string& field, bool dedup, std::uint64_t seed) {
        py::list rows;
        for (const auto& d : enumerate_quadruples(order, parse_field_option(field), dedup, seed)) {
          py::dict row;
          row["group"] = catalog_name(*d.quad.g);
          row["h"] = d.quad.h;
          row["dim_v"] = d.quad.v.dim;
          row["u"] = d.quad.u;
          row["minimal"] = d.minimal;
          row["grouplikes"] = d.grouplikes;
          row["solvable"] = d.solvable;
          row["report"] = report_dict(d.report);
          rows.append(row);
        }
        return rows;
      },
      py::arg("order"), py::arg("field") = "cyclotomic", py::arg("dedup") = true, py::arg("seed") = 1);
}
