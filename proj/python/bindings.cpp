#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "shoda/builtins.hpp"
#include "shoda/pipeline.hpp"

namespace py = pybind11;
using namespace shoda;

namespace {

// value wrapper: the core passes groups around as shared_ptr-to-const
struct PyGroup {
  GroupPtr ptr;
};

RunConfig config_of(const std::string& group, int max_order, int subgroup_cap, int jobs) {
  RunConfig cfg;
  cfg.group = group;
  cfg.max_order = max_order;
  cfg.subgroup_cap = subgroup_cap;
  cfg.jobs = jobs;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Shoda pairs, primitive central idempotents and simple components of "
            "rational group algebras";

  py::register_exception<CapExceeded>(m, "CapExceeded");
  py::register_exception<MalformedSpec>(m, "MalformedSpec");
  py::register_exception<NotClosed>(m, "NotClosed");

  py::class_<PyGroup>(m, "Group")
      .def_property_readonly("order", [](const PyGroup& g) { return g.ptr->order(); })
      .def("mul", [](const PyGroup& g, int a, int b) { return g.ptr->mul(a, b); },
           py::arg("a"), py::arg("b"))
      .def("inv", [](const PyGroup& g, int a) { return g.ptr->inv(a); }, py::arg("a"))
      .def("conj", [](const PyGroup& g, int x, int t) { return g.ptr->conj(x, t); },
           py::arg("x"), py::arg("g"))
      .def("label", [](const PyGroup& g, int x) { return g.ptr->label(x); }, py::arg("x"))
      .def("element",
           [](const PyGroup& g, const std::string& word) { return resolve_word(*g.ptr, word); },
           py::arg("word"), "element index of a word in the named generators")
      .def_property_readonly("abelian", [](const PyGroup& g) { return g.ptr->is_abelian(); })
      .def("__len__", [](const PyGroup& g) { return g.ptr->order(); })
      .def("__repr__", [](const PyGroup& g) {
        return "<Group of order " + std::to_string(g.ptr->order()) + ">";
      });

  m.def(
      "group",
      [](const std::string& source, int max_order) {
        return PyGroup{load_group(config_of(source, max_order, 2000, 1))};
      },
      py::arg("source"), py::arg("max_order") = 5000,
      "load a group from 'builtin:<name>', a spec file path or inline spec JSON");

  m.def(
      "normal_subgroups",
      [](const PyGroup& g) {
        std::vector<std::vector<int>> out;
        for (const auto& n : normal_subgroups(g.ptr)) out.push_back(n.members());
        return out;
      },
      py::arg("group"), "member lists of all normal subgroups in canonical order");

  m.def(
      "is_in_class",
      [](const PyGroup& g, int cap) { return is_in_class_c(g.ptr, cap); },
      py::arg("group"), py::arg("subgroup_cap") = 2000,
      "every subgroup and quotient is abelian or has a non-central abelian normal subgroup");

  m.def(
      "tree_json",
      [](const PyGroup& g, const std::string& normal, int subgroup_cap) {
        return run_tree(g.ptr, resolve_normal_selector(g.ptr, normal), subgroup_cap).dump();
      },
      py::arg("group"), py::arg("normal"), py::arg("subgroup_cap") = 2000,
      "JSON of the character-triple tree over one normal subgroup");

  m.def(
      "tree_dot",
      [](const PyGroup& g, const std::string& normal, int subgroup_cap) {
        return tree_dot(build_tree(g.ptr, resolve_normal_selector(g.ptr, normal), subgroup_cap));
      },
      py::arg("group"), py::arg("normal"), py::arg("subgroup_cap") = 2000,
      "DOT drawing of the tree over one normal subgroup");

  m.def(
      "pairs_json",
      [](const PyGroup& g, bool with_pci, int subgroup_cap, int jobs) {
        return run_pairs(g.ptr, config_of("", 5000, subgroup_cap, jobs), with_pci).dump();
      },
      py::arg("group"), py::arg("with_pci") = false, py::arg("subgroup_cap") = 2000,
      py::arg("jobs") = 1, "JSON of all Shoda pairs with alpha and flags");

  m.def(
      "components_json",
      [](const PyGroup& g, int subgroup_cap, int jobs) {
        return run_components(g.ptr, config_of("", 5000, subgroup_cap, jobs)).dump();
      },
      py::arg("group"), py::arg("subgroup_cap") = 2000, py::arg("jobs") = 1,
      "JSON descriptors of the simple components");

  m.def(
      "verify_json",
      [](const PyGroup& g, int subgroup_cap, int jobs) {
        return run_verify(g.ptr, config_of("", 5000, subgroup_cap, jobs)).dump();
      },
      py::arg("group"), py::arg("subgroup_cap") = 2000, py::arg("jobs") = 1,
      "JSON report of the full verification battery");
}
