#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "triangle_words/burnside.hpp"
#include "triangle_words/classify.hpp"
#include "triangle_words/error.hpp"
#include "triangle_words/group_io.hpp"
#include "triangle_words/lattice.hpp"
#include "triangle_words/psl2.hpp"
#include "triangle_words/residue.hpp"
#include "triangle_words/vondyck.hpp"
#include "triangle_words/words.hpp"

namespace py = pybind11;
namespace tw = triangle_words;

namespace {

using GroupPtr = std::shared_ptr<const tw::FiniteGroup>;

// Python-side handle; the library hands groups out as shared_ptr<const>.
struct Group {
  GroupPtr ptr;
};

std::vector<tw::Integer> values(const std::vector<tw::UnitResidue>& rs) {
  std::vector<tw::Integer> out;
  out.reserve(rs.size());
  for (const auto& r : rs) out.push_back(r.value());
  return out;
}

template <typename Verdict>
std::pair<bool, std::string> verdict(const Verdict& v) {
  return {v.universal, std::string(tw::to_string(v.reason))};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact classification, word reduction and finite-group checks";

  // Module-lifetime reference to the exception type, used by the translator.
  static const py::handle error_type =
      py::exception<tw::Error>(m, "Error", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const tw::Error& e) {
      PyErr_SetString(error_type.ptr(), e.what());
    }
  });

  m.def(
      "classify_burnside",
      [](tw::Integer k, tw::Integer l, tw::Integer m, tw::Integer r) {
        return verdict(tw::classify_burnside(k, l, m, r));
      },
      py::arg("k"), py::arg("l"), py::arg("m"), py::arg("r"),
      "(universal, reason) for (k,l,m,r)-quasi-Burnside universality.");
  m.def(
      "classify_honda",
      [](tw::Integer k, tw::Integer m, tw::Integer r) {
        return verdict(tw::classify_honda(k, m, r));
      },
      py::arg("k"), py::arg("m"), py::arg("r"));
  m.def(
      "classify_honda_via_burnside",
      [](tw::Integer k, tw::Integer m, tw::Integer r) {
        return verdict(tw::classify_honda_via_burnside(k, m, r));
      },
      py::arg("k"), py::arg("m"), py::arg("r"));
  m.def(
      "crt_star",
      [](tw::Integer k, tw::Integer m, tw::Integer r) {
        return tw::crt_star(k, m, tw::UnitResidue(r, std::lcm(k, m))).value();
      },
      py::arg("k"), py::arg("m"), py::arg("r"));

  m.def(
      "multiplier_set",
      [](tw::Integer k, tw::Integer l, tw::Integer m) {
        return values(tw::multiplier_set({k, l, m}));
      },
      py::arg("k"), py::arg("l"), py::arg("m"));
  m.def(
      "region_of",
      [](tw::Integer k, tw::Integer l, tw::Integer m, tw::Integer a, tw::Integer b,
         tw::Integer c) {
        return std::string(tw::to_string(tw::region_of(tw::LatticePoint({k, l, m}, a, b, c))));
      },
      py::arg("k"), py::arg("l"), py::arg("m"), py::arg("a"), py::arg("b"), py::arg("c"));
  m.def(
      "fiber_count",
      [](tw::Integer k, tw::Integer l, tw::Integer m, tw::Integer a, tw::Integer b) {
        const auto f = tw::fiber_count({k, l, m}, a, b);
        return std::make_pair(f.enumerated, f.closed_form);
      },
      py::arg("k"), py::arg("l"), py::arg("m"), py::arg("a"), py::arg("b"));

  py::class_<Group>(m, "Group")
      .def_static(
          "load", [](const std::string& path) { return Group{tw::load_group_file(path)}; },
          py::arg("path"))
      .def_static(
          "parse", [](const std::string& text) { return Group{tw::parse_group_json(text)}; },
          py::arg("text"))
      .def_static(
          "from_table",
          [](const std::vector<std::vector<std::int64_t>>& table) {
            return Group{tw::FiniteGroup::from_table(table)};
          },
          py::arg("table"))
      .def_property_readonly("order", [](const Group& g) { return g.ptr->order(); })
      .def_property_readonly("exponent", [](const Group& g) { return g.ptr->exponent(); })
      .def_property_readonly("class_sizes",
                             [](const Group& g) {
                               std::vector<std::size_t> sizes;
                               for (const auto& c : g.ptr->classes()) sizes.push_back(c.size());
                               return sizes;
                             })
      .def("multiply", [](const Group& g, tw::ElementId x,
                          tw::ElementId y) { return g.ptr->multiply(x, y); })
      .def("inverse", [](const Group& g, tw::ElementId x) { return g.ptr->inverse(x); })
      .def("element_name", [](const Group& g, tw::ElementId x) { return g.ptr->element_name(x); })
      .def("__len__", [](const Group& g) { return g.ptr->order(); });

  m.def(
      "multiplier_set_finite",
      [](const Group& g, tw::Integer k, tw::Integer l, tw::Integer m) {
        return values(tw::multiplier_set_finite(*g.ptr, k, l, m));
      },
      py::arg("group"), py::arg("k"), py::arg("l"), py::arg("m"));
  m.def(
      "burnside_count_check",
      [](const Group& g, tw::Integer s) { return tw::burnside_count_check(*g.ptr, s); },
      py::arg("group"), py::arg("s"));
  m.def(
      "universal_witness",
      [](tw::Integer k, tw::Integer l, tw::Integer m, tw::Integer r) {
        const auto& v = tw::vondyck(k, l, m);
        const tw::UnitResidue unit(r, std::lcm(std::lcm(k, l), m));
        const auto w = tw::universal_witness(v, unit);
        if (!tw::verify_universal_witness(v, unit, w)) {
          tw::fail(tw::ErrorCode::internal_inconsistency, "witness failed re-verification");
        }
        return std::make_pair(v.group->element_name(w.g), v.group->element_name(w.h));
      },
      py::arg("k"), py::arg("l"), py::arg("m"), py::arg("r"),
      "Conjugators (g, h) in the finite realization, as cycle strings.");
  m.def("lemma42_check", &tw::lemma42_check, py::arg("k"), py::arg("m"), py::arg("r"));

  m.def(
      "reduce_word",
      [](const Group& g, const std::string& text) {
        return tw::format_word(tw::normalize(tw::parse_letters(text), g.ptr));
      },
      py::arg("group"), py::arg("word"), "Reduced form of a word in tokens g:<id>, b, b-.");

  m.def(
      "orevkov_solvable",
      [](const std::string& a, const std::string& b, const std::string& c) {
        return tw::orevkov_solvable(tw::Angle::parse(a), tw::Angle::parse(b),
                                    tw::Angle::parse(c));
      },
      py::arg("a"), py::arg("b"), py::arg("c"));
  m.def(
      "numeric_triple_solvable",
      [](const std::string& a, const std::string& b, const std::string& c) {
        return tw::numeric_triple_solvable(tw::Angle::parse(a), tw::Angle::parse(b),
                                           tw::Angle::parse(c));
      },
      py::arg("a"), py::arg("b"), py::arg("c"));
}
