#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "gl3/catalog.hpp"
#include "gl3/coset_oracle.hpp"
#include "gl3/errors.hpp"
#include "gl3/intertwine.hpp"
#include "gl3/report_json.hpp"
#include "gl3/steinberg.hpp"
#include "gl3/theorem_harness.hpp"

namespace py = pybind11;
using namespace gl3;

namespace {

Triple to_triple(const std::tuple<int, int, int>& t) {
  Triple c{std::get<0>(t), std::get<1>(t), std::get<2>(t)};
  require_in_T(c);
  return c;
}

std::tuple<int, int, int> from_triple(const Triple& t) { return {t.c1, t.c2, t.c3}; }

// Reports cross as JSON text; the Python side decodes them into dicts.
std::string dump(const nlohmann::json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "GL(3) parahoric double cosets and intertwining numbers";

  // translators run newest first, so the base class goes first
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidTriple>(m, "InvalidTriple", PyExc_ValueError);
  py::register_exception<OutOfRange>(m, "OutOfRange", PyExc_ValueError);
  py::register_exception<LevelTooSmall>(m, "LevelTooSmall", PyExc_ValueError);
  py::register_exception<ScaleExceeded>(m, "ScaleExceeded", PyExc_RuntimeError);

  py::class_<QPoly>(m, "QPoly")
      .def(py::init<std::int64_t>(), py::arg("constant") = 0)
      .def(py::init([](std::vector<std::int64_t> c) { return QPoly(std::move(c)); }))
      .def_property_readonly("coeffs", &QPoly::coeffs)
      .def_property_readonly("degree", &QPoly::degree)
      .def("__call__", &QPoly::eval, py::arg("q"))
      .def("factored", &QPoly::factored)
      .def("__str__", &QPoly::str)
      .def("__repr__", [](const QPoly& p) { return "QPoly(" + p.str() + ")"; })
      .def(py::self == py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self);

  m.def("in_T", [](int a, int b, int c) { return in_T(a, b, c); });
  m.def("descendants", [](const std::tuple<int, int, int>& c) {
    std::vector<std::pair<int, std::tuple<int, int, int>>> out;
    for (const auto& d : descendants(to_triple(c))) out.emplace_back(d.label, from_triple(d.t));
    return out;
  });
  m.def("dim_V", [](const std::tuple<int, int, int>& c) { return dim_V(to_triple(c)); });
  m.def("index_in_K", [](const std::tuple<int, int, int>& c) { return index_in_K(to_triple(c)); });

  m.def("catalog_count", [](const std::tuple<int, int, int>& c, const std::tuple<int, int, int>& d) {
    return catalog_count(to_triple(c), to_triple(d));
  });
  m.def("catalog_by_weyl", [](const std::tuple<int, int, int>& c, const std::tuple<int, int, int>& d) {
    std::map<std::string, QPoly> out;
    for (Weyl w : kAllWeyl) out[std::string(weyl_name(w))] = catalog_count_w(to_triple(c), to_triple(d), w);
    return out;
  });
  m.def(
      "materialize",
      [](const std::tuple<int, int, int>& c, const std::tuple<int, int, int>& d, std::uint64_t p, int N) {
        std::vector<std::pair<std::string, std::array<Residue, 9>>> out;
        for (const auto& [r, g] : materialize(to_triple(c), to_triple(d), RingCtx(p, N))) out.emplace_back(r.str(), g.e);
        return out;
      },
      py::arg("c"), py::arg("d"), py::arg("p"), py::arg("N"));

  m.def("_intertwine_VV", [](const std::tuple<int, int, int>& c, const std::tuple<int, int, int>& d) {
    return dump(report_json(intertwine_VV(to_triple(c), to_triple(d))));
  });
  m.def("intertwine_VU", [](const std::tuple<int, int, int>& c, const std::tuple<int, int, int>& d) {
    return intertwine_VU(to_triple(c), to_triple(d));
  });
  m.def("intertwine_restricted",
        [](const std::tuple<int, int, int>& c, int i) { return intertwine_restricted(to_triple(c), i); });

  m.def("_verify", [](const std::string& claim, int bound) {
    TheoremReport r;
    if (claim == "one-descendant") r = verify_one_descendant(bound);
    else if (claim == "two-descendant") r = verify_two_descendant(bound);
    else if (claim == "three-descendant") r = verify_three_descendant(bound);
    else if (claim == "restricted") r = verify_restricted(bound);
    else if (claim == "symmetry") r = verify_symmetry(bound);
    else if (claim == "dimensions") r = verify_dimensions(bound, std::min(bound, 5));
    else if (claim == "steinberg") r = verify_steinberg(bound);
    else throw py::value_error("unknown claim " + claim);
    return dump(report_json(r));
  });
  m.def(
      "_cross_validate",
      [](std::uint64_t p, int N, const std::tuple<int, int, int>& bound, int jobs) {
        py::gil_scoped_release release;
        return dump(report_json(cross_validate(p, N, to_triple(bound), jobs)));
      },
      py::arg("p"), py::arg("N"), py::arg("bound"), py::arg("jobs") = 1);

  m.def("_steinberg", [](int r) { return dump(virtual_rep_json(to_V_basis(steinberg_r(r)))); });
  m.def("steinberg_positivity", [](int r) {
    const auto rep = is_true_representation(steinberg_r(r));
    py::dict out;
    out["true_representation"] = rep.true_representation;
    py::list classes;
    for (const auto& c : rep.classes) classes.append(py::make_tuple(from_triple(c.key), c.total));
    out["classes"] = classes;
    out["witness"] = rep.witness ? py::object(py::make_tuple(from_triple(rep.witness->key), rep.witness->total))
                                 : py::object(py::none());
    return out;
  });

  py::class_<Oracle, std::shared_ptr<Oracle>>(m, "Oracle")
      .def(py::init([](std::uint64_t p, int N) { return std::make_shared<Oracle>(RingCtx(p, N)); }), py::arg("p"),
           py::arg("N"))
      .def(
          "count",
          [](Oracle& o, const std::tuple<int, int, int>& c, const std::tuple<int, int, int>& d) {
            const Triple tc = to_triple(c), td = to_triple(d);
            py::gil_scoped_release release;
            return o.count(tc, td);
          })
      .def("intertwine_VV", [](Oracle& o, const std::tuple<int, int, int>& c, const std::tuple<int, int, int>& d) {
        const Triple tc = to_triple(c), td = to_triple(d);
        py::gil_scoped_release release;
        return oracle_intertwine_VV(o, tc, td);
      });
}
