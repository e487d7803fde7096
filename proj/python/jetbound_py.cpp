#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jetbound/errors.hpp"
#include "jetbound/morse.hpp"
#include "jetbound/report.hpp"

namespace py = pybind11;
using namespace jetbound;

namespace {

py::object to_py(const Integer& x) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

Integer from_py(const py::int_& x) { return Integer(py::str(x).cast<std::string>()); }

py::list to_py(const std::vector<Integer>& xs) {
  py::list out;
  for (const auto& x : xs) out.append(to_py(x));
  return out;
}

VariableId var(const std::string& name) {
  const auto v = VariableId::parse(name);
  if (!v) throw InputError("unknown variable '" + name + "'");
  return *v;
}

GeometrySpec spec(const std::string& geometry, int n) {
  const auto kind = parse_geometry(geometry);
  if (!kind) throw InputError("geometry must be 'log' or 'compact'");
  return GeometrySpec{*kind, n};
}

WeightVector weights_or_default(const std::optional<std::vector<std::int64_t>>& a, int k) {
  return a ? WeightVector(*a) : default_weights(k);
}

}  // namespace

PYBIND11_MODULE(_jetbound, m) {
  m.doc() = "Intersection numbers on Demailly-Semple towers and effective degree thresholds";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init([](const std::string& text) { return Polynomial::parse(text); }), py::arg("text") = "0")
      .def("__str__", &Polynomial::to_string)
      .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + p.to_string() + "')"; })
      .def("__add__", [](const Polynomial& x, const Polynomial& y) { return x + y; })
      .def("__sub__", [](const Polynomial& x, const Polynomial& y) { return x - y; })
      .def("__mul__", [](const Polynomial& x, const Polynomial& y) { return x * y; })
      .def("__mul__", [](const Polynomial& x, const py::int_& s) { return x * from_py(s); })
      .def("__neg__", [](const Polynomial& x) { return -x; })
      .def("__pow__", [](const Polynomial& x, unsigned e) { return pow(x, e); })
      .def("__eq__", [](const Polynomial& x, const Polynomial& y) { return x == y; })
      .def("__len__", &Polynomial::size)
      .def("is_zero", &Polynomial::is_zero)
      .def("degree_in", [](const Polynomial& p, const std::string& v) -> std::optional<unsigned> {
        return degree_in(p, var(v));
      })
      .def("coeff_of", [](const Polynomial& p, const std::string& v, unsigned e) { return coeff_of(p, var(v), e); })
      .def("substitute",
           [](const Polynomial& p, const std::string& v, const Polynomial& q) { return substitute(p, var(v), q); })
      .def("eval_at", [](const Polynomial& p, const std::string& v, const py::int_& x) {
        return eval_at_integer(p, var(v), from_py(x));
      });

  m.def("reduce_monic", [](const Polynomial& p, const std::string& v, const Polynomial& rel) {
    return reduce_monic(p, var(v), rel);
  });

  py::class_<RelationSet>(m, "RelationSet")
      .def(py::init([](int n, int k) { return build_relations(TowerContext(n, k)); }), py::arg("n"), py::arg("k"))
      .def_property_readonly("n", [](const RelationSet& r) { return r.context().n(); })
      .def_property_readonly("k", [](const RelationSet& r) { return r.context().order(); })
      .def_property_readonly("total_dim", [](const RelationSet& r) { return r.context().total_dim(); })
      .def("relation", &RelationSet::relation)
      .def("lifted_chern", &RelationSet::lifted_chern)
      .def("canonical_text", &RelationSet::canonical_text);

  m.def("reduce_tower", [](const Polynomial& p, const RelationSet& rels) { return reduce_tower(p, rels); });
  m.def("integrate_fibers",
        [](const Polynomial& p, const RelationSet& rels) { return integrate_fibers(p, rels.context()); });
  m.def(
      "intersect",
      [](const RelationSet& rels, const std::vector<unsigned>& exponents, const Polynomial& extra) {
        return intersect(rels, exponents, extra);
      },
      py::arg("rels"), py::arg("exponents"), py::arg("extra") = Polynomial(1));

  m.def("base_chern", [](const std::string& geometry, int n, int j) { return base_chern(spec(geometry, n), j); });
  m.def("evaluate_in_degree", [](const Polynomial& cls, const std::string& geometry, int n) {
    return to_py(evaluate_in_degree(cls, spec(geometry, n)).coefficients());
  });

  m.def("default_weights", [](int k) {
    const auto w = default_weights(k);
    return std::vector<std::int64_t>(w.values().begin(), w.values().end());
  });
  m.def("is_admissible", [](const std::vector<std::int64_t>& a) { return is_admissible(a); });

  m.def(
      "morse_polynomial",
      [](int n, int k, std::optional<std::vector<std::int64_t>> weights, const std::string& geometry) {
        return to_py(morse_polynomial(n, k, weights_or_default(weights, k), spec(geometry, n)).coefficients());
      },
      py::arg("n"), py::arg("k"), py::arg("weights") = py::none(), py::arg("geometry") = "log",
      "Ascending coefficients of P(d).");

  m.def(
      "degree_threshold",
      [](const std::vector<py::int_>& ascending) -> py::object {
        std::vector<Polynomial::Term> terms;
        for (std::size_t e = 0; e < ascending.size(); ++e)
          terms.emplace_back(Monomial::of(VariableId::d(), static_cast<unsigned>(e)), from_py(ascending[e]));
        const auto t = degree_threshold(EvaluatedClass(Polynomial::from_terms(std::move(terms))));
        return t ? to_py(*t) : py::none();
      },
      py::arg("coefficients"));

  m.def(
      "leading_degree_coefficient",
      [](int n, int k, std::optional<std::vector<std::int64_t>> weights, const std::string& geometry) {
        return to_py(leading_degree_coefficient(n, k, weights_or_default(weights, k), spec(geometry, n)));
      },
      py::arg("n"), py::arg("k"), py::arg("weights") = py::none(), py::arg("geometry") = "compact");

  m.def(
      "report",
      [](int n, int k, std::optional<std::vector<std::int64_t>> weights, const std::string& geometry) {
        const auto kind = spec(geometry, n).kind;
        const auto json = report_to_json(compute_report(n, k, weights_or_default(weights, k), kind));
        return py::module_::import("json").attr("loads")(json.dump());
      },
      py::arg("n"), py::arg("k"), py::arg("weights") = py::none(), py::arg("geometry") = "log",
      "Report dict with the same schema as `jetbound bound --format json`.");

  m.attr("ENGINE_VERSION") = kEngineVersion;
}
