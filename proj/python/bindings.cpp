#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "noncross/error.hpp"
#include "noncross/expr.hpp"
#include "noncross/format.hpp"
#include "noncross/lattice.hpp"
#include "noncross/obstruct.hpp"
#include "noncross/valtheory.hpp"

namespace py = pybind11;
using namespace noncross;

namespace {

ExponentVector to_exponent(const std::vector<std::int64_t>& v) { return ExponentVector(v); }

py::object valuation_to_py(const ValuationResult& v) {
  if (v.is_infinite()) return py::none();
  return py::cast(v.value().entries());
}

std::vector<std::int64_t> blocks_of(const AlgebraConfig& c) {
  return {c.blocks().begin(), c.blocks().end()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic in twisted Laurent series division algebras";

  static py::exception<Error> error_type(m, "NoncrossError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const py::object& cls = error_type;
      py::object exc = cls(std::string(error_tag(e.code())) + ": " + e.what());
      exc.attr("tag") = std::string(error_tag(e.code()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<AlgebraConfig>(m, "Config")
      .def(py::init([](const std::vector<int>& blocks, std::optional<int> m) {
             return m ? AlgebraConfig(blocks, *m) : AlgebraConfig(blocks);
           }),
           py::arg("blocks"), py::arg("m") = py::none())
      .def_property_readonly("blocks", &blocks_of)
      .def_property_readonly("r", &AlgebraConfig::r)
      .def_property_readonly("m", &AlgebraConfig::m)
      .def_property_readonly("n", &AlgebraConfig::n)
      .def("__eq__", [](const AlgebraConfig& a, const AlgebraConfig& b) { return a == b; })
      .def("__repr__", [](const AlgebraConfig& c) { return "Config(" + c.to_string() + ")"; });

  py::class_<TwistedElement>(m, "Element")
      .def_property_readonly("config", &TwistedElement::config)
      .def_property_readonly("precision", &TwistedElement::precision)
      .def("is_zero", &TwistedElement::is_zero)
      .def("truncated", &TwistedElement::truncated, py::arg("precision"))
      .def("terms",
           [](const TwistedElement& f) {
             std::vector<std::pair<std::vector<std::int64_t>, std::string>> out;
             for (const auto& [alpha, c] : f.terms()) out.emplace_back(alpha.entries(), format_cyc(c));
             return out;
           })
      .def("to_json", [](const TwistedElement& f) { return to_json(f).dump(); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def("__pow__", [](const TwistedElement& f, std::uint64_t e) { return pow(f, e); })
      .def("__eq__", [](const TwistedElement& a, const TwistedElement& b) { return a == b; })
      .def("__str__", &format_element)
      .def("__repr__", [](const TwistedElement& f) { return "Element(" + format_element(f) + ")"; });

  m.def("parse", &parse_element, py::arg("text"), py::arg("config"));
  m.def("normalize", [](const std::string& text, const AlgebraConfig& c) {
    return format_element(parse_element(text, c));
  });
  m.def("val", [](const TwistedElement& f) { return valuation_to_py(val(f)); });
  m.def("residue", [](const TwistedElement& f) { return format_cyc(residue(f)); });
  m.def("inv", &inv, py::arg("f"), py::arg("precision"));
  m.def("nth_root", &nth_root, py::arg("a"), py::arg("n"), py::arg("precision"));
  m.def("pairing", [](const AlgebraConfig& c, const std::vector<std::int64_t>& a,
                      const std::vector<std::int64_t>& b) {
    const auto eps = commutator_pairing(c, to_exponent(a), to_exponent(b));
    return py::make_tuple(eps.exponent, eps.m);
  });
  m.def("quotient_image", [](const AlgebraConfig& c, const std::vector<std::int64_t>& a) {
    return quotient_image(c, to_exponent(a));
  });
  m.def("is_central", [](const AlgebraConfig& c, const std::vector<std::int64_t>& a) {
    return is_central_monomial(c, to_exponent(a));
  });
  m.def("snf", [](const IntMatrix& matrix) {
    const auto f = smith_normal_form(matrix);
    return py::dict(py::arg("U") = f.U, py::arg("S") = f.S, py::arg("V") = f.V,
                    py::arg("invariant_factors") = f.diagonal());
  });
  m.def("quotient_type", [](int dim, const IntMatrix& gens) {
    const auto t = quotient_type(dim, IntegerLattice{dim, gens});
    return py::make_tuple(t.invariant_factors, t.free_rank);
  });
  m.def("value_group_quotient", [](const AlgebraConfig& c) {
    const auto t = quotient_type(c.dim(), center_value_lattice(c));
    return py::make_tuple(t.invariant_factors, t.free_rank);
  });
  m.def("rank", [](const std::vector<std::int64_t>& factors, int free_rank) {
    return rank(AbelianGroupType{factors, free_rank});
  }, py::arg("invariant_factors"), py::arg("free_rank") = 0);
  m.def("factorize", &factorize);
  m.def("obstruction", [](std::int64_t n, std::int64_t characteristic) {
    const auto text = to_json(obstruction(n, characteristic)).dump();
    return py::module_::import("json").attr("loads")(text);
  }, py::arg("n"), py::arg("char") = 0);
  m.def("witness_configs", &witness_configs);
  m.def("cyclotomic_poly", &cyclotomic_poly);
}
