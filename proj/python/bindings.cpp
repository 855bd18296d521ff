#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <functional>
#include <map>
#include <string>

#include "ncsym/hopf.hpp"
#include "ncsym/io.hpp"
#include "ncsym/verify.hpp"

namespace py = pybind11;
using namespace ncsym;

// Arbitrary-precision integers cross the boundary as Python ints via decimal text.
namespace pybind11::detail {
template <>
struct type_caster<Integer> {
  PYBIND11_TYPE_CASTER(Integer, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = Integer(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const Integer& v, return_value_policy, handle) {
    return PyLong_FromString(v.str().c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

namespace {

AntipodeMethod methodFromName(const std::string& name) {
  static const std::map<std::string, AntipodeMethod> methods = {
      {"direct", AntipodeMethod::Direct},
      {"factored", AntipodeMethod::Factored},
      {"oracle", AntipodeMethod::Oracle}};
  const auto it = methods.find(name);
  if (it == methods.end()) throw py::value_error("unknown antipode method: " + name);
  return it->second;
}

std::string label(const SetPartition& p) { return p.empty() ? "\xE2\x88\x85" : formatAuto(p); }

std::map<std::pair<SetPartition, SetPartition>, Integer> tensorTerms(const TensorElement& t) {
  return {t.terms().begin(), t.terms().end()};
}

}  // namespace

PYBIND11_MODULE(ncsym, m) {
  m.doc() = "Exact computation in NCSym, power-sum basis";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::class_<SetPartition>(m, "SetPartition")
      .def(py::init<>())
      .def(py::init([](const std::string& text) { return parsePartition(text); }), py::arg("text"))
      .def(py::init<std::vector<Block>>(), py::arg("blocks"))
      .def_property_readonly("blocks", &SetPartition::blocks)
      .def_property_readonly("length", &SetPartition::length)
      .def_property_readonly("weight", &SetPartition::weight)
      .def("is_standard", &SetPartition::isStandard)
      .def("is_atomic", [](const SetPartition& p) { return isAtomic(p); })
      .def("atoms", [](const SetPartition& p) { return atomicFactorization(p).atoms; })
      .def("standardize", [](const SetPartition& p) { return standardize(p); })
      .def("__or__", [](const SetPartition& a, const SetPartition& b) { return concat(a, b); })
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__", [](const SetPartition& p) { return py::hash(py::str(label(p))); })
      .def("__str__", &label)
      .def("__repr__", [](const SetPartition& p) { return "SetPartition('" + label(p) + "')"; });
  py::implicitly_convertible<std::string, SetPartition>();

  py::class_<Element>(m, "Element")
      .def(py::init<>())
      .def(py::init([](const std::string& text) { return io::parseElement(text); }), py::arg("text"))
      .def(py::init<const SetPartition&, Integer>(), py::arg("partition"), py::arg("coeff") = 1)
      .def_static("unit", &Element::unit)
      .def_static("from_json", [](const std::string& s) { return io::elementFromJson(io::json::parse(s)); })
      .def("to_json", [](const Element& x) { return io::toJson(x).dump(); })
      .def("terms", [](const Element& x) { return x.terms(); })
      .def("coefficient", &Element::coefficient)
      .def("is_zero", &Element::isZero)
      .def("is_homogeneous", &Element::isHomogeneous)
      .def("l1_norm", &Element::l1Norm)
      .def("__len__", &Element::size)
      .def("__add__", [](const Element& a, const Element& b) { return a + b; })
      .def("__sub__", [](const Element& a, const Element& b) { return a - b; })
      .def("__neg__", [](const Element& a) { return -a; })
      .def("__mul__", [](const Element& a, const Element& b) { return product(a, b); })
      .def("__mul__", [](const Element& a, const Integer& s) { return s * a; })
      .def("__rmul__", [](const Element& a, const Integer& s) { return s * a; })
      .def(py::self == py::self)
      .def("__str__", &io::formatElement)
      .def("__repr__", [](const Element& x) { return "Element('" + io::formatElement(x) + "')"; });
  py::implicitly_convertible<std::string, Element>();
  py::implicitly_convertible<SetPartition, Element>();

  m.def("product", [](const Element& x, const Element& y) { return product(x, y); });
  m.def("coproduct", [](const Element& x) { return tensorTerms(coproduct(x)); },
        "Coproduct as a dict {(left, right): coefficient}");
  m.def("reduced_coproduct", [](const Element& x) { return tensorTerms(reducedCoproduct(x)); });
  m.def("counit", &counit);
  m.def(
      "antipode",
      [](const Element& x, const std::string& method) { return antipode(x, methodFromName(method)); },
      py::arg("x"), py::arg("method") = "factored");
  m.def("antipode_direct_term_count", &antipodeDirectTermCount);
  m.def("primitive", &primitive, py::arg("partition"));
  m.def("hall_primitive",
        [](const std::vector<SetPartition>& atoms) { return hallPrimitive(atoms); });
  m.def("lyndon_atom_words", [](int n) { return lyndonAtomWords(n); });
  m.def("leading_term", [](const Element& x) { return leadingTerm(x); });
  m.def("primitive_space_dimension", &primitiveSpaceDimension);
  m.def("hall_span_check", &hallSpanCheck);

  m.def("evaluate", [](const std::string& gamma, const SetPartition& a) {
    return evaluate(parseComposition(gamma), a);
  });
  m.def("enumerate_partitions", &enumeratePartitions);
  m.def("enumerate_atomic", &enumerateAtomic);
  m.def("quasi_shuffle", [](const std::string& u, const std::string& v) {
    std::vector<std::string> out;
    for (const auto& w : quasiShuffle(parseWord(u), parseWord(v))) out.push_back(format(w));
    return out;
  });
  m.def("left_quasi_shuffle", [](const std::string& u, const std::string& v) {
    std::vector<std::string> out;
    for (const auto& w : leftQuasiShuffle(parseWord(u), parseWord(v))) out.push_back(format(w));
    return out;
  });

  m.def(
      "verify",
      [](int maxWeight, const std::vector<std::string>& checks, std::uint64_t seed) {
        verify::Options options;
        options.maxWeight = maxWeight;
        options.checks = checks;
        options.seed = seed;
        std::map<std::string, bool> passed;
        for (const auto& r : verify::run(options)) passed[r.name] = r.passed();
        return passed;
      },
      py::arg("max_weight") = 4, py::arg("checks") = std::vector<std::string>{},
      py::arg("seed") = 0, py::call_guard<py::gil_scoped_release>());
}
