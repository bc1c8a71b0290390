#include "ginv/corpus.hpp"
#include "ginv/inverse.hpp"
#include "ginv/json_io.hpp"
#include "ginv/oracle.hpp"
#include "ginv/ring.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <utility>

namespace py = pybind11;
using namespace ginv;

namespace {

// RingPtr is shared_ptr<const Ring>, which pybind11 cannot use as a holder;
// a plain value wrapper sidesteps that.
struct PyRing {
  RingPtr ptr;
};

template <class T>
T unwrap(Result<T> r) {
  if (!r.ok()) throw GinvError(r.failure());
  return std::move(r).take();
}

py::object json_to_py(const Json& j) {
  if (j.is_null()) return py::none();
  if (j.is_boolean()) return py::bool_(j.get<bool>());
  if (j.is_number_unsigned()) return py::int_(j.get<std::uint64_t>());
  if (j.is_number_integer()) return py::int_(j.get<std::int64_t>());
  if (j.is_number_float()) return py::float_(j.get<double>());
  if (j.is_string()) return py::str(j.get<std::string>());
  if (j.is_array()) {
    py::list out;
    for (const Json& item : j) out.append(json_to_py(item));
    return out;
  }
  py::dict out;
  for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
  return out;
}

Json py_to_json(const py::handle& h) {
  if (h.is_none()) return nullptr;
  if (py::isinstance<py::bool_>(h)) return h.cast<bool>();
  if (py::isinstance<py::int_>(h)) return h.cast<std::int64_t>();
  if (py::isinstance<py::str>(h)) return h.cast<std::string>();
  if (py::isinstance<py::list>(h) || py::isinstance<py::tuple>(h)) {
    Json arr = Json::array();
    for (const py::handle& item : h) arr.push_back(py_to_json(item));
    return arr;
  }
  if (py::isinstance<py::dict>(h)) {
    Json obj = Json::object();
    for (const auto& item : h.cast<py::dict>())
      obj[item.first.cast<std::string>()] = py_to_json(item.second);
    return obj;
  }
  throw GinvError(Err::malformed_spec, "unsupported python value for an element");
}

InverseKind kind_of(const std::string& s) {
  auto k = inverse_kind_from(s);
  if (!k)
    throw GinvError(Err::malformed_spec,
                    "unknown kind '" + s +
                        "' (expected inner, group, one_three, one_four, core or dual_core)");
  return *k;
}

CertForm form_of(const std::string& s, const RingPtr& ring, InverseKind kind) {
  if (s.empty()) {
    const bool core_kind = kind == InverseKind::core || kind == InverseKind::dual_core;
    return core_kind && !ring->is_finite() ? CertForm::five_eq : CertForm::definitional;
  }
  auto f = cert_form_from(s);
  if (!f)
    throw GinvError(Err::malformed_spec,
                    "unknown form '" + s + "' (expected DEFINITIONAL, FIVE_EQ or THREE_EQ)");
  return *f;
}

}  // namespace

PYBIND11_MODULE(_ginv, m) {
  m.doc() = "exact generalized inverses in rings with involution";

  py::register_exception<GinvError>(m, "GinvError");

  py::class_<PyRing>(m, "Ring")
      .def(py::init([](const std::string& descriptor) {
             return PyRing{unwrap(Ring::make(descriptor))};
           }),
           py::arg("descriptor"),
           "Build a ring from a descriptor such as 'zmod:8', 'mat:rat:2', "
           "'mat:gf:2:2' or 'mat:zmod:4:2'.")
      .def_property_readonly("descriptor",
                             [](const PyRing& r) { return r.ptr->descriptor_string(); })
      .def_property_readonly("finite", [](const PyRing& r) { return r.ptr->is_finite(); })
      .def_property_readonly("size",
                             [](const PyRing& r) -> py::object {
                               auto s = r.ptr->size();
                               return s ? py::cast(*s) : py::none();
                             })
      .def("zero", [](const PyRing& r) { return r.ptr->zero(); })
      .def("one", [](const PyRing& r) { return r.ptr->one(); })
      .def(
          "element",
          [](const PyRing& r, const py::handle& v) {
            return unwrap(element_from_json(r.ptr, py_to_json(v)));
          },
          py::arg("value"),
          "Make an element from an integer (zmod), nested lists of integers or "
          "'p/q' strings (matrices), or {'idx': k} (table rings).")
      .def("element_at",
           [](const PyRing& r, std::uint64_t i) { return unwrap(r.ptr->from_index(i)); })
      .def("__repr__",
           [](const PyRing& r) { return "Ring(" + r.ptr->descriptor_string() + ")"; });

  py::class_<Element>(m, "Element")
      .def("__add__", [](const Element& a, const Element& b) { return a + b; },
           py::is_operator())
      .def("__sub__", [](const Element& a, const Element& b) { return a - b; },
           py::is_operator())
      .def("__mul__", [](const Element& a, const Element& b) { return a * b; },
           py::is_operator())
      .def("__neg__", [](const Element& a) { return -a; })
      .def("__eq__", [](const Element& a, const Element& b) { return a == b; },
           py::is_operator())
      .def("__ne__", [](const Element& a, const Element& b) { return a != b; },
           py::is_operator())
      .def("star", [](const Element& a) { return star(a); },
           "the involution applied to this element")
      .def("sq", [](const Element& a) { return sq(a); })
      .def_property_readonly("ring", [](const Element& e) { return PyRing{e.ring()}; })
      .def("to_obj", [](const Element& e) { return json_to_py(element_to_json(e)); },
           "plain python encoding: int, nested lists, or {'idx': k}")
      .def("__repr__", [](const Element& e) { return element_to_text(e); });

  m.def("inner_inverse", [](const Element& a) { return unwrap(inner_inverse(a)); });
  m.def("unit_inverse", [](const Element& a) { return unwrap(unit_inverse(a)); });
  m.def("group_inverse", [](const Element& a) { return unwrap(group_inverse(a)); });
  m.def("one_three_inverse", [](const Element& a) { return unwrap(one_three_inverse(a)); });
  m.def("one_four_inverse", [](const Element& a) { return unwrap(one_four_inverse(a)); });
  m.def("core_inverse", [](const Element& a) { return unwrap(core_inverse(a)); });
  m.def("dual_core_inverse", [](const Element& a) { return unwrap(dual_core_inverse(a)); });

  m.def(
      "verify",
      [](const std::string& kind, const Element& a, const Element& x, const std::string& form) {
        const InverseKind k = kind_of(kind);
        return json_to_py(certificate_to_json(unwrap(verify(k, a, x, form_of(form, a.ring(), k)))));
      },
      py::arg("kind"), py::arg("a"), py::arg("x"), py::arg("form") = "",
      "Certificate dict for the claim 'x is a <kind> inverse of a'.");

  m.def(
      "find_all",
      [](const std::string& kind, const Element& a) {
        return unwrap(oracle::find_all(kind_of(kind), a));
      },
      py::arg("kind"), py::arg("a"),
      "All inverses of the given kind, by exhaustive scan (finite rings only).");

  m.def(
      "classify",
      [](const PyRing& ring) {
        return json_to_py(oracle::classification_to_json(unwrap(oracle::classify(ring.ptr))));
      },
      py::arg("ring"), "Per-element membership report for a finite ring.");

  m.def("group_sum",
        [](const Element& a, const Element& b) { return unwrap(group_sum(a, b)); });
  m.def("core_sum", [](const Element& a, const Element& b) { return unwrap(core_sum(a, b)); });
  m.def("dual_core_sum",
        [](const Element& a, const Element& b) { return unwrap(dual_core_sum(a, b)); });

  m.def(
      "check_core_characterizations",
      [](const Element& a, const Element& b) {
        return unwrap(check_core_characterizations(a, b, std::nullopt));
      },
      py::arg("a"), py::arg("b"),
      "For a with a in a^2 R: the three equivalent 'b is the core inverse of a' tests.");

  m.def("scenario_ids", [] { return corpus::builtin_scenario_ids(); });
  m.def(
      "run_scenario",
      [](const std::string& id) {
        return json_to_py(
            corpus::report_to_json(unwrap(corpus::run_scenario(unwrap(corpus::load_builtin(id))))));
      },
      py::arg("id"), "Replay one embedded scenario and return its report.");
}
