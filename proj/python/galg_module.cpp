#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "galg/effros_hahn.hpp"
#include "galg/generators.hpp"

namespace py = pybind11;
using namespace galg;

namespace {

// Python ints, Fractions and strings all go through the decimal/fraction text.
Scalar to_scalar(const Ring& R, const py::handle& x) {
  if (py::isinstance<py::bool_>(x)) throw py::type_error("booleans are not ring elements");
  if (py::isinstance<py::int_>(x) || py::isinstance<py::str>(x)) return R.parse_scalar(py::str(x).cast<std::string>());
  auto fraction = py::module_::import("fractions").attr("Fraction");
  if (py::isinstance(x, fraction)) return R.parse_scalar(py::str(x).cast<std::string>());
  throw py::type_error("ring elements are int, str or fractions.Fraction");
}

Vec to_vec(const Ring& R, const py::iterable& xs) {
  Vec v;
  for (auto x : xs) v.push_back(to_scalar(R, x));
  return v;
}

py::object from_scalar(const Ring& R, const Scalar& x) {
  if (R.is_finite()) return py::int_(x.residue());
  auto fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::str(R.format(x)));
}

py::list from_vec(const Ring& R, std::span<const Scalar> v) {
  py::list out;
  for (const auto& x : v) out.append(from_scalar(R, x));
  return out;
}

py::list from_matrix(const Ring& R, const Matrix& m) {
  py::list out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.append(from_vec(R, m.row(i)));
  return out;
}

py::list basis_of(const Subspace& s) {
  py::list out;
  for (const auto& b : s.basis()) out.append(from_vec(s.ring(), b));
  return out;
}

Limits bounded(std::uint64_t bound) {
  Limits l;
  l.bound = bound;
  return l;
}

GroupoidPtr share(FiniteGroupoid g) {
  auto bad = validate(g);
  if (!bad.empty()) throw std::invalid_argument("not a groupoid: " + bad.front().axiom + ": " + bad.front().detail);
  return std::make_shared<const FiniteGroupoid>(std::move(g));
}

std::string report_text(const VerificationReport& r) { return to_json(r).dump(); }

}  // namespace

PYBIND11_MODULE(_galg, m) {
  m.doc() = "Finite groupoid convolution algebras: induction, disintegration, primitive ideals";

  py::register_exception<Unsupported>(m, "Unsupported");
  py::register_exception<BoundExceeded>(m, "BoundExceeded");
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Ring>(m, "Ring")
      .def(py::init(&Ring::parse), py::arg("spec"))
      .def_property_readonly("spec", &Ring::spec)
      .def_property_readonly("modulus", &Ring::modulus)
      .def_property_readonly("is_field", &Ring::is_field)
      .def("__repr__", [](const Ring& R) { return "Ring('" + R.spec() + "')"; })
      .def("__eq__", [](const Ring& a, const Ring& b) { return a == b; });

  py::class_<FiniteGroupoid, std::shared_ptr<FiniteGroupoid>>(m, "Groupoid")
      .def_static("generate", [](const std::string& spec) { return std::const_pointer_cast<FiniteGroupoid>(share(parse_generator(spec))); },
                  py::arg("spec"))
      .def_static("from_json",
                  [](const std::string& text) {
                    return std::const_pointer_cast<FiniteGroupoid>(share(groupoid_from_text(text)));
                  },
                  py::arg("text"))
      .def_property_readonly("n_objects", &FiniteGroupoid::n_objects)
      .def_property_readonly("n_arrows", &FiniteGroupoid::n_arrows)
      .def("d", &FiniteGroupoid::d)
      .def("r", &FiniteGroupoid::r)
      .def("unit_of", &FiniteGroupoid::unit_of)
      .def("inv", &FiniteGroupoid::inv)
      .def("compose", &FiniteGroupoid::compose)
      .def("to_json", [](const FiniteGroupoid& g) { return to_json(g).dump(); })
      .def("orbits", [](const FiniteGroupoid& g) { return orbits(g).classes; })
      .def("isotropy", [](const FiniteGroupoid& g, ObjectId u) { return isotropy(g, u).elements; })
      .def("is_bisection", [](const FiniteGroupoid& g, const std::vector<ArrowId>& a) { return is_bisection(g, a); })
      .def("bisection_mul",
           [](const FiniteGroupoid& g, const std::vector<ArrowId>& u, const std::vector<ArrowId>& v) {
             return bisection_mul(g, {u}, {v}).arrows;
           })
      .def("__repr__", [](const FiniteGroupoid& g) {
        return "Groupoid(objects=" + std::to_string(g.n_objects()) + ", arrows=" + std::to_string(g.n_arrows()) + ")";
      });

  m.def("validate_json", [](const std::string& text) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& v : validate(groupoid_from_text(text))) out.emplace_back(v.axiom, v.detail);
    return out;
  });

  auto as_ptr = [](const std::shared_ptr<FiniteGroupoid>& g) { return std::const_pointer_cast<const FiniteGroupoid>(g); };

  m.def("convolve", [=](const std::shared_ptr<FiniteGroupoid>& g, const Ring& R, const py::iterable& f, const py::iterable& h) {
    Vec a = to_vec(R, f), b = to_vec(R, h);
    AlgebraElement x{as_ptr(g), R, a}, y{as_ptr(g), R, b};
    return from_vec(R, convolve(x, y).coeffs);
  });
  m.def("involution", [=](const std::shared_ptr<FiniteGroupoid>& g, const Ring& R, const py::iterable& f) {
    return from_vec(R, involution(AlgebraElement{as_ptr(g), R, to_vec(R, f)}).coeffs);
  });
  m.def("indicator", [=](const std::shared_ptr<FiniteGroupoid>& g, const std::vector<ArrowId>& arrows, const Ring& R) {
    return from_vec(R, indicator(as_ptr(g), arrows, R).coeffs);
  });

  py::class_<Rep>(m, "Rep")
      .def_property_readonly("dim", &Rep::dim)
      .def_property_readonly("ring", [](const Rep& r) { return r.ring(); })
      .def("op", [](const Rep& r, ArrowId a) { return from_matrix(r.ring(), r.op(a)); })
      .def("to_json", [](const Rep& r) { return to_json(r).dump(); })
      .def("validate", [](const Rep& r) { return rep_validate(r).size() == 0; });

  py::class_<Ideal>(m, "Ideal")
      .def_property_readonly("basis", [](const Ideal& I) { return basis_of(I.space); })
      .def_property_readonly("rank", [](const Ideal& I) { return I.space.rank(); })
      .def_property_readonly("is_zero", [](const Ideal& I) { return I.space.is_zero(); })
      .def_property_readonly("is_whole", [](const Ideal& I) { return I.space.is_full(); })
      .def("__eq__", [](const Ideal& a, const Ideal& b) { return ideal_equal(a, b); })
      .def("to_json", [](const Ideal& I) { return to_json(I).dump(); })
      .def("__repr__", [](const Ideal& I) { return "Ideal(" + to_json(I.space).dump() + ")"; });

  m.def("regular_rep", [=](const std::shared_ptr<FiniteGroupoid>& g, const Ring& R) { return regular_rep(as_ptr(g), R); });
  m.def("ideal", [=](const std::shared_ptr<FiniteGroupoid>& g, const Ring& R, const py::iterable& gens) {
    std::vector<Vec> vs;
    for (auto v : gens) vs.push_back(to_vec(R, py::reinterpret_borrow<py::iterable>(v)));
    return ideal_from_generators(as_ptr(g), R, vs);
  });
  m.def("induce",
        [=](const std::shared_ptr<FiniteGroupoid>& g, ObjectId u, const std::string& module, const Ring& R, std::uint64_t bound) {
          return induce(as_ptr(g), isotropy_module_named(*g, u, module, R, bounded(bound))).rep;
        },
        py::arg("g"), py::arg("object"), py::arg("module"), py::arg("ring"), py::arg("bound") = Limits::kDefaultBound);
  m.def("induced_annihilator_direct",
        [=](const std::shared_ptr<FiniteGroupoid>& g, ObjectId u, const std::string& module, const Ring& R, std::uint64_t bound) {
          return induced_annihilator_direct(as_ptr(g), isotropy_module_named(*g, u, module, R, bounded(bound)));
        },
        py::arg("g"), py::arg("object"), py::arg("module"), py::arg("ring"), py::arg("bound") = Limits::kDefaultBound);
  m.def("annihilator", [](const Rep& r) { return annihilator(r); });
  m.def("quotient_algebra_rep", [](const Ideal& I) { return quotient_algebra_rep(I); });
  m.def("is_simple", [](const Rep& r, std::uint64_t bound) { return is_simple(r, bounded(bound)); }, py::arg("rep"),
        py::arg("bound") = Limits::kDefaultBound);
  m.def("is_isomorphic",
        [](const Rep& a, const Rep& b, std::uint64_t bound, std::uint64_t seed) { return is_isomorphic(a, b, bounded(bound), seed); },
        py::arg("a"), py::arg("b"), py::arg("bound") = Limits::kDefaultBound, py::arg("seed") = 0);

  m.def("sheaf_json", [](const Rep& r) { return to_json(sheaf_of(r)).dump(); });
  m.def("sections", [](const Rep& r) { return gamma_c(sheaf_of(r)); });
  m.def("disintegration_iso", [](const Rep& r) { return from_matrix(r.ring(), disintegration_iso(r)); });

  m.def("enumerate_all_ideals",
        [=](const std::shared_ptr<FiniteGroupoid>& g, const Ring& R, std::uint64_t bound) {
          return enumerate_all_ideals(as_ptr(g), R, bounded(bound));
        },
        py::arg("g"), py::arg("ring"), py::arg("bound") = Limits::kDefaultBound);
  m.def("enumerate_primitive_ideals",
        [=](const std::shared_ptr<FiniteGroupoid>& g, const Ring& R, std::uint64_t bound) {
          return enumerate_primitive_ideals(as_ptr(g), R, bounded(bound));
        },
        py::arg("g"), py::arg("ring"), py::arg("bound") = Limits::kDefaultBound);
  m.def("primitive_ideal_oracle",
        [=](const std::shared_ptr<FiniteGroupoid>& g, const Ring& R, std::uint64_t bound) {
          return primitive_ideal_oracle(as_ptr(g), R, bounded(bound));
        },
        py::arg("g"), py::arg("ring"), py::arg("bound") = Limits::kDefaultBound);
  m.def("simple_module_dims",
        [](const std::shared_ptr<FiniteGroupoid>& g, ObjectId u, const Ring& R, std::uint64_t bound) {
          std::vector<std::size_t> dims;
          for (const auto& n : simple_modules_group(isotropy(*g, u), R, bounded(bound))) dims.push_back(n.dim());
          return dims;
        },
        py::arg("g"), py::arg("object"), py::arg("ring"), py::arg("bound") = Limits::kDefaultBound);

  // Reports come back as JSON text; the Python package decodes them.
  m.def("verify_ideal_is_intersection", [](const Ideal& I, std::uint64_t bound) {
    return report_text(verify_ideal_is_intersection(I, bounded(bound)));
  }, py::arg("ideal"), py::arg("bound") = Limits::kDefaultBound);
  m.def("verify_primitive_single_inducer", [](const Rep& r, std::uint64_t bound) {
    return report_text(verify_primitive_single_inducer(r, bounded(bound)));
  }, py::arg("rep"), py::arg("bound") = Limits::kDefaultBound);
  m.def("verify_disintegration", [](const Rep& r) { return report_text(verify_disintegration(r)); });
  m.def("verify_primitive_ideals",
        [=](const std::shared_ptr<FiniteGroupoid>& g, const Ring& R, std::uint64_t bound) {
          return report_text(verify_primitive_ideals(as_ptr(g), R, bounded(bound)));
        },
        py::arg("g"), py::arg("ring"), py::arg("bound") = Limits::kDefaultBound);
  m.def("verify_induced_from_simples",
        [=](const std::shared_ptr<FiniteGroupoid>& g, const Ring& R, std::uint64_t bound) {
          return report_text(verify_induced_from_simples(as_ptr(g), R, bounded(bound)));
        },
        py::arg("g"), py::arg("ring"), py::arg("bound") = Limits::kDefaultBound);
}
