#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "morphdet/session.hpp"

namespace py = pybind11;
using namespace morphdet;

namespace {

// Workspace keeps a pointer to its session, so both live here.
struct PyWorkspace {
  std::unique_ptr<Session> session;
  std::unique_ptr<Workspace> ws;

  PyWorkspace(const std::string& text, std::size_t max_path_length)
      : session(std::make_unique<Session>(parse_session(text, max_path_length))),
        ws(std::make_unique<Workspace>(*session, max_path_length)) {}
};

RunOptions options(std::optional<std::uint64_t> seed, std::size_t max_path_length, unsigned jobs) {
  RunOptions o;
  o.seed = seed;
  o.max_path_length = max_path_length;
  o.jobs = jobs;
  return o;
}

std::vector<std::vector<std::string>> matrices(const RepMorphism& f) {
  std::vector<std::vector<std::string>> out;
  for (const auto& m : f.mats()) {
    std::vector<std::string> flat;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) flat.push_back(m(i, j).str());
    out.push_back(std::move(flat));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Determiners of morphisms over bound quiver algebras";

  auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  (void)input_error;

  py::class_<Rep>(m, "Module")
      .def_property_readonly("dims", [](const Rep& r) { return r.dims(); })
      .def_property_readonly("total_dim", &Rep::total_dim)
      .def_property_readonly("name", [](const Rep& r) { return recognized_name(r); })
      .def("is_zero", &Rep::is_zero)
      .def("is_projective", [](const Rep& r) { return is_projective(r); })
      .def("is_injective", [](const Rep& r) { return is_injective(r); })
      .def("is_indecomposable", [](const Rep& r) { return is_indecomposable(r); })
      .def("isomorphic", [](const Rep& a, const Rep& b) { return is_isomorphic(a, b); })
      .def("json", [](const Rep& r) { return module_json(r, 0, true).dump(); })
      .def("__eq__", [](const Rep& a, const Rep& b) { return a == b; })
      .def("__repr__", [](const Rep& r) { return "<Module " + recognized_name(r) + " " + dims_string(r.dims()) + ">"; });

  py::class_<RepMorphism>(m, "Morphism")
      .def_property_readonly("source", &RepMorphism::from)
      .def_property_readonly("target", &RepMorphism::to)
      .def_property_readonly("rank", &RepMorphism::rank)
      .def_property_readonly("matrices", &matrices, "Row-major entries per vertex.")
      .def("is_zero", &RepMorphism::is_zero)
      .def("is_mono", &RepMorphism::is_mono)
      .def("is_epi", &RepMorphism::is_epi)
      .def("is_iso", &RepMorphism::is_iso)
      .def("json", [](const RepMorphism& f) { return morphism_json(f).dump(); })
      .def("__matmul__", [](const RepMorphism& g, const RepMorphism& f) { return g * f; })
      .def("__add__", [](const RepMorphism& f, const RepMorphism& g) { return f + g; })
      .def("__eq__", [](const RepMorphism& f, const RepMorphism& g) { return f == g; })
      .def("__repr__", [](const RepMorphism& f) {
        return "<Morphism " + recognized_name(f.from()) + " -> " + recognized_name(f.to()) + ">";
      });

  py::class_<PyWorkspace>(m, "Workspace")
      .def(py::init<const std::string&, std::size_t>(), py::arg("text"), py::arg("max_path_length") = 32)
      .def("module", [](PyWorkspace& w, const std::string& e) { return w.ws->module(e); })
      .def("morphism", [](PyWorkspace& w, const std::string& e) { return w.ws->morphism(e); })
      .def("universe", [](PyWorkspace& w) { return w.ws->default_universe(); })
      .def_property_readonly("vertices", [](const PyWorkspace& w) { return w.session->vertices; })
      .def_property_readonly("field", [](const PyWorkspace& w) { return w.session->field.name(); });

  m.def("decompose", [](const Rep& r) { return krull_schmidt(r).parts; });
  m.def("tau", [](const Rep& r) { return tau(r); });
  m.def("tau_minus", [](const Rep& r) { return tau_minus(r); });
  m.def("ext_dim", [](const Rep& a, const Rep& b, int k) { return ext(a, b, k).dimension; }, py::arg("m"), py::arg("n"),
        py::arg("degree") = 1);
  m.def("ar_sequence", [](const Rep& n) {
    Ses s = ar_sequence(n).ses;
    return py::make_tuple(s.left, s.middle, s.right);
  });
  m.def("in_add", &in_add);
  m.def("intrinsic_kernel", &intrinsic_kernel);
  m.def("small_envelope", [](const Rep& r) { return small_envelope(r).envelope; });
  m.def("almost_factors_through", [](const Rep& n, const RepMorphism& a) { return almost_factors_through(n, a).has_value(); });
  m.def("auslander_determiner", [](const RepMorphism& a) { return auslander_determiner(a).module; });
  m.def("minimal_determiner", [](const RepMorphism& a) { return minimal_determiner(a).t; },
        "Indecomposable summands of the minimal right determiner, one per iso class.");
  m.def("determines", [](const Rep& c, const RepMorphism& a) { return determines(c, a); });
  m.def("determines_oracle", &determines_oracle);
  m.def("is_kernel_determined", [](const RepMorphism& a) { return is_kernel_determined(a); });

  m.def("run_json", [](const std::string& text, std::optional<std::uint64_t> seed, std::size_t mpl, unsigned jobs) {
    return run(parse_session(text, mpl), options(seed, mpl, jobs)).json.dump();
  }, py::arg("text"), py::arg("seed") = py::none(), py::arg("max_path_length") = 32, py::arg("jobs") = 1);
  m.def("oracle_json", [](const std::string& text, std::optional<std::uint64_t> seed, std::size_t mpl, unsigned jobs) {
    return run_oracle(parse_session(text, mpl), options(seed, mpl, jobs)).json.dump();
  }, py::arg("text"), py::arg("seed") = py::none(), py::arg("max_path_length") = 32, py::arg("jobs") = 1);
  m.def("render_session", [](const std::string& text) { return render_session(parse_session(text)); });
  m.def("fixture_names", [] {
    std::vector<std::string> out;
    for (const auto& f : fixtures()) out.push_back(f.name);
    return out;
  });
  m.def("fixture_text", [](const std::string& name) { return fixture(name).text; });
}
