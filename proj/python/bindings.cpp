#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "choquet/cli.hpp"
#include "choquet/convexify.hpp"
#include "choquet/generators.hpp"
#include "choquet/io.hpp"
#include "choquet/maxprinciple.hpp"
#include "choquet/measures.hpp"
#include "choquet/sets.hpp"

namespace py = pybind11;
using namespace choquet;

namespace {

std::vector<std::string> to_labels(const FunctionSystem& sys, const PointSet& s) {
  std::vector<std::string> out;
  for (std::size_t j : s.indices) out.push_back(sys.label(j));
  return out;
}

PointSet from_labels(const FunctionSystem& sys, const std::vector<std::string>& labels) {
  std::vector<std::size_t> idx;
  for (const auto& l : labels) idx.push_back(sys.index_of(l));
  return PointSet(std::move(idx));
}

py::object expected(const gen::GeneratedInstance& inst) {
  if (!inst.expected_boundary) return py::none();
  return py::cast(to_labels(inst.system, *inst.expected_boundary));
}

py::tuple instance(const gen::GeneratedInstance& inst) { return py::make_tuple(inst.system, expected(inst)); }

ConvexTraceSpec spec_from_pieces(const std::vector<std::pair<Eigen::VectorXd, double>>& pieces) {
  ConvexTraceSpec spec;
  for (const auto& [a, beta] : pieces) spec.pieces.push_back({a, beta});
  return spec;
}

}  // namespace

PYBIND11_MODULE(choquet, m) {
  m.doc() = "Choquet boundaries and convex-trace functions on finite function systems";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<VerificationError>(m, "VerificationError", PyExc_RuntimeError);

  py::class_<FunctionSystem>(m, "System")
      .def(py::init([](const Eigen::MatrixXd& basis, std::optional<std::vector<std::string>> labels) {
             FiniteSpace space;
             if (labels) {
               space.labels = *labels;
             } else {
               for (Eigen::Index j = 0; j < basis.cols(); ++j) space.labels.push_back(std::to_string(j));
             }
             return FunctionSystem(std::move(space), basis);
           }),
           py::arg("basis"), py::arg("labels") = py::none())
      .def_static("from_json",
                  [](const std::string& text) { return io::system_from_json(nlohmann::json::parse(text)); })
      .def("to_json", [](const FunctionSystem& s) { return io::to_json(s).dump(2); })
      .def_property_readonly("size", &FunctionSystem::size)
      .def_property_readonly("dim", &FunctionSystem::dim)
      .def_property_readonly("labels", [](const FunctionSystem& s) { return s.space().labels; })
      .def_property_readonly("basis", &FunctionSystem::basis)
      .def_property_readonly("valid", [](const FunctionSystem& s) { return s.report().passed(); })
      .def("__len__", &FunctionSystem::size);

  m.def("naturals", [](std::size_t n, bool alternating) { return instance(gen::naturals(n, alternating)); },
        py::arg("n") = 4, py::arg("alternating") = false);
  m.def("interval", [](std::size_t n) { return instance(gen::interval_affine(n)); }, py::arg("n_grid") = 101);
  m.def("interval_full", [](std::size_t n) { return instance(gen::interval_full(n)); }, py::arg("n_grid") = 11);
  m.def("cantor", [](int level, std::size_t ppc) { return instance(gen::cantor(level, ppc)); },
        py::arg("level") = 1, py::arg("points_per_cell") = 3);
  m.def("disk",
        [](std::size_t n_circle, std::size_t rings, std::size_t degree) {
          return instance(gen::disk(n_circle, rings, degree));
        },
        py::arg("n_circle") = 64, py::arg("n_interior_rings") = 3, py::arg("degree") = 8);
  m.def("random_system", [](std::size_t n, std::size_t d, std::uint64_t seed) { return instance(gen::random(n, d, seed)); },
        py::arg("n"), py::arg("d"), py::arg("seed") = 0);

  m.def("choquet_boundary", [](const FunctionSystem& s) { return to_labels(s, choquet_boundary(s).boundary()); });
  m.def("is_boundary", [](const FunctionSystem& s, const std::string& x) {
    const BoundaryTest t = is_boundary(s, s.index_of(x));
    return py::make_tuple(t.is_boundary, t.min_self_mass);
  });
  m.def("representing_measure", [](const FunctionSystem& s, const std::string& x, std::optional<Eigen::VectorXd> f) {
    const std::size_t idx = s.index_of(x);
    return (f ? representing_measure(s, idx, ScalarField{*f}) : representing_measure(s, idx)).weights;
  }, py::arg("system"), py::arg("point"), py::arg("objective") = py::none());
  m.def("key_interval", [](const FunctionSystem& s, const Eigen::VectorXd& f, const std::string& x) {
    const KeyInterval k = key_interval(s, ScalarField{f}, s.index_of(x));
    return py::make_tuple(k.lo, k.hi);
  });

  m.def("biconjugate", [](const FunctionSystem& s, const Eigen::VectorXd& f) { return biconjugate(s, ScalarField{f}).values; });
  m.def("hat_positive", [](const FunctionSystem& s, const Eigen::VectorXd& f) { return hat_positive(s, ScalarField{f}).values; });
  m.def("hat_signed",
        [](const FunctionSystem& s, const Eigen::VectorXd& f, double alpha) { return hat_signed(s, ScalarField{f}, alpha).values; },
        py::arg("system"), py::arg("f"), py::arg("alpha") = 1.0);
  m.def("is_choquet_convex",
        [](const FunctionSystem& s, const Eigen::VectorXd& f, double tol) { return is_choquet_convex(s, ScalarField{f}, tol); },
        py::arg("system"), py::arg("f"), py::arg("tol") = kConvexTol);
  m.def("realize_convex_trace",
        [](const FunctionSystem& s, const std::vector<std::pair<Eigen::VectorXd, double>>& pieces) {
          return realize_convex_trace(s, spec_from_pieces(pieces)).values;
        });

  m.def("trace_hull", [](const FunctionSystem& s, const std::vector<std::string>& set) {
    return to_labels(s, trace_hull(s, from_labels(s, set)));
  });
  m.def("separate", [](const FunctionSystem& s, const std::vector<std::string>& set, const std::string& x) {
    const SeparationResult r = separate(s, from_labels(s, set), s.index_of(x));
    py::object witness = r.witness ? py::cast(r.witness->coeffs) : py::none();
    return py::make_tuple(r.separable, witness);
  });
  m.def("phi_extreme_points", [](const FunctionSystem& s, const std::vector<std::string>& set) {
    return to_labels(s, phi_extreme_points(s, from_labels(s, set)));
  });
  m.def("kyfan_segment", [](const FunctionSystem& s, const std::string& y, const std::string& z) {
    return to_labels(s, kyfan_segment(s, s.index_of(y), s.index_of(z)));
  });

  m.def("bauer", [](const FunctionSystem& s, const std::vector<std::pair<Eigen::VectorXd, double>>& pieces) {
    const MaxReport r = bauer_verify(s, spec_from_pieces(pieces));
    py::dict d;
    d["argmax"] = to_labels(s, r.argmax);
    d["max_value"] = r.max_value;
    d["boundary_argmax"] = to_labels(s, r.boundary_argmax);
    d["boundary_max"] = r.boundary_max;
    d["bauer_ok"] = r.bauer_ok;
    return d;
  });
  m.def("expose", [](const FunctionSystem& s, const std::string& x) { return expose(s, s.index_of(x)).coeffs; });
  m.def("genericity",
        [](const FunctionSystem& s, const Eigen::VectorXd& f, std::size_t trials, double eps, std::uint64_t seed, double tie) {
          return genericity_experiment(s, ScalarField{f}, trials, eps, seed, tie).unique_fraction;
        },
        py::arg("system"), py::arg("f"), py::arg("trials") = 1000, py::arg("epsilon") = 0.1, py::arg("seed") = 0,
        py::arg("tie_tol") = kTieTol);

  m.def("run_cli",
        [](const std::vector<std::string>& args, const std::string& stdin_text) {
          std::istringstream in(stdin_text);
          std::ostringstream out;
          std::ostringstream err;
          const int code = cli::run(args, in, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), py::arg("stdin") = "");
}
