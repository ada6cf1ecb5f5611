#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spatch/errors.hh"
#include "spatch/io.hh"

namespace py = pybind11;
using namespace spatch;

PYBIND11_MODULE(pyspatch, m) {
  m.doc() = "n-sided S-patch to trimmed rational Bezier patch conversion";

  py::register_exception<ValidationError>(m, "ValidationError");
  py::register_exception<NumericalError>(m, "NumericalError");

  py::class_<SPatch>(m, "SPatch")
      .def_readonly("sides", &SPatch::sides)
      .def_readonly("depth", &SPatch::depth)
      .def_static("from_json", [](const std::string &text) {
        return spatchFromJson(text);
      })
      .def("to_json", [](const SPatch &S) { return toJson(S); })
      .def("eval", [](const SPatch &S, double u, double v) {
        return evalUv(S, {u, v});
      })
      .def("eval_bary", [](const SPatch &S, const std::vector<double> &b) {
        return evalBary(S, b);
      })
      .def("boundary_curve", [](const SPatch &S, int i) {
        return boundaryCurve(S, i);
      })
      .def("domain_vertices", [](const SPatch &S) { return S.domain.vertices; })
      .def("sample_mesh", [](const SPatch &S, int resolution) {
        return sampleMesh(S, resolution);
      });

  py::class_<TrimmedPatch>(m, "TrimmedPatch")
      .def_property_readonly("degree", [](const TrimmedPatch &T) {
        return std::make_pair(T.patch.degreeU, T.patch.degreeV);
      })
      .def_readonly("trim", &TrimmedPatch::trim)
      .def_static("from_json", [](const std::string &text) {
        return trimmedFromJson(text);
      })
      .def("to_json", [](const TrimmedPatch &T) { return toJson(T); })
      .def("eval", [](const TrimmedPatch &T, double u, double v) {
        return evalTensor(T.patch, u, v);
      })
      .def("control_point", [](const TrimmedPatch &T, int i, int j) {
        return T.patch.at(i, j);
      })
      .def("sample_mesh", [](const TrimmedPatch &T, int resolution) {
        return sampleMesh(T, resolution);
      });

  m.def("convert", [](const SPatch &S) { return convert(S); },
        "Exact conversion to a trimmed rational tensor-product Bezier patch");
  m.def("random_spatch", &randomSPatch, py::arg("sides"), py::arg("depth"),
        py::arg("seed"));
  m.def("benchmark", [](int sides, int depth, const std::string &algo,
                        unsigned seed) {
          return benchmark(sides, depth,
                           algo == "naive" ? CompositionAlgorithm::Naive
                                           : CompositionAlgorithm::Efficient,
                           seed);
        },
        py::arg("sides"), py::arg("depth"), py::arg("algo") = "efficient",
        py::arg("seed") = 1);
}
