#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tgraded/api.hpp"
#include "tgraded/errors.hpp"
#include "tgraded/io.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace tgraded;

namespace {

// Everything crosses the boundary as canonical JSON text; the Python layer
// converts to and from dicts.
std::string text(const json& j) { return io::canonical(j); }

std::optional<Scalar> scalar_arg(const std::optional<std::string>& s) {
    if (!s) return std::nullopt;
    return Scalar::parse(*s);
}

std::optional<json> json_arg(const std::optional<std::string>& s) {
    if (!s) return std::nullopt;
    return json::parse(*s);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    py::register_exception<FamilyMismatch>(m, "FamilyMismatch", PyExc_ValueError);
    py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
    py::register_exception<json::exception>(m, "JsonError", PyExc_ValueError);

    py::class_<api::Scene>(m, "Scene")
        .def(py::init([](const std::string& scene) { return api::parse_scene(json::parse(scene)); }))
        .def("dist", [](const api::Scene& s, const std::string& f, const std::string& g) { return text(api::dist(s, f, g)); })
        .def("geodesic",
             [](const api::Scene& s, const std::string& f, const std::string& g, const std::optional<std::string>& t) {
                 return text(api::geodesic(s, f, g, scalar_arg(t)));
             },
             py::arg("f"), py::arg("g"), py::arg("t") = py::none())
        .def("project",
             [](const api::Scene& s, const std::string& r, const std::string& base, int piece, Label label) {
                 return text(api::project(s, r, base, piece, label));
             })
        .def("concat", [](const api::Scene& s, const std::string& f, const std::string& g) { return text(api::concat(s, f, g)); })
        .def("restrict", [](const api::Scene& s, const std::string& f, const std::string& x) {
            return text(api::restrict(s, f, Scalar::parse(x)));
        })
        .def("stretch",
             [](const api::Scene& s, const std::string& f, const std::optional<std::string>& context) {
                 return text(api::stretch(s, f, json_arg(context)));
             },
             py::arg("f"), py::arg("context") = py::none())
        .def("realize", [](const api::Scene& s, const std::string& w, const std::vector<Label>& labels) {
            return text(api::realize(s, w, labels));
        });

    m.def("verify_graph", [](const std::string& graph, std::size_t cap) { return text(api::verify_graph(json::parse(graph), cap)); },
          py::arg("graph"), py::arg("cap") = graph::kDefaultCap);
    m.def("check",
          [](const std::string& suite, const std::optional<std::string>& scene, std::optional<std::size_t> samples,
             std::uint64_t seed) {
              std::optional<api::Scene> parsed;
              if (scene) parsed = api::parse_scene(json::parse(*scene));
              return text(api::check(suite, parsed, samples, seed));
          },
          py::arg("suite"), py::arg("scene") = py::none(), py::arg("samples") = py::none(), py::arg("seed") = 1);
}
