#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tqft/center.hpp"
#include "tqft/cli.hpp"
#include "tqft/criteria.hpp"
#include "tqft/error.hpp"
#include "tqft/fixtures.hpp"
#include "tqft/indicators.hpp"
#include "tqft/rt.hpp"
#include "tqft/state_spaces.hpp"
#include "tqft/tv.hpp"

namespace py = pybind11;
using namespace tqft;

namespace {

std::string load(const std::string& kind, const std::string& token) { return read_file(resolve_input(kind, token)); }

// Center of a category together with the tube algebra it came from.
struct Center {
    FSymbolSet fs;
    TubeAlgebra tube;
    CenterData cd;

    explicit Center(const std::string& category)
        : fs(parse_category(load("categories", category))), tube(fs), cd(decompose_center(tube, fs))
    {
    }
};

} // namespace

PYBIND11_MODULE(_tqft, m)
{
    m.attr("__version__") = "0.1.0";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);

    m.def("fixtures", &list_fixtures, py::arg("kind"));
    m.def("data_dir", &data_dir);

    m.def(
        "run",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run a CLI invocation; returns (exit code, stdout, stderr).");

    m.def(
        "pentagon_residual",
        [](const std::string& category) { return verify_pentagon(parse_category(load("categories", category))).max_residual; },
        py::arg("category"));

    m.def(
        "global_dimension",
        [](const std::string& category) { return parse_category(load("categories", category)).mu(); },
        py::arg("category"));

    m.def(
        "tv_invariant",
        [](const std::string& category, const std::string& triangulation, int threads) {
            TVOptions opt;
            opt.threads = threads;
            return tv_invariant(parse_category(load("categories", category)),
                                parse_triangulation(load("triangulations", triangulation)), opt);
        },
        py::arg("category"), py::arg("triangulation"), py::arg("threads") = 1);

    m.def(
        "homology",
        [](const std::string& triangulation) {
            return first_homology(parse_triangulation(load("triangulations", triangulation))).str();
        },
        py::arg("triangulation"));

    m.def(
        "rt_invariant",
        [](const std::string& modular, const std::string& plumbing) {
            return rt_invariant(parse_modular_data(load("modular", modular)), parse_plumbing(load("plumbings", plumbing)));
        },
        py::arg("modular"), py::arg("plumbing"));

    m.def(
        "lens_rt",
        [](const std::string& modular, long long p) {
            return rt_invariant(parse_modular_data(load("modular", modular)), lens_plumbing(p));
        },
        py::arg("modular"), py::arg("p"));

    m.def(
        "min_eigenvalues",
        [](const std::string& ring, int n_max) {
            std::vector<double> out;
            for (const auto& r : check_positivity(parse_fusion_ring(load("categories", ring)), n_max))
                out.push_back(r.min_eigenvalue);
            return out;
        },
        py::arg("ring"), py::arg("n_max"));

    m.def(
        "surface_dimension",
        [](const std::string& ring, const std::string& surface, std::vector<int> labels) {
            DecoratedSurface s = parse_surface(load("surfaces", surface));
            if (!labels.empty()) s = s.with_marked_labels(labels);
            return dim_state_space(parse_fusion_ring(load("categories", ring)), s);
        },
        py::arg("ring"), py::arg("surface"), py::arg("labels") = std::vector<int>{});

    m.def(
        "closed_surface_dimension",
        [](const std::string& modular, int genus) {
            return dim_closed_surface(parse_modular_data(load("modular", modular)), genus);
        },
        py::arg("modular"), py::arg("genus"));

    py::class_<Center>(m, "Center")
        .def(py::init<const std::string&>(), py::arg("category"))
        .def_property_readonly("rank", [](const Center& c) { return c.cd.rank_z; })
        .def_property_readonly("labels", [](const Center& c) { return c.cd.labels_z; })
        .def_property_readonly("S", [](const Center& c) { return c.cd.md().S(); })
        .def_property_readonly("T", [](const Center& c) { return c.cd.md().T(); })
        .def_property_readonly("induction", [](const Center& c) { return c.cd.induction; })
        .def("closed_surface_dimension", [](const Center& c, int g) { return dim_closed_surface(c.cd.md(), g); })
        .def(
            "lens_rt", [](const Center& c, long long p) { return rt_invariant(c.cd.md(), lens_plumbing(p)); },
            py::arg("p"))
        .def(
            "indicator",
            [](const Center& c, long long m_, long long r, const Eigen::VectorXcd& v, const Eigen::VectorXcd& z) {
                return genus1_indicator(c.cd, TorusCurve(m_, r), v, z).value;
            },
            py::arg("m"), py::arg("r"), py::arg("v"), py::arg("z"))
        .def(
            "indicator_oracle",
            [](const Center& c, long long m_, long long r, int v, int x) {
                return indicator_reference_oracle(c.tube, c.cd, TorusCurve(m_, r), v, x);
            },
            py::arg("m"), py::arg("r"), py::arg("v"), py::arg("x"));
}
