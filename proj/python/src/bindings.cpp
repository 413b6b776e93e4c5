#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "rps/analysis.hpp"
#include "rps/basis.hpp"
#include "rps/cli.hpp"
#include "rps/config.hpp"
#include "rps/errors.hpp"
#include "rps/homog.hpp"
#include "rps/io.hpp"
#include "rps/timedep.hpp"

namespace py = pybind11;
using namespace rps;

namespace {

using DiscPtr = std::shared_ptr<Discretization>;

CoeffSpec coeff_from(const py::object& obj) {
    if (obj.is_none()) return CoeffSpec{};
    const auto text = py::module_::import("json").attr("dumps")(obj).cast<std::string>();
    return parse_coeff(nlohmann::json::parse(text));
}

ScalarFunction wrap(const std::function<double(double, double)>& g) {
    return [g](const Point& p) {
        py::gil_scoped_acquire gil;
        return g(p[0], p[1]);
    };
}

py::dict report_dict(const ErrorReport& e) {
    py::dict d;
    d["l2"] = e.l2;
    d["h1"] = e.h1;
    d["energy"] = e.energy;
    d["linf"] = e.linf;
    return d;
}

Eigen::MatrixXd vertices(const TriMesh& m) {
    Eigen::MatrixXd out(static_cast<Eigen::Index>(m.num_vertices()), m.dim());
    for (std::size_t v = 0; v < m.num_vertices(); ++v)
        for (int k = 0; k < m.dim(); ++k) out(static_cast<Eigen::Index>(v), k) = m.vertex(v)[k];
    return out;
}

SolverOptions solver_from(const std::string& method, double tol) {
    SolverOptions o;
    o.method = parse_solver_method(method);
    o.tol = tol;
    return o;
}

}  // namespace

PYBIND11_MODULE(_rps, m) {
    m.doc() = "Rough polyharmonic spline bases on structured meshes";

    static py::exception<Error> base_error(m, "RpsError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object err = base_error;
            PyErr_SetObject(err.ptr(), py::make_tuple(e.what(), to_string(e.kind())).ptr());
        }
    });

    py::class_<Discretization, DiscPtr>(m, "Discretization")
        .def(py::init([](int dim, int coarse_divisions, int refinements, const py::object& coeff) {
                 return std::const_pointer_cast<Discretization>(
                     Discretization::build(dim, coarse_divisions, refinements, coeff_from(coeff)));
             }),
             py::arg("dim"), py::arg("coarse_divisions"), py::arg("refinements"), py::arg("coeff") = py::none())
        .def_property_readonly("dim", [](const Discretization& d) { return d.fine->dim(); })
        .def_property_readonly("fine_vertices", [](const Discretization& d) { return vertices(*d.fine); })
        .def_property_readonly("coarse_nodes", [](const Discretization& d) { return d.fine->coarse_nodes(); })
        .def_property_readonly("num_fine_cells", [](const Discretization& d) { return d.fine->num_cells(); })
        .def_property_readonly("cell_coefficients", [](const Discretization& d) { return d.coeffs.values; })
        .def_property_readonly("dual_volumes", [](const Discretization& d) { return d.fv.volumes; })
        .def("fv_apply", [](const Discretization& d, const Vector& u) { return d.fv.apply(u); })
        .def("v_norm_squared", [](const Discretization& d, const Vector& u) { return d.fv.v_norm_squared(u); })
        .def("norms", [](const Discretization& d, const Vector& u) { return report_dict(norms(d, u)); })
        .def("mesh_norm", [](const Discretization& d) { return mesh_norm(d.fine->coarse_points(), *d.fine); })
        .def("center_node", [](const Discretization& d) { return center_node(*d.coarse); });

    py::class_<RpsBasis>(m, "Basis")
        .def_property_readonly("layers", [](const RpsBasis& b) { return b.layers; })
        .def("__len__", &RpsBasis::size)
        .def("columns", &RpsBasis::columns)
        .def("support", [](const RpsBasis& b, int i) { return b.functions.at(static_cast<std::size_t>(i)).support; })
        .def("objectives",
             [](const RpsBasis& b) {
                 std::vector<double> out;
                 for (const auto& f : b.functions) out.push_back(f.objective);
                 return out;
             })
        .def("stored_nonzeros", &RpsBasis::stored_nonzeros);

    py::class_<BasisBuilder>(m, "BasisBuilder")
        .def(py::init([](DiscPtr disc, const std::string& method, double tol) {
                 return std::make_unique<BasisBuilder>(std::move(disc), solver_from(method, tol));
             }),
             py::arg("disc"), py::arg("solver") = "direct", py::arg("tol") = 1e-10)
        .def(
            "solve_basis",
            [](const BasisBuilder& b, int node, LayerSetting layers) {
                return b.solve_basis(node, layers).dense(b.disc().fine->num_vertices());
            },
            py::arg("node"), py::arg("layers") = py::none())
        .def(
            "solve_all",
            [](const BasisBuilder& b, LayerSetting layers, int workers) {
                py::gil_scoped_release release;
                return b.solve_all(layers, workers);
            },
            py::arg("layers") = py::none(), py::arg("workers") = 1)
        .def("support_nodes", [](const BasisBuilder& b, int node, int layers) { return b.support(node, layers).fine_nodes; });

    m.def("gram", &gram);
    m.def("theta", &theta);
    m.def("inverse_residual", &inverse_residual);
    m.def("condition_number", &condition_number);

    m.def("solve_fine", [](const Discretization& d, const std::function<double(double, double)>& g) {
        return solve_fine(d, wrap(g)).values;
    });
    m.def(
        "coarse_solve",
        [](const RpsBasis& b, const std::function<double(double, double)>& g) {
            auto [sys, sol] = coarse_solve(b, wrap(g));
            return py::make_tuple(sol.values, sys.stiffness, sys.coefficients);
        },
        "Returns (fine nodal values, coarse stiffness S, coefficients c).");
    m.def("interpolate", [](const RpsBasis& b, const Vector& v) { return interpolate(b, v).values; });
    m.def("coarse_samples", &coarse_samples);
    m.def("recover", [](const RpsBasis& b, const std::map<int, double>& meas, double bound) {
        const Recovery r = recover(b, meas, bound);
        return py::make_tuple(r.solution.values, r.bound);
    });

    m.def(
        "wave",
        [](DiscPtr disc, const RpsBasis* basis, const std::function<double(double, double)>& g, double T, int steps) {
            const GalerkinSpace space = basis ? GalerkinSpace::coarse(*basis) : GalerkinSpace::fine(std::move(disc));
            return space.lift(solve_wave(space, Forcing::steady(wrap(g)), TimeGrid(T, steps)).final_state());
        },
        py::arg("disc"), py::arg("basis"), py::arg("g"), py::arg("T"), py::arg("steps"),
        "Terminal state of the wave equation from rest; basis=None uses the fine space.");
    m.def(
        "parabolic",
        [](DiscPtr disc, const RpsBasis* basis, const std::function<double(double, double)>& g, double T, int steps) {
            const GalerkinSpace space = basis ? GalerkinSpace::coarse(*basis) : GalerkinSpace::fine(std::move(disc));
            return space.lift(solve_parabolic(space, Forcing::steady(wrap(g)), TimeGrid(T, steps)).final_state());
        },
        py::arg("disc"), py::arg("basis"), py::arg("g"), py::arg("T"), py::arg("steps"));

    m.def("decay_curve", [](const BasisBuilder& b, int node, const std::vector<int>& layers) {
        const DecayCurve c = decay_curve(b, node, layers);
        py::list rows;
        for (const auto& r : c.rows) {
            py::dict d = report_dict(r.diff);
            d["l"] = r.layers;
            rows.append(d);
        }
        return rows;
    });
    m.def("fit_rate", [](const std::vector<double>& x, const std::vector<double>& y) {
        const RateFit f = fit_rate(x, y);
        return py::make_tuple(f.slope, f.intercept, f.residual);
    });
    m.def("logarithmic_layers", [](int nc) { return *logarithmic_layers(nc); });
    m.def(
        "load_config",
        [](const std::filesystem::path& path, const std::vector<std::string>& overrides) {
            const auto raw = load_config_json(path, overrides);
            parse_config(raw, path.parent_path());
            return py::module_::import("json").attr("loads")(resolved_json(raw).dump());
        },
        py::arg("path"), py::arg("overrides") = std::vector<std::string>{},
        "Validated config with execution-only fields removed.");
    m.def(
        "cli",
        [](std::vector<std::string> args) {
            args.insert(args.begin(), "rps");
            py::gil_scoped_release release;
            return cli::main(args);
        },
        "Runs the rps command line with the given arguments; returns the exit code.");
}
