#include "rps/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>

#include "rps/analysis.hpp"
#include "rps/basis.hpp"
#include "rps/config.hpp"
#include "rps/errors.hpp"
#include "rps/homog.hpp"
#include "rps/io.hpp"
#include "rps/timedep.hpp"

namespace rps::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using io::format_double;

struct Context {
    ExperimentConfig cfg;
    json raw;
    io::OutputDir out;
    std::ostringstream log;
};

fs::path output_root(const ExperimentConfig& cfg, const std::string& command) {
    const char* env = std::getenv("RPS_OUTPUT_DIR");
    const fs::path base = env && *env ? fs::path(env) : fs::path("rps_output");
    fs::path dir = cfg.outputs.dir.empty() ? base / cfg.name : fs::path(cfg.outputs.dir);
    if (dir.is_relative() && !cfg.outputs.dir.empty() && env && *env) dir = fs::path(env) / dir;
    return dir / command;
}

std::vector<std::string> error_cells(const std::string& key, const ErrorReport& e) {
    return {key, format_double(e.l2), format_double(e.h1), format_double(e.linf)};
}

std::shared_ptr<const Discretization> build_disc(Context& ctx) {
    const auto& c = ctx.cfg;
    auto disc = Discretization::build(c.dimension, c.coarse_divisions, c.refinements, c.coeff);
    ctx.log << "mesh: dim=" << c.dimension << " coarse_divisions=" << c.coarse_divisions
            << " refinements=" << c.refinements << " fine_vertices=" << disc->fine->num_vertices()
            << " fine_cells=" << disc->fine->num_cells() << " coarse_nodes=" << disc->coarse->coarse_nodes().size()
            << "\n";
    ctx.log << "coeff: " << c.coeff.name() << " lambda_min=" << format_double(disc->coeffs.lambda_min)
            << " lambda_max=" << format_double(disc->coeffs.lambda_max) << "\n";
    if (c.outputs.dump("field")) ctx.out.write("field.csv", io::field_csv(*disc->fine, disc->coeffs));
    if (c.outputs.dump("mesh")) {
        ctx.out.write("mesh_coarse.txt", io::mesh_text(*disc->coarse));
        ctx.out.write("mesh_fine.txt", io::mesh_text(*disc->fine));
    }
    return disc;
}

RpsBasis build_basis(Context& ctx, const BasisBuilder& builder, const LayerSetting& layers) {
    RpsBasis basis = builder.solve_all(layers, ctx.cfg.workers);
    double worst = 0.0;
    int refinements = 0;
    for (const auto& f : basis.functions) {
        worst = std::max(worst, f.report.relative_residual);
        refinements = std::max(refinements, f.report.iterations);
    }
    ctx.log << "basis l=" << layer_label(layers) << ": functions=" << basis.size()
            << " stored_nonzeros=" << basis.stored_nonzeros() << " method=" << to_string(builder.options().method)
            << " max_relative_residual=" << format_double(worst) << " max_iterations=" << refinements << "\n";
    if (ctx.cfg.outputs.dump("basis")) {
        for (const auto& f : basis.functions) {
            char name[64];
            std::snprintf(name, sizeof name, "basis/l%s/phi_%04d.csv", layer_label(layers).c_str(), f.node);
            ctx.out.write(name, io::basis_csv(f));
        }
    }
    return basis;
}

ScalarFunction rhs_function(const Context& ctx) { return ctx.cfg.rhs.function(ctx.cfg.dimension); }

void maybe_plot(Context& ctx, const std::string& file, const std::string& title, const std::string& xl,
                const std::string& yl, const std::vector<io::PlotSeries>& series, bool log_x) {
    if (ctx.cfg.outputs.plots) ctx.out.write(file, io::svg_plot(title, xl, yl, series, log_x, true));
}

void cmd_mesh_info(Context& ctx) {
    const auto& c = ctx.cfg;
    const TriMesh coarse = build_structured(c.dimension, c.coarse_divisions);
    const TriMesh fine = refine(coarse, c.refinements);
    const auto pts = coarse.coarse_points();
    const double h_norm = mesh_norm(pts, fine);
    std::vector<std::vector<std::string>> rows = {
        {"dimension", std::to_string(c.dimension)},
        {"coarse_divisions", std::to_string(c.coarse_divisions)},
        {"refinements", std::to_string(c.refinements)},
        {"coarse_vertices", std::to_string(coarse.num_vertices())},
        {"coarse_cells", std::to_string(coarse.num_cells())},
        {"coarse_nodes", std::to_string(coarse.coarse_nodes().size())},
        {"fine_vertices", std::to_string(fine.num_vertices())},
        {"fine_cells", std::to_string(fine.num_cells())},
        {"h", format_double(fine.spacing())},
        {"H", format_double(1.0 / c.coarse_divisions)},
        {"mesh_norm", format_double(h_norm)},
    };
    const std::string table = io::csv({"quantity", "value"}, rows);
    ctx.out.write("mesh_info.csv", table);
    ctx.out.write("mesh_coarse.txt", io::mesh_text(coarse));
    ctx.out.write("mesh_fine.txt", io::mesh_text(fine));
    std::cout << table;
}

void cmd_basis(Context& ctx) {
    auto disc = build_disc(ctx);
    const BasisBuilder builder(disc, ctx.cfg.solver);
    if (ctx.cfg.outputs.dump("matrices")) {
        ctx.out.write("matrices/stiffness.coo", io::coo_text(disc->stiffness));
        ctx.out.write("matrices/fv_divergence.coo", io::coo_text(disc->fv.divergence));
        ctx.out.write("matrices/normal.coo", io::coo_text(builder.normal_matrix()));
    }
    for (const auto& layers : ctx.cfg.layers.for_divisions(ctx.cfg.coarse_divisions)) {
        const RpsBasis basis = build_basis(ctx, builder, layers);
        std::vector<std::vector<std::string>> rows;
        for (const auto& f : basis.functions) {
            rows.push_back({std::to_string(f.node), std::to_string(f.support.size()), format_double(f.objective),
                            std::to_string(f.report.iterations), format_double(f.report.relative_residual)});
        }
        ctx.out.write("basis_summary_l" + layer_label(layers) + ".csv",
                      io::csv({"node", "support_size", "objective", "iterations", "relative_residual"}, rows));
    }
}

void cmd_decay(Context& ctx) {
    auto disc = build_disc(ctx);
    const BasisBuilder builder(disc, ctx.cfg.solver);
    const int node = ctx.cfg.problem.node >= 0 ? ctx.cfg.problem.node : center_node(*disc->coarse);
    std::vector<int> layers;
    for (const auto& l : ctx.cfg.layers.for_divisions(ctx.cfg.coarse_divisions)) {
        if (!l) throw ConfigError("layers for a decay study must be integers, not \"global\"");
        layers.push_back(*l);
    }
    const DecayCurve curve = decay_curve(builder, node, layers, ctx.cfg.problem.reference_layers);
    ctx.log << "decay: node=" << node << " reference=" << curve.reference << "\n";

    std::vector<std::vector<std::string>> rows;
    std::vector<double> ls, l2, h1, linf;
    for (const auto& r : curve.rows) {
        rows.push_back(error_cells(std::to_string(r.layers), r.diff));
        ls.push_back(r.layers);
        l2.push_back(r.diff.l2);
        h1.push_back(r.diff.h1);
        linf.push_back(r.diff.linf);
    }
    ctx.out.write("decay.csv", io::csv({"l", "err_L2", "err_H1", "err_Linf"}, rows));

    if (curve.rows.size() >= 2) {
        std::vector<std::vector<std::string>> fits;
        const std::pair<const char*, const std::vector<double>*> series[] = {{"L2", &l2}, {"H1", &h1}, {"Linf", &linf}};
        for (const auto& [name, ys] : series) {
            if (std::any_of(ys->begin(), ys->end(), [](double v) { return !(v > 0.0); })) continue;
            const RateFit fit = fit_log_linear(ls, *ys);
            fits.push_back({name, format_double(fit.slope), format_double(std::exp(fit.slope)),
                            format_double(fit.residual)});
        }
        ctx.out.write("decay_fit.csv", io::csv({"norm", "log_slope_per_layer", "ratio_per_layer", "residual"}, fits));
    }
    maybe_plot(ctx, "decay.svg", "||phi - phi_loc|| vs layers (node " + std::to_string(node) + ")", "layers l",
               "difference", {{"L2", ls, l2}, {"H1", ls, h1}, {"Linf", ls, linf}}, false);
}

void cmd_solve(Context& ctx) {
    const auto& c = ctx.cfg;
    const ScalarFunction g = rhs_function(ctx);
    if (!c.problem.sweep.empty()) {
        ConvergenceStudy study;
        study.dim = c.dimension;
        study.fine_divisions = c.fine_divisions();
        study.coarse_divisions = c.problem.sweep;
        study.coeff = c.coeff;
        study.rhs = g;
        study.solver = c.solver;
        study.workers = c.workers;
        if (c.layers.logarithmic) {
            study.layer_rule = logarithmic_layers;
        } else {
            if (c.layers.settings.size() != 1) {
                throw ConfigError("layers must be a single setting or \"log\" for a convergence sweep");
            }
            const LayerSetting fixed = c.layers.settings.front();
            study.layer_rule = [fixed](int) { return fixed; };
        }
        const auto table = convergence_table(study);
        std::vector<std::vector<std::string>> conv, interp, detail;
        std::vector<double> hs, g_l2, g_h1, i_h1;
        for (const auto& r : table) {
            const std::string h = format_double(r.H);
            conv.push_back(error_cells(h, r.galerkin));
            interp.push_back(error_cells(h, r.interpolant));
            const ErrorReport rel = relative(r.galerkin, r.reference);
            detail.push_back({h, format_double(r.mesh_norm), layer_label(r.layers), format_double(r.galerkin.energy),
                              format_double(rel.l2), format_double(rel.h1), format_double(rel.linf)});
            hs.push_back(r.H);
            g_l2.push_back(r.galerkin.l2);
            g_h1.push_back(r.galerkin.h1);
            i_h1.push_back(r.interpolant.h1);
            ctx.log << "sweep H=" << h << " l=" << layer_label(r.layers) << " err_H1=" << format_double(r.galerkin.h1)
                    << " interp_err_H1=" << format_double(r.interpolant.h1) << "\n";
        }
        ctx.out.write("convergence.csv", io::csv({"H", "err_L2", "err_H1", "err_Linf"}, conv));
        ctx.out.write("interpolation.csv", io::csv({"H", "err_L2", "err_H1", "err_Linf"}, interp));
        ctx.out.write("convergence_detail.csv",
                      io::csv({"H", "mesh_norm", "l", "err_energy", "rel_L2", "rel_H1", "rel_Linf"}, detail));
        std::vector<std::vector<std::string>> rates;
        const std::pair<const char*, const std::vector<double>*> fits[] = {
            {"galerkin_L2", &g_l2}, {"galerkin_H1", &g_h1}, {"interpolant_H1", &i_h1}};
        for (const auto& [name, ys] : fits) {
            const RateFit f = fit_rate(hs, *ys);
            rates.push_back({name, format_double(f.slope), format_double(f.intercept), format_double(f.residual)});
        }
        ctx.out.write("rates.csv", io::csv({"quantity", "slope", "intercept", "residual"}, rates));
        maybe_plot(ctx, "convergence.svg", "error vs H", "H", "error",
                   {{"Galerkin L2", hs, g_l2}, {"Galerkin H1", hs, g_h1}, {"interpolant H1", hs, i_h1}}, true);
        return;
    }

    auto disc = build_disc(ctx);
    const Solution fine = solve_fine(*disc, g, c.solver);
    const ErrorReport ref = norms(*disc, fine.values);
    if (c.outputs.dump("solutions")) ctx.out.write("solutions/u_fine.csv", io::nodal_csv(fine.values));
    const BasisBuilder builder(disc, c.solver);
    std::vector<std::vector<std::string>> rows, rel_rows;
    std::vector<double> ls, l2, h1, linf;
    for (const auto& layers : c.layers.for_divisions(c.coarse_divisions)) {
        const RpsBasis basis = build_basis(ctx, builder, layers);
        const auto [sys, coarse] = coarse_solve(basis, g);
        const ErrorReport err = norms(*disc, fine.values - coarse.values);
        const ErrorReport rel = relative(err, ref);
        rows.push_back(error_cells(layer_label(layers), err));
        rel_rows.push_back(error_cells(layer_label(layers), rel));
        if (layers) {
            ls.push_back(*layers);
            l2.push_back(err.l2);
            h1.push_back(err.h1);
            linf.push_back(err.linf);
        }
        if (c.outputs.dump("solutions")) {
            ctx.out.write("solutions/u_H_l" + layer_label(layers) + ".csv", io::nodal_csv(coarse.values));
        }
        if (c.outputs.dump("matrices")) {
            ctx.out.write("matrices/coarse_stiffness_l" + layer_label(layers) + ".csv", io::dense_csv(sys.stiffness));
        }
    }
    ctx.out.write("errors.csv", io::csv({"l", "err_L2", "err_H1", "err_Linf"}, rows));
    ctx.out.write("errors_relative.csv", io::csv({"l", "err_L2", "err_H1", "err_Linf"}, rel_rows));
    if (ls.size() >= 2) {
        maybe_plot(ctx, "errors.svg", "||u - u_H,loc|| vs layers", "layers l", "error",
                   {{"L2", ls, l2}, {"H1", ls, h1}, {"Linf", ls, linf}}, false);
    }
}

void cmd_time(Context& ctx, bool wave) {
    const auto& c = ctx.cfg;
    auto disc = build_disc(ctx);
    const Forcing f = Forcing::steady(rhs_function(ctx));
    const int steps = c.problem.steps > 0 ? c.problem.steps : 4 * c.fine_divisions();
    const TimeGrid grid(c.problem.final_time, steps);
    TimeStepOptions opts;
    opts.density = c.problem.density;
    opts.snapshot_every = c.problem.snapshot_every;
    opts.solver = c.solver;
    const MassKind mk = c.problem.lumped_mass ? MassKind::lumped : MassKind::consistent;
    auto run = [&](const GalerkinSpace& space) {
        return wave ? solve_wave(space, f, grid, opts) : solve_parabolic(space, f, grid, opts);
    };
    const char* prefix = wave ? "wave" : "parabolic";
    ctx.log << prefix << ": T=" << format_double(grid.final_time) << " steps=" << grid.steps
            << " dt=" << format_double(grid.dt()) << " mass=" << (c.problem.lumped_mass ? "lumped" : "consistent")
            << "\n";

    auto write_traj = [&](const std::string& tag, const GalerkinSpace& space, const Trajectory& tr) {
        ctx.out.write("terminal_" + tag + ".csv", io::nodal_csv(space.lift(tr.final_state())));
        if (!c.outputs.dump("trajectory")) return;
        std::string text = "t,node,value\n";
        for (std::size_t k = 0; k < tr.states.size(); ++k) {
            const Vector u = space.lift(tr.states[k]);
            const std::string t = format_double(tr.times[k]);
            for (Eigen::Index v = 0; v < u.size(); ++v) text += t + "," + std::to_string(v) + "," + format_double(u[v]) + "\n";
        }
        ctx.out.write("trajectory_" + tag + ".csv", text);
    };

    const GalerkinSpace fine_space = GalerkinSpace::fine(disc, mk);
    const Trajectory fine_traj = run(fine_space);
    write_traj("fine", fine_space, fine_traj);
    const Vector u_ref = fine_space.lift(fine_traj.final_state());

    const BasisBuilder builder(disc, c.solver);
    std::vector<std::vector<std::string>> rows;
    std::vector<double> ls, l2, h1, linf;
    for (const auto& layers : c.layers.for_divisions(c.coarse_divisions)) {
        const RpsBasis basis = build_basis(ctx, builder, layers);
        const GalerkinSpace space = GalerkinSpace::coarse(basis, mk);
        const Trajectory tr = run(space);
        write_traj("l" + layer_label(layers), space, tr);
        const ErrorReport err = norms(*disc, u_ref - space.lift(tr.final_state()));
        rows.push_back(error_cells(layer_label(layers), err));
        if (layers) {
            ls.push_back(*layers);
            l2.push_back(err.l2);
            h1.push_back(err.h1);
            linf.push_back(err.linf);
        }
    }
    ctx.out.write(std::string(prefix) + "_errors.csv", io::csv({"l", "err_L2", "err_H1", "err_Linf"}, rows));
    if (ls.size() >= 2) {
        maybe_plot(ctx, std::string(prefix) + "_errors.svg", "terminal error vs layers", "layers l", "error",
                   {{"L2", ls, l2}, {"H1", ls, h1}, {"Linf", ls, linf}}, false);
    }
}

void cmd_recover(Context& ctx) {
    const auto& c = ctx.cfg;
    fs::path mpath = c.problem.measurements;
    if (mpath.is_relative()) mpath = c.base_dir / mpath;
    const auto measurements = io::read_measurements(mpath);
    auto disc = build_disc(ctx);
    const BasisBuilder builder(disc, c.solver);
    const auto settings = c.layers.for_divisions(c.coarse_divisions);
    const RpsBasis basis = build_basis(ctx, builder, settings.front());
    const Recovery rec = recover(basis, measurements, c.problem.rhs_bound);
    ctx.out.write("recovered.csv", io::nodal_csv(rec.solution.values));
    const ErrorReport n = norms(*disc, rec.solution.values);
    ctx.out.write("recovery_report.csv",
                  io::csv({"quantity", "value"}, {{"layers", layer_label(basis.layers)},
                                                  {"measurements", std::to_string(measurements.size())},
                                                  {"H", format_double(rec.mesh_norm)},
                                                  {"M", format_double(rec.rhs_bound)},
                                                  {"H_times_M", format_double(rec.mesh_norm * rec.rhs_bound)},
                                                  {"recovered_L2", format_double(n.l2)},
                                                  {"recovered_H1", format_double(n.h1)}}));
    ctx.out.write("recovery_bound.txt", rec.bound + "\n");
    std::cout << rec.bound << "\n";
}

void cmd_gram(Context& ctx) {
    const auto& c = ctx.cfg;
    auto disc = build_disc(ctx);
    const BasisBuilder builder(disc, c.solver);
    const auto settings = c.layers.for_divisions(c.coarse_divisions);
    const RpsBasis basis = build_basis(ctx, builder, settings.front());
    const DenseMatrix p = gram(basis);
    const DenseMatrix t = theta(p);
    DenseMatrix logp = p.cwiseAbs();
    for (Eigen::Index i = 0; i < logp.size(); ++i) logp.data()[i] = std::log10(1e-9 + logp.data()[i]);
    ctx.out.write("P.csv", io::dense_csv(p));
    ctx.out.write("Theta.csv", io::dense_csv(t));
    ctx.out.write("P_log10.csv", io::dense_csv(logp));
    const double id_err = inverse_residual(p, t);
    const double asym = (p - p.transpose()).cwiseAbs().maxCoeff() / p.cwiseAbs().maxCoeff();
    Eigen::SelfAdjointEigenSolver<DenseMatrix> eig(p, Eigen::EigenvaluesOnly);
    const auto& ev = eig.eigenvalues();
    ctx.out.write("gram_report.csv",
                  io::csv({"quantity", "value"}, {{"layers", layer_label(basis.layers)},
                                                  {"size", std::to_string(p.rows())},
                                                  {"relative_asymmetry", format_double(asym)},
                                                  {"min_eigenvalue", format_double(ev[0])},
                                                  {"max_eigenvalue", format_double(ev[ev.size() - 1])},
                                                  {"condition", format_double(ev[ev.size() - 1] / ev[0])},
                                                  {"max_abs_P_Theta_minus_I", format_double(id_err)}}));
    if (basis.layers) ctx.log << "gram: localized basis, P is an approximation of the global Gram matrix\n";
}

using Command = std::function<void(Context&)>;

const std::map<std::string, std::pair<std::string, Command>>& commands() {
    static const std::map<std::string, std::pair<std::string, Command>> table = {
        {"mesh-info", {"Mesh counts, mesh norm and mesh export", cmd_mesh_info}},
        {"basis", {"Compute the basis for each layer setting", cmd_basis}},
        {"decay", {"Localization decay of one basis element", cmd_decay}},
        {"solve", {"Elliptic coarse solves (or a convergence sweep)", cmd_solve}},
        {"wave", {"Wave equation on fine and coarse spaces", [](Context& c) { cmd_time(c, true); }}},
        {"parabolic", {"Parabolic equation on fine and coarse spaces", [](Context& c) { cmd_time(c, false); }}},
        {"recover", {"Recovery from nodal measurements", cmd_recover}},
        {"gram", {"Gram matrix P and its inverse Theta", cmd_gram}},
    };
    return table;
}

Command command_for_problem(const std::string& kind) {
    static const std::map<std::string, std::string> by_kind = {
        {"elliptic", "solve"}, {"wave", "wave"},       {"parabolic", "parabolic"}, {"basis-only", "basis"},
        {"recover", "recover"}, {"decay", "decay"}, {"gram", "gram"}};
    return commands().at(by_kind.at(kind)).second;
}

struct Invocation {
    std::string config;
    std::vector<std::string> overrides;
    int workers = 0;
};

int execute(const std::string& name, const Invocation& inv) {
    const fs::path cfg_path(inv.config);
    json raw = load_config_json(cfg_path, inv.overrides);
    if (inv.workers > 0) raw["workers"] = inv.workers;
    ExperimentConfig cfg = parse_config(raw, cfg_path.parent_path());
    const Command cmd = name == "run" ? command_for_problem(cfg.problem.kind) : commands().at(name).second;
    const std::string out_name = name == "run" ? "run" : name;
    Context ctx{cfg, raw, io::OutputDir(output_root(cfg, out_name)), {}};
    ctx.out.write("config.resolved.json", resolved_json(raw).dump(2) + "\n");
    cmd(ctx);
    ctx.out.write("run.log", ctx.log.str());
    ctx.out.write_manifest();
    std::cerr << "rps " << name << ": wrote " << ctx.out.files().size() << " files and MANIFEST to "
              << ctx.out.root().string() << "\n";
    return kExitOk;
}

}  // namespace

int exit_code_for(const std::exception& e) {
    if (const auto* err = dynamic_cast<const Error*>(&e)) {
        switch (err->kind()) {
            case ErrorKind::degenerate_support:
            case ErrorKind::solver:
            case ErrorKind::conditioning: return kExitSolver;
            case ErrorKind::io: return kExitIo;
            default: return kExitConfig;
        }
    }
    if (dynamic_cast<const json::exception*>(&e)) return kExitConfig;
    if (dynamic_cast<const std::filesystem::filesystem_error*>(&e)) return kExitIo;
    return kExitSolver;
}

int main(const std::vector<std::string>& args) {
    CLI::App app{"rps: rough polyharmonic spline bases and coarse solvers for rough-coefficient elliptic problems"};
    app.name("rps");
    app.require_subcommand(1);
    Invocation inv;
    std::string selected;
    auto add = [&](const std::string& name, const std::string& description) {
        auto* sub = app.add_subcommand(name, description);
        sub->add_option("--config,-c", inv.config, "Experiment config (JSON)")->required();
        sub->add_option("--override,-o", inv.overrides, "Override a config field, key=value (repeatable)");
        sub->add_option("--workers,-w", inv.workers, "Worker threads for basis construction")->check(CLI::PositiveNumber);
        sub->callback([&selected, name] { selected = name; });
    };
    add("run", "Run the experiment selected by problem.kind");
    for (const auto& [name, entry] : commands()) add(name, entry.first);

    if (args.size() > 1 && !args[1].empty() && args[1][0] != '-' && !app.get_subcommand_no_throw(args[1])) {
        std::cerr << "rps: unknown subcommand '" << args[1] << "'\n\n" << app.help();
        return kExitConfig;
    }
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "rps: " << e.what() << "\n\n" << app.help();
        return kExitConfig;
    }

    try {
        return execute(selected, inv);
    } catch (const std::exception& e) {
        const int code = exit_code_for(e);
        const char* what = code == kExitConfig ? "configuration error" : code == kExitIo ? "I/O error" : "solver error";
        std::cerr << "rps " << selected << ": " << what << ": " << e.what() << "\n";
        return code;
    }
}

int main(int argc, char** argv) {
    return main(std::vector<std::string>(argv, argv + argc));
}

}  // namespace rps::cli
