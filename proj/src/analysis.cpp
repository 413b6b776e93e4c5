#include "rps/analysis.hpp"

#include <cmath>
#include <limits>

#include "rps/errors.hpp"
#include "rps/homog.hpp"

namespace rps {

ErrorReport norms(const Discretization& disc, const Vector& u) {
    if (static_cast<std::size_t>(u.size()) != disc.fine->num_vertices()) {
        throw StructuralError("norms: vector length does not match the fine mesh");
    }
    ErrorReport r;
    r.l2 = std::sqrt(std::max(0.0, u.dot(disc.full_mass * u)));
    r.h1 = std::sqrt(std::max(0.0, u.dot(disc.full_laplacian * u)));
    r.energy = std::sqrt(std::max(0.0, u.dot(disc.full_stiffness * u)));
    r.linf = u.size() ? u.cwiseAbs().maxCoeff() : 0.0;
    return r;
}

ErrorReport relative(const ErrorReport& err, const ErrorReport& ref) {
    auto ratio = [](double a, double b) { return b > 0.0 ? a / b : 0.0; };
    return {ratio(err.l2, ref.l2), ratio(err.h1, ref.h1), ratio(err.energy, ref.energy), ratio(err.linf, ref.linf)};
}

namespace {

RateFit least_squares(RateFit fit) {
    const std::size_t m = fit.log_x.size();
    const double n = static_cast<double>(m);
    double mx = 0.0, my = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        mx += fit.log_x[k];
        my += fit.log_y[k];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        sxx += (fit.log_x[k] - mx) * (fit.log_x[k] - mx);
        sxy += (fit.log_x[k] - mx) * (fit.log_y[k] - my);
    }
    if (!(sxx > 0.0)) throw FitError("rate fit needs at least two distinct x values");
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        const double e = fit.log_y[k] - (fit.intercept + fit.slope * fit.log_x[k]);
        ss += e * e;
    }
    fit.residual = std::sqrt(ss / n);
    return fit;
}

void check_samples(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw FitError("rate fit: x and y have different lengths");
    if (x.size() < 2) throw FitError("rate fit needs at least 2 points, got " + std::to_string(x.size()));
}

}  // namespace

RateFit fit_rate(std::span<const double> x, std::span<const double> y) {
    check_samples(x, y);
    RateFit fit;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (!(x[k] > 0.0) || !(y[k] > 0.0)) throw FitError("rate fit needs positive samples");
        fit.log_x.push_back(std::log(x[k]));
        fit.log_y.push_back(std::log(y[k]));
    }
    return least_squares(std::move(fit));
}

RateFit fit_log_linear(std::span<const double> x, std::span<const double> y) {
    check_samples(x, y);
    RateFit fit;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (!(y[k] > 0.0)) throw FitError("log-linear fit needs positive y samples");
        fit.log_x.push_back(x[k]);
        fit.log_y.push_back(std::log(y[k]));
    }
    return least_squares(std::move(fit));
}

DecayCurve decay_curve(const BasisBuilder& builder, int node, std::span<const int> layers,
                       const LayerSetting& reference_layers) {
    const auto& disc = builder.disc();
    const std::size_t nv = disc.fine->num_vertices();
    DecayCurve curve;
    curve.node = node;
    curve.reference = reference_layers ? "l=" + std::to_string(*reference_layers) : "global";
    const Vector ref = builder.solve_basis(node, reference_layers).dense(nv);
    for (int l : layers) {
        const Vector loc = builder.solve_basis(node, LayerSetting(l)).dense(nv);
        curve.rows.push_back({l, norms(disc, ref - loc)});
    }
    return curve;
}

int center_node(const TriMesh& mesh) {
    const Point mid = mesh.dim() == 1 ? Point{0.5, 0.0} : Point{0.5, 0.5};
    int best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    const auto& nodes = mesh.coarse_nodes();
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        const double d = distance(mesh.vertex(nodes[k]), mid);
        if (d < best_d) {
            best_d = d;
            best = static_cast<int>(k);
        }
    }
    if (best < 0) throw ConfigError("mesh has no coarse nodes");
    return best;
}

LayerSetting logarithmic_layers(int coarse_divisions) {
    return static_cast<int>(std::ceil(2.0 * std::log2(static_cast<double>(coarse_divisions)) - 1e-12));
}

std::vector<ConvergenceRow> convergence_table(const ConvergenceStudy& study) {
    if (study.coarse_divisions.size() < 2) throw FitError("convergence sweep needs at least 2 mesh sizes");
    if (!study.rhs) throw ConfigError("convergence sweep needs a right-hand side");
    std::vector<ConvergenceRow> rows;
    for (int nc : study.coarse_divisions) {
        if (nc < 2 || study.fine_divisions % nc != 0) {
            throw ConfigError("coarse divisions " + std::to_string(nc) + " must divide fine divisions " +
                              std::to_string(study.fine_divisions));
        }
        int refinements = 0;
        for (int r = study.fine_divisions / nc; r > 1; r /= 2) {
            if (r % 2 != 0) throw ConfigError("fine/coarse division ratio must be a power of 2");
            ++refinements;
        }
        auto disc = Discretization::build(study.dim, nc, refinements, study.coeff);
        const Solution fine = solve_fine(*disc, study.rhs, study.solver);
        const BasisBuilder builder(disc, study.solver);
        ConvergenceRow row;
        row.coarse_divisions = nc;
        row.H = 1.0 / nc;
        row.mesh_norm = mesh_norm(disc->fine->coarse_points(), *disc->fine);
        row.layers = study.layer_rule ? study.layer_rule(nc) : LayerSetting{};
        const RpsBasis basis = builder.solve_all(row.layers, study.workers);
        const auto [sys, coarse] = coarse_solve(basis, study.rhs);
        const Solution interp = interpolate(basis, coarse_samples(*disc, fine.values));
        row.reference = norms(*disc, fine.values);
        row.galerkin = norms(*disc, fine.values - coarse.values);
        row.interpolant = norms(*disc, fine.values - interp.values);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace rps
