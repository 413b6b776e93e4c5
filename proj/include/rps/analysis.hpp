#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rps/assembly.hpp"
#include "rps/basis.hpp"

namespace rps {

/// Norms of a fine nodal vector. `h1` is the unweighted seminorm, `energy` the a-weighted one.
struct ErrorReport {
    double l2 = 0.0;
    double h1 = 0.0;
    double energy = 0.0;
    double linf = 0.0;
};

ErrorReport norms(const Discretization& disc, const Vector& u);
/// Componentwise err / ref (0 where ref vanishes).
ErrorReport relative(const ErrorReport& err, const ErrorReport& ref);

struct RateFit {
    std::vector<double> log_x;
    std::vector<double> log_y;
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0;  ///< root-mean-square residual of the log-log fit
};

/// Ordinary least squares of log y against log x.
RateFit fit_rate(std::span<const double> x, std::span<const double> y);

/// Least squares of log y against x (exponential decay); `log_x` then holds x unchanged.
RateFit fit_log_linear(std::span<const double> x, std::span<const double> y);

struct DecayRow {
    int layers = 0;
    ErrorReport diff;  ///< norms of phi_i - phi_i^loc
};

struct DecayCurve {
    int node = -1;
    std::string reference;  ///< "global" or "l=<n>" when a localized reference substitutes
    std::vector<DecayRow> rows;
};

/// Differences between a reference element and its localized versions over `layers`.
/// With `reference_layers` empty the global element is the reference.
DecayCurve decay_curve(const BasisBuilder& builder, int node, std::span<const int> layers,
                       const LayerSetting& reference_layers = {});

/// Index of the coarse node closest to the domain centre.
int center_node(const TriMesh& mesh);

struct ConvergenceRow {
    int coarse_divisions = 0;
    double H = 0.0;           ///< 1 / coarse_divisions
    double mesh_norm = 0.0;   ///< measured sup distance to the nearest node
    LayerSetting layers;
    ErrorReport reference;    ///< norms of the fine solution
    ErrorReport galerkin;     ///< u - u^H
    ErrorReport interpolant;  ///< u - sum u(x_i) phi_i
};

struct ConvergenceStudy {
    int dim = 2;
    int fine_divisions = 128;
    std::vector<int> coarse_divisions;
    CoeffSpec coeff;
    ScalarFunction rhs;
    std::function<LayerSetting(int coarse_divisions)> layer_rule;
    SolverOptions solver;
    int workers = 1;
};

/// l(H) = ceil(2 log2(1/H)).
LayerSetting logarithmic_layers(int coarse_divisions);

std::vector<ConvergenceRow> convergence_table(const ConvergenceStudy& study);

}  // namespace rps
