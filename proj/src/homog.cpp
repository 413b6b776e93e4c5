#include "rps/homog.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rps/errors.hpp"

namespace rps {

const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::fine_reference: return "fine-reference";
        case Provenance::coarse_global: return "coarse-global";
        case Provenance::coarse_localized: return "coarse-localized";
        case Provenance::interpolant: return "interpolant";
        case Provenance::recovery: return "recovery";
    }
    return "?";
}

SparseMatrix interior_columns(const RpsBasis& basis) {
    const auto& dofs = basis.disc->dofs;
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(basis.stored_nonzeros());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const auto& f = basis.functions[j];
        for (std::size_t k = 0; k < f.support.size(); ++k) {
            if (f.values[k] != 0.0) trip.emplace_back(dofs.dof_of[f.support[k]], static_cast<int>(j), f.values[k]);
        }
    }
    SparseMatrix phi(static_cast<Eigen::Index>(dofs.size()), static_cast<Eigen::Index>(basis.size()));
    phi.setFromTriplets(trip.begin(), trip.end());
    phi.makeCompressed();
    return phi;
}

Solution solve_fine_load(const Discretization& disc, const Vector& interior_load, const SolverOptions& options) {
    SolverOptions opts = options;
    if (opts.method == SolverMethod::dense && disc.dofs.size() > 4000) opts.method = SolverMethod::direct;
    SpdSolver solver(disc.stiffness, opts);
    const Vector u = solver.solve(interior_load);
    return {disc.dofs.extend(u), Provenance::fine_reference, {}};
}

Solution solve_fine(const Discretization& disc, const ScalarFunction& g, const SolverOptions& options) {
    return solve_fine_load(disc, load_vector(*disc.fine, g), options);
}

std::pair<CoarseSystem, Solution> coarse_solve_load(const RpsBasis& basis, const Vector& interior_load) {
    const auto& disc = *basis.disc;
    const SparseMatrix phi = interior_columns(basis);
    const SparseMatrix phi_t = phi.transpose();
    const SparseMatrix a_phi = disc.stiffness * phi;
    CoarseSystem sys;
    sys.stiffness = DenseMatrix(phi_t * a_phi);
    sys.stiffness = 0.5 * (sys.stiffness + sys.stiffness.transpose()).eval();
    sys.load = phi_t * interior_load;
    Eigen::LLT<DenseMatrix> llt(sys.stiffness);
    if (llt.info() != Eigen::Success) {
        throw ConditioningError("coarse stiffness matrix is not positive definite", condition_number(sys.stiffness));
    }
    sys.coefficients = llt.solve(sys.load);
    Solution sol{disc.dofs.extend(phi * sys.coefficients),
                 basis.layers ? Provenance::coarse_localized : Provenance::coarse_global, basis.layers};
    return {std::move(sys), std::move(sol)};
}

std::pair<CoarseSystem, Solution> coarse_solve(const RpsBasis& basis, const ScalarFunction& g) {
    return coarse_solve_load(basis, load_vector(*basis.disc->fine, g));
}

Solution interpolate(const RpsBasis& basis, const Vector& nodal_values) {
    if (static_cast<std::size_t>(nodal_values.size()) != basis.size()) {
        throw StructuralError("interpolation needs " + std::to_string(basis.size()) + " nodal values, got " +
                              std::to_string(nodal_values.size()));
    }
    const auto& disc = *basis.disc;
    Vector out = Vector::Zero(static_cast<Eigen::Index>(disc.fine->num_vertices()));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const double w = nodal_values[static_cast<Eigen::Index>(j)];
        if (w == 0.0) continue;
        const auto& f = basis.functions[j];
        for (std::size_t k = 0; k < f.support.size(); ++k) out[f.support[k]] += w * f.values[k];
    }
    return {std::move(out), Provenance::interpolant, basis.layers};
}

Vector coarse_samples(const Discretization& disc, const Vector& fine_values) {
    const auto& nodes = disc.fine->coarse_nodes();
    Vector out(static_cast<Eigen::Index>(nodes.size()));
    for (std::size_t k = 0; k < nodes.size(); ++k) out[static_cast<Eigen::Index>(k)] = fine_values[nodes[k]];
    return out;
}

Recovery recover(const RpsBasis& basis, const std::map<int, double>& measurements, double rhs_bound) {
    const std::size_t n = basis.size();
    Vector values(static_cast<Eigen::Index>(n));
    std::vector<int> missing;
    for (std::size_t i = 0; i < n; ++i) {
        const auto it = measurements.find(static_cast<int>(i));
        if (it == measurements.end()) {
            missing.push_back(static_cast<int>(i));
        } else {
            values[static_cast<Eigen::Index>(i)] = it->second;
        }
    }
    if (!missing.empty()) {
        std::ostringstream msg;
        msg << "measurements missing for " << missing.size() << " coarse node(s), first: " << missing.front();
        throw MeasurementError(msg.str());
    }
    for (const auto& [node, value] : measurements) {
        if (node < 0 || static_cast<std::size_t>(node) >= n) {
            throw MeasurementError("measurement for unknown coarse node " + std::to_string(node));
        }
    }
    if (!(rhs_bound >= 0.0)) throw ConfigError("recover: rhs bound M must be >= 0");

    Recovery rec;
    rec.solution = interpolate(basis, values);
    rec.solution.provenance = Provenance::recovery;
    const auto pts = basis.disc->fine->coarse_points();
    rec.mesh_norm = mesh_norm(pts, *basis.disc->fine);
    rec.rhs_bound = rhs_bound;
    std::ostringstream b;
    b.precision(6);
    b << "||u - u_in||_H1 <= C * H * M with H = " << rec.mesh_norm << ", M = " << rhs_bound
      << " (H * M = " << rec.mesh_norm * rhs_bound << "; C depends on the domain and the coefficient contrast)";
    rec.bound = b.str();
    return rec;
}

LocalityDiagnostics locality_diagnostics(const BasisBuilder& builder, const BasisFunction& f) {
    const auto& disc = builder.disc();
    const auto& fine = *disc.fine;
    const Vector u = f.dense(fine.num_vertices());
    LocalityDiagnostics d;
    d.v_norm = std::sqrt(disc.fv.v_norm_squared(u));
    if (!f.layers) return d;

    const SubdomainMask outer = builder.support(f.node, *f.layers);
    std::vector<char> inner(disc.coarse->num_cells(), 0);
    if (*f.layers > 1) {
        for (int c : builder.support(f.node, *f.layers - 1).coarse_cells) inner[c] = 1;
    }
    const int k = fine.vertices_per_cell();
    double sum = 0.0;
    for (int c : outer.fine_cells) {
        if (inner[fine.root_cell()[c]]) continue;
        const auto v = fine.cell(static_cast<std::size_t>(c));
        const double off = fine.cell_measure(static_cast<std::size_t>(c)) / (k * (k + 1));
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) sum += (i == j ? 2.0 : 1.0) * off * u[v[i]] * u[v[j]];
        }
    }
    d.outer_layer_l2 = std::sqrt(std::max(sum, 0.0));
    return d;
}

}  // namespace rps
