#include "rps/basis.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <thread>

#include "rps/errors.hpp"

namespace rps {

std::string layer_label(const LayerSetting& layers) {
    return layers ? std::to_string(*layers) : std::string("global");
}

Vector BasisFunction::dense(std::size_t num_vertices) const {
    Vector out = Vector::Zero(static_cast<Eigen::Index>(num_vertices));
    for (std::size_t k = 0; k < support.size(); ++k) out[support[k]] = values[k];
    return out;
}

double BasisFunction::at(int vertex) const {
    const auto it = std::lower_bound(support.begin(), support.end(), vertex);
    if (it == support.end() || *it != vertex) return 0.0;
    return values[static_cast<std::size_t>(it - support.begin())];
}

std::size_t RpsBasis::stored_nonzeros() const {
    std::size_t n = 0;
    for (const auto& f : functions) n += f.support.size();
    return n;
}

DenseMatrix RpsBasis::columns() const {
    const std::size_t nv = disc->fine->num_vertices();
    DenseMatrix out = DenseMatrix::Zero(static_cast<Eigen::Index>(nv), static_cast<Eigen::Index>(functions.size()));
    for (std::size_t j = 0; j < functions.size(); ++j) {
        const auto& f = functions[j];
        for (std::size_t k = 0; k < f.support.size(); ++k) out(f.support[k], static_cast<Eigen::Index>(j)) = f.values[k];
    }
    return out;
}

BasisBuilder::BasisBuilder(std::shared_ptr<const Discretization> disc, SolverOptions options)
    : disc_(std::move(disc)), options_(options) {
    if (!disc_) throw StructuralError("basis builder needs a discretization");
    const auto& fv = disc_->fv;
    const SparseMatrix weighted = fv.interior_volumes.asDiagonal() * fv.interior_divergence;
    const SparseMatrix bt = fv.interior_divergence.transpose();
    SparseMatrix q = bt * weighted;
    const SparseMatrix qt = q.transpose();
    normal_ = 0.5 * (q + qt);
    normal_.makeCompressed();

    const auto& fine = *disc_->fine;
    coarse_dof_.reserve(fine.coarse_nodes().size());
    for (int v : fine.coarse_nodes()) coarse_dof_.push_back(disc_->dofs.dof_of[v]);
}

SubdomainMask BasisBuilder::support(int node, int layers) const {
    return layer_region(*disc_->coarse, *disc_->fine, node, layers);
}

const BasisBuilder::GlobalSystem& BasisBuilder::global_system() const {
    std::call_once(global_once_, [this] {
        auto sys = std::make_unique<GlobalSystem>();
        const std::size_t n = disc_->dofs.size();
        std::vector<char> constrained(n, 0);
        for (int d : coarse_dof_) constrained[static_cast<std::size_t>(d)] = 1;
        sys->free_position.assign(n, -1);
        for (std::size_t d = 0; d < n; ++d) {
            if (constrained[d]) continue;
            sys->free_position[d] = static_cast<int>(sys->free_dofs.size());
            sys->free_dofs.push_back(static_cast<int>(d));
        }
        if (!sys->free_dofs.empty()) {
            sys->solver.factorize(principal_submatrix(normal_, sys->free_dofs), options_);
        }
        global_ = std::move(sys);
    });
    return *global_;
}

BasisFunction BasisBuilder::solve_basis(int node, const LayerSetting& layers) const {
    if (!layers) return solve_basis(node, static_cast<const SubdomainMask*>(nullptr));
    const SubdomainMask mask = support(node, *layers);
    return solve_basis(node, &mask);
}

BasisFunction BasisBuilder::solve_basis(int node, const SubdomainMask* mask) const {
    const auto& fine = *disc_->fine;
    if (node < 0 || static_cast<std::size_t>(node) >= coarse_dof_.size()) {
        throw IndexError("coarse node index " + std::to_string(node) + " out of range [0, " +
                         std::to_string(coarse_dof_.size()) + ")");
    }
    const LayerSetting layers = mask ? LayerSetting(mask->layers) : LayerSetting{};
    if (mask == nullptr || mask->covers_domain(fine)) {
        const GlobalSystem& sys = global_system();
        return solve_with(node, sys.free_dofs, sys.free_position, sys.solver, fine.interior_nodes(), layers);
    }

    if (!std::binary_search(mask->local_coarse_nodes.begin(), mask->local_coarse_nodes.end(), node)) {
        throw StructuralError("coarse node " + std::to_string(node) + " does not lie inside the given support");
    }
    const auto& dof_of = disc_->dofs.dof_of;
    std::vector<char> constrained(disc_->dofs.size(), 0);
    for (int k : mask->local_coarse_nodes) constrained[static_cast<std::size_t>(coarse_dof_[k])] = 1;
    std::vector<int> free_dofs;
    free_dofs.reserve(mask->fine_nodes.size());
    for (int v : mask->fine_nodes) {
        const int d = dof_of[v];
        if (!constrained[static_cast<std::size_t>(d)]) free_dofs.push_back(d);
    }
    if (free_dofs.empty()) {
        throw DegenerateSupportError("support of coarse node " + std::to_string(node) + " with " +
                                     std::to_string(mask->layers) + " layer(s) has no free fine nodes");
    }
    std::vector<int> position(disc_->dofs.size(), -1);
    for (std::size_t k = 0; k < free_dofs.size(); ++k) position[static_cast<std::size_t>(free_dofs[k])] = static_cast<int>(k);
    SpdSolver solver(principal_submatrix(normal_, free_dofs), options_);
    return solve_with(node, free_dofs, position, solver, mask->fine_nodes, layers);
}

BasisFunction BasisBuilder::solve_with(int node, const std::vector<int>& free_dofs,
                                       const std::vector<int>& free_position, const SpdSolver& solver,
                                       const std::vector<int>& support_vertices,
                                       const LayerSetting& layers) const {
    const int center = coarse_dof_[static_cast<std::size_t>(node)];
    Vector rhs = Vector::Zero(static_cast<Eigen::Index>(free_dofs.size()));
    for (SparseMatrix::InnerIterator it(normal_, center); it; ++it) {
        const int pos = free_position[static_cast<std::size_t>(it.col())];
        if (pos >= 0) rhs[pos] = -it.value();
    }

    BasisFunction f;
    f.node = node;
    f.layers = layers;
    Vector free_values;
    if (!free_dofs.empty()) free_values = solver.solve(rhs, &f.report);

    const auto& dofs = disc_->dofs;
    Vector interior = Vector::Zero(static_cast<Eigen::Index>(dofs.size()));
    interior[center] = 1.0;
    for (std::size_t k = 0; k < free_dofs.size(); ++k) interior[free_dofs[k]] = free_values[static_cast<Eigen::Index>(k)];

    f.support = support_vertices;
    f.values.resize(support_vertices.size());
    for (std::size_t k = 0; k < support_vertices.size(); ++k) {
        f.values[k] = interior[dofs.dof_of[support_vertices[k]]];
    }
    f.objective = disc_->fv.v_norm_squared(f.dense(disc_->fine->num_vertices()));
    return f;
}

RpsBasis BasisBuilder::solve_all(const LayerSetting& layers, int workers) const {
    const std::size_t n = coarse_dof_.size();
    RpsBasis basis;
    basis.disc = disc_;
    basis.layers = layers;
    basis.functions.resize(n);

    if (!layers) global_system();
    const auto threads = static_cast<std::size_t>(std::clamp(workers, 1, 256));
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> failures(n);
    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                basis.functions[i] = solve_basis(static_cast<int>(i), layers);
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };
    if (threads == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!failures[i]) continue;
        try {
            std::rethrow_exception(failures[i]);
        } catch (Error& e) {
            e.add_context("basis node " + std::to_string(i));
            throw;
        }
    }
    return basis;
}

DenseMatrix gram(const RpsBasis& basis) {
    const auto& disc = *basis.disc;
    const auto& fv = disc.fv;
    const std::size_t nv = disc.fine->num_vertices();
    const auto n = static_cast<Eigen::Index>(basis.size());
    DenseMatrix g(static_cast<Eigen::Index>(disc.dofs.size()), n);
    for (Eigen::Index j = 0; j < n; ++j) {
        const Vector gj = fv.apply(basis.functions[static_cast<std::size_t>(j)].dense(nv));
        g.col(j) = disc.dofs.restrict(gj);
    }
    DenseMatrix p = g.transpose() * fv.interior_volumes.asDiagonal() * g;
    return 0.5 * (p + p.transpose());
}

double condition_number(const DenseMatrix& p) {
    Eigen::SelfAdjointEigenSolver<DenseMatrix> eig(p, Eigen::EigenvaluesOnly);
    const auto& ev = eig.eigenvalues();
    if (ev.size() == 0) return 1.0;
    if (ev[0] <= 0.0) return std::numeric_limits<double>::infinity();
    return ev[ev.size() - 1] / ev[0];
}

DenseMatrix theta(const DenseMatrix& p) {
    if (p.rows() != p.cols()) throw StructuralError("Gram matrix must be square");
    const double cond = condition_number(p);
    if (!(cond < 1e15)) throw ConditioningError("Gram matrix is numerically singular", cond);
    Eigen::LLT<DenseMatrix> llt(p);
    if (llt.info() != Eigen::Success) throw ConditioningError("Gram matrix Cholesky failed", cond);
    DenseMatrix t = llt.solve(DenseMatrix::Identity(p.rows(), p.cols()));
    // Residuals in extended precision; a double-precision product of a matrix
    // this badly scaled loses the correction in rounding.
    for (int step = 0; step < 2; ++step) {
        using Extended = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
        const Extended r = Extended::Identity(p.rows(), p.cols()) - p.cast<long double>() * t.cast<long double>();
        t += llt.solve(r.cast<double>());
    }
    return t;
}

double inverse_residual(const DenseMatrix& p, const DenseMatrix& t) {
    using Extended = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
    if (p.cols() != t.rows()) throw StructuralError("inverse_residual: size mismatch");
    const Extended r = p.cast<long double>() * t.cast<long double>() - Extended::Identity(p.rows(), t.cols());
    return r.size() ? static_cast<double>(r.cwiseAbs().maxCoeff()) : 0.0;
}

}  // namespace rps
