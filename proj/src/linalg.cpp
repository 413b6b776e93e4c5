#include "rps/linalg.hpp"

#include <Eigen/SparseCholesky>
#include <cmath>
#include <vector>

#include "rps/errors.hpp"

namespace rps {

SolverMethod parse_solver_method(const std::string& name) {
    if (name == "direct") return SolverMethod::direct;
    if (name == "pcg") return SolverMethod::pcg;
    if (name == "dense") return SolverMethod::dense;
    throw ConfigError("solver.method must be one of direct|pcg|dense, got '" + name + "'");
}

const char* to_string(SolverMethod method) {
    switch (method) {
        case SolverMethod::direct: return "direct";
        case SolverMethod::pcg: return "pcg";
        case SolverMethod::dense: return "dense";
    }
    return "?";
}

int default_iteration_cap(std::size_t unknowns) {
    return static_cast<int>(50.0 * std::sqrt(static_cast<double>(unknowns))) + 1000;
}

SolveReport pcg(const SparseMatrix& a, const Vector& b, Vector& x, double tol, int max_iter) {
    SolveReport report{SolverMethod::pcg, 0, 0.0};
    const double bnorm = b.norm();
    if (x.size() != b.size()) x = Vector::Zero(b.size());
    if (bnorm == 0.0) {
        x.setZero();
        return report;
    }
    const Vector inv_diag = a.diagonal().cwiseInverse();
    Vector r = b - a * x;
    Vector z = inv_diag.cwiseProduct(r);
    Vector p = z;
    Vector q(b.size());
    double rz = r.dot(z);
    double rel = r.norm() / bnorm;
    const int cap = max_iter > 0 ? max_iter : default_iteration_cap(static_cast<std::size_t>(b.size()));
    int it = 0;
    while (rel > tol && it < cap) {
        ++it;
        q.noalias() = a * p;
        const double alpha = rz / p.dot(q);
        x += alpha * p;
        r -= alpha * q;
        z = inv_diag.cwiseProduct(r);
        const double rz_next = r.dot(z);
        p = z + (rz_next / rz) * p;
        rz = rz_next;
        rel = r.norm() / bnorm;
    }
    report.iterations = it;
    report.relative_residual = (b - a * x).norm() / bnorm;
    if (report.relative_residual > tol) {
        throw SolverError("conjugate gradients did not converge in " + std::to_string(it) + " iterations",
                          report.relative_residual);
    }
    return report;
}

struct SpdSolver::Impl {
    SolverOptions options;
    SparseMatrix matrix;
    Eigen::SimplicialLLT<Eigen::SparseMatrix<double>, Eigen::Lower, Eigen::AMDOrdering<int>> sparse_llt;
    Eigen::LLT<DenseMatrix> dense_llt;
};

SpdSolver::SpdSolver() : impl_(std::make_unique<Impl>()) {}
SpdSolver::SpdSolver(const SparseMatrix& a, const SolverOptions& options) : SpdSolver() {
    factorize(a, options);
}
SpdSolver::~SpdSolver() = default;
SpdSolver::SpdSolver(SpdSolver&&) noexcept = default;
SpdSolver& SpdSolver::operator=(SpdSolver&&) noexcept = default;

std::size_t SpdSolver::size() const { return static_cast<std::size_t>(impl_->matrix.rows()); }

void SpdSolver::factorize(const SparseMatrix& a, const SolverOptions& options) {
    impl_->options = options;
    impl_->matrix = a;
    if (a.rows() == 0) return;
    switch (options.method) {
        case SolverMethod::direct: {
            const Eigen::SparseMatrix<double> col = a;
            impl_->sparse_llt.compute(col);
            if (impl_->sparse_llt.info() != Eigen::Success) {
                throw SolverError("sparse Cholesky factorization failed (matrix not SPD?)", 1.0);
            }
            break;
        }
        case SolverMethod::dense: {
            impl_->dense_llt.compute(DenseMatrix(a));
            if (impl_->dense_llt.info() != Eigen::Success) {
                throw SolverError("dense Cholesky factorization failed (matrix not SPD?)", 1.0);
            }
            break;
        }
        case SolverMethod::pcg: break;
    }
}

Vector SpdSolver::solve(const Vector& b, SolveReport* report) const {
    SolveReport rep{impl_->options.method, 0, 0.0};
    const auto& a = impl_->matrix;
    if (b.size() != a.rows()) throw StructuralError("right-hand side size does not match system size");
    Vector x = Vector::Zero(b.size());
    const double bnorm = b.norm();
    if (a.rows() == 0 || bnorm == 0.0) {
        if (report) *report = rep;
        return x;
    }
    const double tol = impl_->options.tol;
    if (impl_->options.method == SolverMethod::pcg) {
        rep = pcg(a, b, x, tol, impl_->options.max_iter);
    } else {
        auto apply_inverse = [&](const Vector& rhs) -> Vector {
            if (impl_->options.method == SolverMethod::direct) return impl_->sparse_llt.solve(rhs);
            return impl_->dense_llt.solve(rhs);
        };
        x = apply_inverse(b);
        Vector r = b - a * x;
        rep.relative_residual = r.norm() / bnorm;
        for (int step = 0; step < 3 && rep.relative_residual > tol; ++step) {
            x += apply_inverse(r);
            r = b - a * x;
            rep.relative_residual = r.norm() / bnorm;
            ++rep.iterations;
        }
        if (rep.relative_residual > tol) {
            throw SolverError(std::string(to_string(impl_->options.method)) +
                                  " solve missed the residual tolerance",
                              rep.relative_residual);
        }
    }
    if (report) *report = rep;
    return x;
}

SparseMatrix submatrix(const SparseMatrix& a, std::span<const int> rows, std::span<const int> cols) {
    std::vector<int> col_map(static_cast<std::size_t>(a.cols()), -1);
    for (std::size_t j = 0; j < cols.size(); ++j) col_map[static_cast<std::size_t>(cols[j])] = static_cast<int>(j);
    std::vector<Eigen::Triplet<double>> trip;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (SparseMatrix::InnerIterator it(a, rows[i]); it; ++it) {
            const int j = col_map[static_cast<std::size_t>(it.col())];
            if (j >= 0) trip.emplace_back(static_cast<int>(i), j, it.value());
        }
    }
    SparseMatrix out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    out.setFromTriplets(trip.begin(), trip.end());
    out.makeCompressed();
    return out;
}

SparseMatrix principal_submatrix(const SparseMatrix& a, std::span<const int> index) {
    return submatrix(a, index, index);
}

double max_asymmetry(const SparseMatrix& a) {
    const SparseMatrix t = a.transpose();
    const SparseMatrix d = a - t;
    double worst = 0.0;
    for (int k = 0; k < d.outerSize(); ++k) {
        for (SparseMatrix::InnerIterator it(d, k); it; ++it) worst = std::max(worst, std::abs(it.value()));
    }
    return worst;
}

}  // namespace rps
