#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <memory>
#include <span>
#include <string>

namespace rps {

/// Row-compressed sparse matrix; after assembly entries are unique and column-sorted per row.
using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor, int>;
using Vector = Eigen::VectorXd;
using DenseMatrix = Eigen::MatrixXd;

enum class SolverMethod {
    direct,  ///< sparse Cholesky (default)
    pcg,     ///< Jacobi-preconditioned conjugate gradients
    dense,   ///< dense Cholesky
};

SolverMethod parse_solver_method(const std::string& name);
const char* to_string(SolverMethod method);

struct SolverOptions {
    SolverMethod method = SolverMethod::direct;
    double tol = 1e-10;
    /// 0 selects 50 * sqrt(n) + 1000.
    int max_iter = 0;
};

struct SolveReport {
    SolverMethod method = SolverMethod::direct;
    int iterations = 0;
    double relative_residual = 0.0;
};

int default_iteration_cap(std::size_t unknowns);

/// Jacobi-preconditioned CG on an SPD matrix; x holds the initial guess on entry.
/// Throws SolverError when the relative residual stays above tol after the cap.
SolveReport pcg(const SparseMatrix& a, const Vector& b, Vector& x, double tol, int max_iter);

/// Factor-once, solve-many SPD solver. Direct solves run up to three steps of
/// iterative refinement against the original matrix.
class SpdSolver {
public:
    SpdSolver();
    SpdSolver(const SparseMatrix& a, const SolverOptions& options);
    ~SpdSolver();
    SpdSolver(SpdSolver&&) noexcept;
    SpdSolver& operator=(SpdSolver&&) noexcept;

    void factorize(const SparseMatrix& a, const SolverOptions& options);
    /// Solves a x = b and throws SolverError when the residual target is missed.
    Vector solve(const Vector& b, SolveReport* report = nullptr) const;
    std::size_t size() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Rows and columns `index` of a square matrix, in the given order.
SparseMatrix principal_submatrix(const SparseMatrix& a, std::span<const int> index);
/// Rows `rows` and columns `cols`.
SparseMatrix submatrix(const SparseMatrix& a, std::span<const int> rows, std::span<const int> cols);

double max_asymmetry(const SparseMatrix& a);

}  // namespace rps
