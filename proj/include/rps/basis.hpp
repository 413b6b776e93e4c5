#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "rps/assembly.hpp"
#include "rps/linalg.hpp"
#include "rps/mesh.hpp"

namespace rps {

/// Number of coarse layers around each node; empty means the global (unlocalized) problem.
using LayerSetting = std::optional<int>;

std::string layer_label(const LayerSetting& layers);

/// One rough polyharmonic spline, stored on its support only.
struct BasisFunction {
    int node = -1;  ///< coarse-node index
    LayerSetting layers;
    std::vector<int> support;    ///< sorted fine vertices where the value may be nonzero
    std::vector<double> values;  ///< one value per support vertex
    double objective = 0.0;      ///< attained discrete V-norm squared
    SolveReport report;

    Vector dense(std::size_t num_vertices) const;
    double at(int vertex) const;
};

struct RpsBasis {
    std::shared_ptr<const Discretization> disc;
    LayerSetting layers;
    std::vector<BasisFunction> functions;

    std::size_t size() const { return functions.size(); }
    std::size_t stored_nonzeros() const;
    /// Fine nodal vectors as columns of a dense (vertices x N) matrix.
    DenseMatrix columns() const;
};

/// Solves the constrained V-norm minimization for each coarse node.
///
/// Constraints are eliminated: the coarse-node values inside the support are
/// fixed to the Kronecker data, everything outside the support and on the
/// domain boundary is zero, and the remaining fine values solve the reduced
/// normal system (B^T W B) restricted to the free nodes. Instances are safe
/// to share across threads; the global factorization is built once on first use.
class BasisBuilder {
public:
    BasisBuilder(std::shared_ptr<const Discretization> disc, SolverOptions options = {});

    const Discretization& disc() const { return *disc_; }
    const SolverOptions& options() const { return options_; }
    /// B^T W B on interior dofs, with W the dual volumes of interior cells.
    const SparseMatrix& normal_matrix() const { return normal_; }

    SubdomainMask support(int node, int layers) const;

    BasisFunction solve_basis(int node, const LayerSetting& layers) const;
    /// `mask == nullptr` solves the global problem.
    BasisFunction solve_basis(int node, const SubdomainMask* mask) const;

    /// All coarse nodes, `workers` threads; the result does not depend on the worker count.
    RpsBasis solve_all(const LayerSetting& layers, int workers = 1) const;

private:
    struct GlobalSystem {
        std::vector<int> free_dofs;
        std::vector<int> free_position;  ///< dof -> position in free_dofs, -1 if constrained
        SpdSolver solver;
    };
    const GlobalSystem& global_system() const;
    BasisFunction solve_with(int node, const std::vector<int>& free_dofs,
                             const std::vector<int>& free_position, const SpdSolver& solver,
                             const std::vector<int>& support_vertices, const LayerSetting& layers) const;

    std::shared_ptr<const Discretization> disc_;
    SolverOptions options_;
    SparseMatrix normal_;
    std::vector<int> coarse_dof_;
    mutable std::once_flag global_once_;
    mutable std::unique_ptr<GlobalSystem> global_;
};

/// P_ij = sum over interior dual cells of |V| g_phi_i g_phi_j.
DenseMatrix gram(const RpsBasis& basis);

/// Theta = P^-1 via dense Cholesky plus two refinement steps. Throws
/// ConditioningError when P is not numerically positive definite.
DenseMatrix theta(const DenseMatrix& p);

/// max |P T - I| with the product accumulated in extended precision.
double inverse_residual(const DenseMatrix& p, const DenseMatrix& t);

/// Largest over smallest eigenvalue of a symmetric matrix.
double condition_number(const DenseMatrix& p);

}  // namespace rps
