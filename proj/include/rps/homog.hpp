#pragma once

#include <map>
#include <string>

#include "rps/assembly.hpp"
#include "rps/basis.hpp"

namespace rps {

enum class Provenance { fine_reference, coarse_global, coarse_localized, interpolant, recovery };

const char* to_string(Provenance p);

/// Fine nodal vector (all vertices, zero on the boundary) plus where it came from.
struct Solution {
    Vector values;
    Provenance provenance = Provenance::fine_reference;
    LayerSetting layers;
};

/// Galerkin system on the span of a basis.
struct CoarseSystem {
    DenseMatrix stiffness;  ///< S_ij = phi_i^T A phi_j
    Vector load;            ///< b_i = phi_i^T b
    Vector coefficients;    ///< S c = b
};

/// Basis vectors restricted to interior dofs, one sparse column per coarse node.
SparseMatrix interior_columns(const RpsBasis& basis);

Solution solve_fine(const Discretization& disc, const ScalarFunction& g, const SolverOptions& options = {});
/// Fine solve for a precomputed interior load vector.
Solution solve_fine_load(const Discretization& disc, const Vector& interior_load,
                         const SolverOptions& options = {});

std::pair<CoarseSystem, Solution> coarse_solve(const RpsBasis& basis, const ScalarFunction& g);
std::pair<CoarseSystem, Solution> coarse_solve_load(const RpsBasis& basis, const Vector& interior_load);

/// sum_i values[i] phi_i.
Solution interpolate(const RpsBasis& basis, const Vector& nodal_values);

/// Values of a fine nodal vector at the coarse nodes.
Vector coarse_samples(const Discretization& disc, const Vector& fine_values);

struct Recovery {
    Solution solution;
    double mesh_norm = 0.0;  ///< measured H
    double rhs_bound = 0.0;  ///< user-supplied M >= ||g||_L2
    std::string bound;       ///< "<= C * H * M" with the measured numbers substituted
};

/// Reconstructs sum_i u(x_i) phi_i from point measurements keyed by coarse-node index.
Recovery recover(const RpsBasis& basis, const std::map<int, double>& measurements, double rhs_bound);

/// Computable locality surrogates of a localized element: its V-norm and its
/// L2 norm on the outermost coarse layer of its support.
struct LocalityDiagnostics {
    double v_norm = 0.0;
    double outer_layer_l2 = 0.0;
};

LocalityDiagnostics locality_diagnostics(const BasisBuilder& builder, const BasisFunction& f);

}  // namespace rps
