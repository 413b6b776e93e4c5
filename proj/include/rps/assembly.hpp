#pragma once

#include <array>
#include <functional>
#include <vector>

#include "rps/coeff.hpp"
#include "rps/linalg.hpp"
#include "rps/mesh.hpp"

namespace rps {

/// Numbering of the interior (non-Dirichlet) vertices.
struct InteriorDofs {
    std::vector<int> vertex_of;  ///< dof -> vertex
    std::vector<int> dof_of;     ///< vertex -> dof, -1 on the boundary

    explicit InteriorDofs(const TriMesh& mesh);
    InteriorDofs() = default;

    std::size_t size() const { return vertex_of.size(); }
    Vector restrict(const Vector& full) const;
    Vector extend(const Vector& interior) const;
};

enum class BoundaryRows { eliminate, keep };
enum class MassKind { consistent, lumped };

using ScalarFunction = std::function<double(const Point&)>;

/// Gradients of the P1 hat functions on cell c (second component 0 in 1D).
std::array<Point, 3> cell_gradients(const TriMesh& mesh, std::size_t c);

SparseMatrix stiffness(const TriMesh& fine, const CellCoeffs& a,
                       BoundaryRows rows = BoundaryRows::eliminate);

SparseMatrix mass(const TriMesh& fine, MassKind kind = MassKind::consistent,
                  BoundaryRows rows = BoundaryRows::eliminate);

/// Dual-cell finite-volume map u -> g_u with g_u(y_i) = |V_i|^-1 * integral of grad(1_{V_i}) a grad u.
///
/// The distributional integral is evaluated as minus the outward flux of
/// a grad u over the boundary of V_i, so g_u approximates -div(a grad u).
struct FvOperator {
    SparseMatrix divergence;      ///< all vertices x all vertices
    Vector volumes;               ///< |V_i| per vertex
    Vector boundary_flux_weights; ///< u -> sum over domain-boundary segments of |s| a grad u . n
    InteriorDofs dofs;

    SparseMatrix interior_divergence;  ///< interior rows x interior columns
    Vector interior_volumes;

    /// g_u at every vertex for a full nodal vector.
    Vector apply(const Vector& u) const { return divergence * u; }
    /// Sum over interior dual cells of |V| g_u^2; boundary vertices carry no V-norm row.
    double v_norm_squared(const Vector& u) const;
    double v_inner(const Vector& u, const Vector& v) const;
    double boundary_flux(const Vector& u) const { return boundary_flux_weights.dot(u); }
};

FvOperator fv_divergence(const TriMesh& fine, const CellCoeffs& a, const DualMesh& dual);

/// Vertex values of g.
Vector nodal_values(const TriMesh& mesh, const ScalarFunction& g);

/// Consistent P1 load b = M g_nodal.
Vector load_vector(const TriMesh& fine, const Vector& nodal_g,
                   BoundaryRows rows = BoundaryRows::eliminate);
Vector load_vector(const TriMesh& fine, const ScalarFunction& g,
                   BoundaryRows rows = BoundaryRows::eliminate);

/// Everything assembled once on a (coarse, fine, coefficient) triple.
struct Discretization {
    std::shared_ptr<const TriMesh> coarse;
    std::shared_ptr<const TriMesh> fine;
    CoeffSpec spec;
    CellCoeffs coeffs;
    DualMesh dual;
    FvOperator fv;
    InteriorDofs dofs;
    SparseMatrix stiffness;          ///< a-weighted, interior
    SparseMatrix laplacian;          ///< a = 1, interior (H1 seminorm)
    SparseMatrix mass;               ///< consistent, interior
    SparseMatrix full_mass;          ///< consistent, all vertices
    SparseMatrix full_stiffness;     ///< a-weighted, all vertices
    SparseMatrix full_laplacian;     ///< a = 1, all vertices

    static std::shared_ptr<const Discretization> build(int dim, int coarse_divisions, int refinements,
                                                       const CoeffSpec& spec);
};

}  // namespace rps
