#include "rps/assembly.hpp"

#include <cmath>

#include "rps/errors.hpp"

namespace rps {

namespace {

using Triplets = std::vector<Eigen::Triplet<double>>;

SparseMatrix from_triplets(std::size_t n, const Triplets& trip) {
    SparseMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    m.setFromTriplets(trip.begin(), trip.end());
    m.makeCompressed();
    return m;
}

SparseMatrix eliminate_boundary(const SparseMatrix& full, const TriMesh& mesh) {
    const InteriorDofs dofs(mesh);
    return principal_submatrix(full, dofs.vertex_of);
}

double dot(const Point& a, const Point& b) { return a[0] * b[0] + a[1] * b[1]; }

}  // namespace

InteriorDofs::InteriorDofs(const TriMesh& mesh)
    : vertex_of(mesh.interior_nodes()), dof_of(mesh.num_vertices(), -1) {
    for (std::size_t k = 0; k < vertex_of.size(); ++k) dof_of[vertex_of[k]] = static_cast<int>(k);
}

Vector InteriorDofs::restrict(const Vector& full) const {
    if (static_cast<std::size_t>(full.size()) != dof_of.size()) {
        throw StructuralError("nodal vector length does not match the mesh");
    }
    Vector out(static_cast<Eigen::Index>(vertex_of.size()));
    for (std::size_t k = 0; k < vertex_of.size(); ++k) out[static_cast<Eigen::Index>(k)] = full[vertex_of[k]];
    return out;
}

Vector InteriorDofs::extend(const Vector& interior) const {
    if (static_cast<std::size_t>(interior.size()) != vertex_of.size()) {
        throw StructuralError("interior vector length does not match the dof count");
    }
    Vector out = Vector::Zero(static_cast<Eigen::Index>(dof_of.size()));
    for (std::size_t k = 0; k < vertex_of.size(); ++k) out[vertex_of[k]] = interior[static_cast<Eigen::Index>(k)];
    return out;
}

std::array<Point, 3> cell_gradients(const TriMesh& mesh, std::size_t c) {
    const auto v = mesh.cell(c);
    if (mesh.dim() == 1) {
        const double h = mesh.vertex(v[1])[0] - mesh.vertex(v[0])[0];
        return {Point{-1.0 / h, 0.0}, Point{1.0 / h, 0.0}, Point{0.0, 0.0}};
    }
    const double two_area = 2.0 * mesh.cell_measure(c);
    std::array<Point, 3> grad{};
    for (int k = 0; k < 3; ++k) {
        const Point& pj = mesh.vertex(v[(k + 1) % 3]);
        const Point& pk = mesh.vertex(v[(k + 2) % 3]);
        grad[k] = {(pj[1] - pk[1]) / two_area, (pk[0] - pj[0]) / two_area};
    }
    return grad;
}

SparseMatrix stiffness(const TriMesh& fine, const CellCoeffs& a, BoundaryRows rows) {
    if (a.values.size() != fine.num_cells()) {
        throw StructuralError("coefficient field was sampled on a different mesh");
    }
    const int k = fine.vertices_per_cell();
    Triplets trip;
    trip.reserve(fine.num_cells() * static_cast<std::size_t>(k * k));
    for (std::size_t c = 0; c < fine.num_cells(); ++c) {
        const auto v = fine.cell(c);
        const auto grad = cell_gradients(fine, c);
        const double w = a.values[c] * fine.cell_measure(c);
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) trip.emplace_back(v[i], v[j], w * dot(grad[i], grad[j]));
        }
    }
    SparseMatrix full = from_triplets(fine.num_vertices(), trip);
    return rows == BoundaryRows::keep ? full : eliminate_boundary(full, fine);
}

SparseMatrix mass(const TriMesh& fine, MassKind kind, BoundaryRows rows) {
    const int k = fine.vertices_per_cell();
    Triplets trip;
    trip.reserve(fine.num_cells() * static_cast<std::size_t>(k * k));
    for (std::size_t c = 0; c < fine.num_cells(); ++c) {
        const auto v = fine.cell(c);
        const double m = fine.cell_measure(c);
        // P1 element mass: |T| (1 + delta_ij) / ((d + 1)(d + 2)).
        const double off = m / ((k) * (k + 1));
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) {
                const double val = i == j ? 2.0 * off : off;
                if (kind == MassKind::lumped) {
                    trip.emplace_back(v[i], v[i], val);
                } else {
                    trip.emplace_back(v[i], v[j], val);
                }
            }
        }
    }
    SparseMatrix full = from_triplets(fine.num_vertices(), trip);
    return rows == BoundaryRows::keep ? full : eliminate_boundary(full, fine);
}

double FvOperator::v_norm_squared(const Vector& u) const {
    const Vector g = apply(u);
    double sum = 0.0;
    for (int v : dofs.vertex_of) sum += volumes[v] * g[v] * g[v];
    return sum;
}

double FvOperator::v_inner(const Vector& u, const Vector& w) const {
    const Vector gu = apply(u);
    const Vector gw = apply(w);
    double sum = 0.0;
    for (int v : dofs.vertex_of) sum += volumes[v] * gu[v] * gw[v];
    return sum;
}

FvOperator fv_divergence(const TriMesh& fine, const CellCoeffs& a, const DualMesh& dual) {
    const std::size_t nv = fine.num_vertices();
    if (dual.volumes.size() != nv || dual.segment_offsets.size() != nv + 1) {
        throw StructuralError("dual mesh does not match the fine mesh");
    }
    if (a.values.size() != fine.num_cells()) {
        throw StructuralError("coefficient field was sampled on a different mesh");
    }
    FvOperator op;
    op.volumes = Eigen::Map<const Vector>(dual.volumes.data(), static_cast<Eigen::Index>(nv));
    op.boundary_flux_weights = Vector::Zero(static_cast<Eigen::Index>(nv));
    op.dofs = InteriorDofs(fine);

    Triplets trip;
    trip.reserve(dual.segments.size() * 3);
    for (std::size_t owner = 0; owner < nv; ++owner) {
        const double inv_vol = 1.0 / dual.volumes[owner];
        for (const DualSegment& s : dual.boundary_of(owner)) {
            if (s.cell < 0 || static_cast<std::size_t>(s.cell) >= fine.num_cells()) {
                throw StructuralError("dual segment references a cell outside the fine mesh");
            }
            const auto cell = fine.cell(static_cast<std::size_t>(s.cell));
            const auto grad = cell_gradients(fine, static_cast<std::size_t>(s.cell));
            const double flux_scale = s.length * a.values[static_cast<std::size_t>(s.cell)];
            for (std::size_t q = 0; q < cell.size(); ++q) {
                const double flux = flux_scale * dot(s.normal, grad[q]);
                trip.emplace_back(static_cast<int>(owner), cell[q], -inv_vol * flux);
                if (s.neighbor < 0) op.boundary_flux_weights[cell[q]] += flux;
            }
        }
    }
    op.divergence = from_triplets(nv, trip);
    op.interior_divergence = principal_submatrix(op.divergence, op.dofs.vertex_of);
    op.interior_volumes = op.dofs.restrict(op.volumes);
    return op;
}

Vector nodal_values(const TriMesh& mesh, const ScalarFunction& g) {
    Vector out(static_cast<Eigen::Index>(mesh.num_vertices()));
    for (std::size_t v = 0; v < mesh.num_vertices(); ++v) out[static_cast<Eigen::Index>(v)] = g(mesh.vertex(v));
    return out;
}

Vector load_vector(const TriMesh& fine, const Vector& nodal_g, BoundaryRows rows) {
    if (static_cast<std::size_t>(nodal_g.size()) != fine.num_vertices()) {
        throw StructuralError("nodal right-hand side length does not match the mesh");
    }
    const Vector full = mass(fine, MassKind::consistent, BoundaryRows::keep) * nodal_g;
    return rows == BoundaryRows::keep ? full : InteriorDofs(fine).restrict(full);
}

Vector load_vector(const TriMesh& fine, const ScalarFunction& g, BoundaryRows rows) {
    return load_vector(fine, nodal_values(fine, g), rows);
}

std::shared_ptr<const Discretization> Discretization::build(int dim, int coarse_divisions, int refinements,
                                                            const CoeffSpec& spec) {
    auto d = std::make_shared<Discretization>();
    d->coarse = std::make_shared<const TriMesh>(build_structured(dim, coarse_divisions));
    d->fine = std::make_shared<const TriMesh>(refine(*d->coarse, refinements));
    d->spec = spec;
    d->coeffs = sample(spec, *d->fine);
    d->dual = dual_cells(*d->fine);
    d->fv = fv_divergence(*d->fine, d->coeffs, d->dual);
    d->dofs = InteriorDofs(*d->fine);
    d->full_stiffness = rps::stiffness(*d->fine, d->coeffs, BoundaryRows::keep);
    d->stiffness = principal_submatrix(d->full_stiffness, d->dofs.vertex_of);
    CellCoeffs unit{std::vector<double>(d->fine->num_cells(), 1.0), 1.0, 1.0};
    d->full_laplacian = rps::stiffness(*d->fine, unit, BoundaryRows::keep);
    d->laplacian = principal_submatrix(d->full_laplacian, d->dofs.vertex_of);
    d->full_mass = rps::mass(*d->fine, MassKind::consistent, BoundaryRows::keep);
    d->mass = principal_submatrix(d->full_mass, d->dofs.vertex_of);
    return d;
}

}  // namespace rps
