#pragma once

// Dense saddle-point reference for one basis element: minimize the discrete
// V-norm over all fine nodal vectors with explicit Lagrange multipliers for
// every pinned value (domain boundary, coarse nodes, outside the support).

#include <Eigen/Dense>
#include <algorithm>
#include <vector>

#include "rps/assembly.hpp"
#include "rps/mesh.hpp"

namespace oracle {

inline Eigen::VectorXd kkt_basis(const rps::Discretization& disc, int node, const rps::SubdomainMask* mask) {
    const rps::TriMesh& fine = *disc.fine;
    const int nv = static_cast<int>(fine.num_vertices());
    const Eigen::MatrixXd b(disc.fv.divergence);

    // objective u^T Q u, Q = sum over interior rows r of |V_r| b_r^T b_r
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(nv, nv);
    for (int r : fine.interior_nodes()) q += disc.fv.volumes[r] * b.row(r).transpose() * b.row(r);

    const auto& coarse_nodes = fine.coarse_nodes();
    const int center = coarse_nodes[node];
    std::vector<int> free;
    for (int v : fine.interior_nodes()) {
        const bool is_coarse = std::find(coarse_nodes.begin(), coarse_nodes.end(), v) != coarse_nodes.end();
        const bool inside = !mask || std::binary_search(mask->fine_nodes.begin(), mask->fine_nodes.end(), v);
        if (!is_coarse && inside) free.push_back(v);
    }
    std::vector<int> pinned;
    for (int v = 0; v < nv; ++v) {
        if (!std::binary_search(free.begin(), free.end(), v)) pinned.push_back(v);
    }
    const int m = static_cast<int>(pinned.size());
    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(nv + m, nv + m);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(nv + m);
    kkt.topLeftCorner(nv, nv) = 2.0 * q;
    for (int k = 0; k < m; ++k) {
        kkt(nv + k, pinned[k]) = 1.0;
        kkt(pinned[k], nv + k) = 1.0;
        rhs[nv + k] = pinned[k] == center ? 1.0 : 0.0;
    }
    const Eigen::VectorXd sol = kkt.fullPivLu().solve(rhs);
    return sol.head(nv);
}

}  // namespace oracle
