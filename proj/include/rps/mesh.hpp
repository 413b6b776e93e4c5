#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace rps {

/// Point in [0,1]^d. In 1D the second coordinate is always 0.
using Point = std::array<double, 2>;

double distance(const Point& a, const Point& b);

/// Simplicial mesh of the unit interval or unit square.
///
/// Cells are stored flat with `dim + 1` vertex indices each; 2D triangles are
/// counter-clockwise. Refinement keeps every parent vertex at the same index,
/// so a coarse node index addresses the same point on every level.
class TriMesh {
public:
    int dim() const { return dim_; }
    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_cells() const { return cells_.size() / static_cast<std::size_t>(dim_ + 1); }
    int vertices_per_cell() const { return dim_ + 1; }

    const std::vector<Point>& vertices() const { return vertices_; }
    const Point& vertex(std::size_t v) const { return vertices_[v]; }
    std::span<const int> cell(std::size_t c) const {
        const auto k = static_cast<std::size_t>(dim_ + 1);
        return {cells_.data() + c * k, k};
    }
    const std::vector<int>& cell_data() const { return cells_; }

    bool is_boundary(std::size_t v) const { return boundary_flag_[v] != 0; }
    const std::vector<int>& boundary_nodes() const { return boundary_nodes_; }
    const std::vector<int>& interior_nodes() const { return interior_nodes_; }

    /// Vertex indices of the interpolation nodes x_i (interior only).
    const std::vector<int>& coarse_nodes() const { return coarse_nodes_; }
    std::vector<Point> coarse_points() const;

    /// Index of the cell of the root (unrefined) mesh that contains each cell.
    const std::vector<int>& root_cell() const { return root_cell_; }
    const std::shared_ptr<const TriMesh>& parent() const { return parent_; }

    /// Divisions per axis of the root grid and the number of refinements applied.
    int root_divisions() const { return root_divisions_; }
    int level() const { return level_; }
    /// Grid spacing of this level, 1 / (root_divisions * 2^level).
    double spacing() const;

    double cell_measure(std::size_t c) const;
    Point barycenter(std::size_t c) const;
    double total_measure() const;

    /// Cells incident to vertex v, as a CSR adjacency.
    std::span<const int> vertex_cells(std::size_t v) const {
        return {vertex_cells_.data() + vertex_cell_offsets_[v],
                vertex_cell_offsets_[v + 1] - vertex_cell_offsets_[v]};
    }

    friend TriMesh build_structured(int dim, int divisions);
    friend TriMesh refine(const TriMesh& mesh, int times);

private:
    void finalize();

    int dim_ = 0;
    int root_divisions_ = 0;
    int level_ = 0;
    std::vector<Point> vertices_;
    std::vector<int> cells_;
    std::vector<char> boundary_flag_;
    std::vector<int> boundary_nodes_;
    std::vector<int> interior_nodes_;
    std::vector<int> coarse_nodes_;
    std::vector<int> root_cell_;
    std::vector<std::size_t> vertex_cell_offsets_;
    std::vector<int> vertex_cells_;
    std::shared_ptr<const TriMesh> parent_;
};

/// Uniform grid of (0,1)^dim with the given divisions per axis. In 2D each
/// square is split along (1,1). All interior grid vertices become coarse nodes.
TriMesh build_structured(int dim, int divisions);

/// Uniform refinement: intervals are halved, triangles split into 4 congruent children.
TriMesh refine(const TriMesh& mesh, int times);

/// Oriented piece of a dual-cell boundary, lying in one fine cell.
struct DualSegment {
    int owner = -1;     ///< vertex whose dual cell this bounds
    int neighbor = -1;  ///< vertex across the segment, -1 on the domain boundary
    int cell = -1;      ///< fine cell containing the segment
    Point from{};
    Point to{};
    Point normal{};     ///< unit outward normal w.r.t. the owner's cell
    double length = 0;  ///< 1 in 1D (point "segments")
};

/// Median (barycentric) dual of a fine mesh: one region per vertex.
struct DualMesh {
    std::vector<double> volumes;
    std::vector<std::size_t> segment_offsets;  ///< CSR into `segments`, per vertex
    std::vector<DualSegment> segments;

    std::span<const DualSegment> boundary_of(std::size_t v) const {
        return {segments.data() + segment_offsets[v], segment_offsets[v + 1] - segment_offsets[v]};
    }
};

DualMesh dual_cells(const TriMesh& mesh);

/// Fine-scale footprint of the l-layer coarse neighbourhood of a coarse node.
struct SubdomainMask {
    int center = -1;  ///< index into coarse_nodes()
    int layers = 0;
    std::vector<int> fine_nodes;          ///< sorted, strictly interior to the region and to the domain
    std::vector<int> fine_cells;          ///< sorted
    std::vector<int> local_coarse_nodes;  ///< sorted coarse-node indices whose vertex lies in fine_nodes
    std::vector<int> coarse_cells;        ///< sorted root cells forming the region

    /// True when the region's free nodes are every interior fine node.
    bool covers_domain(const TriMesh& fine) const {
        return fine_nodes.size() == fine.interior_nodes().size();
    }
};

SubdomainMask layer_region(const TriMesh& coarse, const TriMesh& fine, int coarse_index, int layers);

/// H = max over fine vertices of the distance to the nearest node (sampled sup).
double mesh_norm(std::span<const Point> nodes, const TriMesh& fine);

}  // namespace rps
