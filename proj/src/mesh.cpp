#include "rps/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_map>

#include "rps/errors.hpp"

namespace rps {

namespace {

std::uint64_t edge_key(int a, int b) {
    const auto lo = static_cast<std::uint64_t>(std::min(a, b));
    const auto hi = static_cast<std::uint64_t>(std::max(a, b));
    return (lo << 32) | hi;
}

Point midpoint(const Point& a, const Point& b) {
    return {0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1])};
}

bool on_unit_boundary(const Point& p, int dim) {
    for (int k = 0; k < dim; ++k) {
        if (p[k] == 0.0 || p[k] == 1.0) return true;
    }
    return false;
}

}  // namespace

double distance(const Point& a, const Point& b) {
    return std::hypot(a[0] - b[0], a[1] - b[1]);
}

std::vector<Point> TriMesh::coarse_points() const {
    std::vector<Point> pts;
    pts.reserve(coarse_nodes_.size());
    for (int v : coarse_nodes_) pts.push_back(vertices_[v]);
    return pts;
}

double TriMesh::spacing() const {
    return 1.0 / (static_cast<double>(root_divisions_) * std::ldexp(1.0, level_));
}

double TriMesh::cell_measure(std::size_t c) const {
    const auto v = cell(c);
    if (dim_ == 1) return std::abs(vertices_[v[1]][0] - vertices_[v[0]][0]);
    const Point& a = vertices_[v[0]];
    const Point& b = vertices_[v[1]];
    const Point& p = vertices_[v[2]];
    return 0.5 * ((b[0] - a[0]) * (p[1] - a[1]) - (p[0] - a[0]) * (b[1] - a[1]));
}

Point TriMesh::barycenter(std::size_t c) const {
    const auto v = cell(c);
    Point g{0.0, 0.0};
    for (int idx : v) {
        g[0] += vertices_[idx][0];
        g[1] += vertices_[idx][1];
    }
    const double k = static_cast<double>(v.size());
    return {g[0] / k, g[1] / k};
}

double TriMesh::total_measure() const {
    double sum = 0.0;
    for (std::size_t c = 0; c < num_cells(); ++c) sum += cell_measure(c);
    return sum;
}

void TriMesh::finalize() {
    const std::size_t nv = vertices_.size();
    boundary_flag_.assign(nv, 0);
    boundary_nodes_.clear();
    interior_nodes_.clear();
    for (std::size_t v = 0; v < nv; ++v) {
        if (on_unit_boundary(vertices_[v], dim_)) {
            boundary_flag_[v] = 1;
            boundary_nodes_.push_back(static_cast<int>(v));
        } else {
            interior_nodes_.push_back(static_cast<int>(v));
        }
    }

    vertex_cell_offsets_.assign(nv + 1, 0);
    for (int v : cells_) ++vertex_cell_offsets_[static_cast<std::size_t>(v) + 1];
    for (std::size_t v = 0; v < nv; ++v) vertex_cell_offsets_[v + 1] += vertex_cell_offsets_[v];
    vertex_cells_.assign(cells_.size(), -1);
    std::vector<std::size_t> cursor(vertex_cell_offsets_.begin(), vertex_cell_offsets_.end() - 1);
    const std::size_t k = static_cast<std::size_t>(dim_ + 1);
    for (std::size_t c = 0; c < num_cells(); ++c) {
        for (std::size_t j = 0; j < k; ++j) {
            const auto v = static_cast<std::size_t>(cells_[c * k + j]);
            vertex_cells_[cursor[v]++] = static_cast<int>(c);
        }
    }
}

TriMesh build_structured(int dim, int divisions) {
    if (dim != 1 && dim != 2) {
        throw ConfigError("dimension must be 1 or 2, got " + std::to_string(dim));
    }
    if (divisions < 2) {
        throw ConfigError("coarse_divisions must be >= 2, got " + std::to_string(divisions));
    }
    TriMesh m;
    m.dim_ = dim;
    m.root_divisions_ = divisions;
    m.level_ = 0;
    const double n = static_cast<double>(divisions);

    if (dim == 1) {
        for (int i = 0; i <= divisions; ++i) m.vertices_.push_back({i / n, 0.0});
        for (int i = 0; i < divisions; ++i) {
            m.cells_.push_back(i);
            m.cells_.push_back(i + 1);
        }
        for (int i = 1; i < divisions; ++i) m.coarse_nodes_.push_back(i);
    } else {
        const int np = divisions + 1;
        auto vid = [np](int i, int j) { return j * np + i; };
        for (int j = 0; j <= divisions; ++j) {
            for (int i = 0; i <= divisions; ++i) m.vertices_.push_back({i / n, j / n});
        }
        for (int j = 0; j < divisions; ++j) {
            for (int i = 0; i < divisions; ++i) {
                const int v00 = vid(i, j), v10 = vid(i + 1, j);
                const int v01 = vid(i, j + 1), v11 = vid(i + 1, j + 1);
                m.cells_.insert(m.cells_.end(), {v00, v10, v11});
                m.cells_.insert(m.cells_.end(), {v00, v11, v01});
            }
        }
        for (int j = 1; j < divisions; ++j) {
            for (int i = 1; i < divisions; ++i) m.coarse_nodes_.push_back(vid(i, j));
        }
    }
    m.root_cell_.resize(m.num_cells());
    for (std::size_t c = 0; c < m.root_cell_.size(); ++c) m.root_cell_[c] = static_cast<int>(c);
    m.finalize();
    return m;
}

TriMesh refine(const TriMesh& mesh, int times) {
    if (times < 0) throw ConfigError("refinements must be >= 0, got " + std::to_string(times));
    if (times == 0) return mesh;

    auto parent = std::make_shared<const TriMesh>(mesh);
    TriMesh m;
    m.dim_ = mesh.dim_;
    m.root_divisions_ = mesh.root_divisions_;
    m.level_ = mesh.level_ + 1;
    m.vertices_ = mesh.vertices_;
    m.coarse_nodes_ = mesh.coarse_nodes_;

    std::unordered_map<std::uint64_t, int> mids;
    mids.reserve(mesh.num_cells() * 3);
    auto mid = [&](int a, int b) {
        const auto key = edge_key(a, b);
        auto it = mids.find(key);
        if (it != mids.end()) return it->second;
        const int idx = static_cast<int>(m.vertices_.size());
        m.vertices_.push_back(midpoint(mesh.vertices_[a], mesh.vertices_[b]));
        mids.emplace(key, idx);
        return idx;
    };

    const std::size_t children = mesh.dim_ == 1 ? 2 : 4;
    m.cells_.reserve(mesh.cells_.size() * children);
    m.root_cell_.reserve(mesh.num_cells() * children);
    for (std::size_t c = 0; c < mesh.num_cells(); ++c) {
        const auto v = mesh.cell(c);
        if (mesh.dim_ == 1) {
            const int m01 = mid(v[0], v[1]);
            m.cells_.insert(m.cells_.end(), {v[0], m01, m01, v[1]});
        } else {
            const int a = v[0], b = v[1], p = v[2];
            const int mab = mid(a, b), mbp = mid(b, p), mpa = mid(p, a);
            m.cells_.insert(m.cells_.end(),
                            {a, mab, mpa, mab, b, mbp, mpa, mbp, p, mab, mbp, mpa});
        }
        for (std::size_t k = 0; k < children; ++k) m.root_cell_.push_back(mesh.root_cell_[c]);
    }
    m.parent_ = std::move(parent);
    m.finalize();
    return refine(m, times - 1);
}

DualMesh dual_cells(const TriMesh& mesh) {
    const std::size_t nv = mesh.num_vertices();
    const int dim = mesh.dim();
    DualMesh dual;
    dual.volumes.assign(nv, 0.0);
    std::vector<DualSegment> raw;

    if (dim == 1) {
        raw.reserve(mesh.num_cells() * 2 + 2);
        for (std::size_t c = 0; c < mesh.num_cells(); ++c) {
            const auto v = mesh.cell(c);
            const double xa = mesh.vertex(v[0])[0];
            const double xb = mesh.vertex(v[1])[0];
            const double half = 0.5 * std::abs(xb - xa);
            dual.volumes[v[0]] += half;
            dual.volumes[v[1]] += half;
            const Point m = midpoint(mesh.vertex(v[0]), mesh.vertex(v[1]));
            const double s = xb > xa ? 1.0 : -1.0;
            raw.push_back({v[0], v[1], static_cast<int>(c), m, m, {s, 0.0}, 1.0});
            raw.push_back({v[1], v[0], static_cast<int>(c), m, m, {-s, 0.0}, 1.0});
            for (int k = 0; k < 2; ++k) {
                const Point& p = mesh.vertex(v[k]);
                if (p[0] == 0.0) raw.push_back({v[k], -1, static_cast<int>(c), p, p, {-1.0, 0.0}, 1.0});
                if (p[0] == 1.0) raw.push_back({v[k], -1, static_cast<int>(c), p, p, {1.0, 0.0}, 1.0});
            }
        }
    } else {
        std::unordered_map<std::uint64_t, int> edge_count;
        edge_count.reserve(mesh.num_cells() * 3);
        for (std::size_t c = 0; c < mesh.num_cells(); ++c) {
            const auto v = mesh.cell(c);
            for (int k = 0; k < 3; ++k) ++edge_count[edge_key(v[k], v[(k + 1) % 3])];
        }
        raw.reserve(mesh.num_cells() * 6);
        for (std::size_t c = 0; c < mesh.num_cells(); ++c) {
            const auto v = mesh.cell(c);
            const double third = mesh.cell_measure(c) / 3.0;
            const Point g = mesh.barycenter(c);
            for (int k = 0; k < 3; ++k) {
                dual.volumes[v[k]] += third;
                const int pa = v[k], pb = v[(k + 1) % 3], opp = v[(k + 2) % 3];
                const Point& a = mesh.vertex(pa);
                const Point& b = mesh.vertex(pb);
                const Point m = midpoint(a, b);
                const double len = distance(m, g);
                Point n{(g[1] - m[1]) / len, -(g[0] - m[0]) / len};
                if (n[0] * (b[0] - a[0]) + n[1] * (b[1] - a[1]) < 0.0) n = {-n[0], -n[1]};
                raw.push_back({pa, pb, static_cast<int>(c), m, g, n, len});
                raw.push_back({pb, pa, static_cast<int>(c), g, m, {-n[0], -n[1]}, len});

                if (edge_count[edge_key(pa, pb)] == 1) {
                    const double elen = distance(a, b);
                    Point en{(b[1] - a[1]) / elen, -(b[0] - a[0]) / elen};
                    const Point& o = mesh.vertex(opp);
                    if (en[0] * (o[0] - a[0]) + en[1] * (o[1] - a[1]) > 0.0) en = {-en[0], -en[1]};
                    raw.push_back({pa, -1, static_cast<int>(c), a, m, en, 0.5 * elen});
                    raw.push_back({pb, -1, static_cast<int>(c), m, b, en, 0.5 * elen});
                }
            }
        }
    }

    dual.segment_offsets.assign(nv + 1, 0);
    for (const auto& s : raw) ++dual.segment_offsets[static_cast<std::size_t>(s.owner) + 1];
    for (std::size_t v = 0; v < nv; ++v) dual.segment_offsets[v + 1] += dual.segment_offsets[v];
    dual.segments.resize(raw.size());
    std::vector<std::size_t> cursor(dual.segment_offsets.begin(), dual.segment_offsets.end() - 1);
    for (const auto& s : raw) dual.segments[cursor[static_cast<std::size_t>(s.owner)]++] = s;
    return dual;
}

SubdomainMask layer_region(const TriMesh& coarse, const TriMesh& fine, int coarse_index, int layers) {
    if (layers < 1) throw ConfigError("layers must be >= 1, got " + std::to_string(layers));
    if (coarse.level() != 0 || coarse.dim() != fine.dim() ||
        coarse.root_divisions() != fine.root_divisions() ||
        coarse.num_cells() * (std::size_t{1} << (fine.dim() * fine.level())) != fine.num_cells()) {
        throw StructuralError("fine mesh is not a refinement of the coarse mesh");
    }
    if (coarse_index < 0 || static_cast<std::size_t>(coarse_index) >= coarse.coarse_nodes().size()) {
        throw IndexError("coarse node index " + std::to_string(coarse_index) + " out of range [0, " +
                         std::to_string(coarse.coarse_nodes().size()) + ")");
    }

    std::vector<char> in_region(coarse.num_cells(), 0);
    for (int c : coarse.vertex_cells(coarse.coarse_nodes()[coarse_index])) in_region[c] = 1;
    std::vector<char> touched(coarse.num_vertices(), 0);
    for (int step = 1; step < layers; ++step) {
        std::fill(touched.begin(), touched.end(), 0);
        for (std::size_t c = 0; c < coarse.num_cells(); ++c) {
            if (!in_region[c]) continue;
            for (int v : coarse.cell(c)) touched[v] = 1;
        }
        for (std::size_t v = 0; v < coarse.num_vertices(); ++v) {
            if (!touched[v]) continue;
            for (int c : coarse.vertex_cells(v)) in_region[c] = 1;
        }
    }

    SubdomainMask mask;
    mask.center = coarse_index;
    mask.layers = layers;
    for (std::size_t c = 0; c < coarse.num_cells(); ++c) {
        if (in_region[c]) mask.coarse_cells.push_back(static_cast<int>(c));
    }
    std::vector<char> fine_in(fine.num_cells(), 0);
    for (std::size_t c = 0; c < fine.num_cells(); ++c) {
        if (in_region[fine.root_cell()[c]]) {
            fine_in[c] = 1;
            mask.fine_cells.push_back(static_cast<int>(c));
        }
    }
    std::vector<char> node_in(fine.num_vertices(), 0);
    for (int v : fine.interior_nodes()) {
        const auto cells = fine.vertex_cells(v);
        if (std::all_of(cells.begin(), cells.end(), [&](int c) { return fine_in[c] != 0; })) {
            node_in[v] = 1;
            mask.fine_nodes.push_back(v);
        }
    }
    for (std::size_t k = 0; k < fine.coarse_nodes().size(); ++k) {
        if (node_in[fine.coarse_nodes()[k]]) mask.local_coarse_nodes.push_back(static_cast<int>(k));
    }
    return mask;
}

double mesh_norm(std::span<const Point> nodes, const TriMesh& fine) {
    if (nodes.empty()) throw ConfigError("mesh norm needs at least one node");
    double worst = 0.0;
    for (const Point& y : fine.vertices()) {
        double best = std::numeric_limits<double>::infinity();
        for (const Point& x : nodes) {
            const double dx = x[0] - y[0], dy = x[1] - y[1];
            best = std::min(best, dx * dx + dy * dy);
        }
        worst = std::max(worst, best);
    }
    return std::sqrt(worst);
}

}  // namespace rps
