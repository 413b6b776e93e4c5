#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rps/errors.hpp"
#include "rps/mesh.hpp"

using namespace rps;

namespace {

double measure_sum(const TriMesh& m) {
    double s = 0.0;
    for (std::size_t c = 0; c < m.num_cells(); ++c) s += m.cell_measure(c);
    return s;
}

bool includes(const std::vector<int>& big, const std::vector<int>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

TEST_CASE("structured counts") {
    const TriMesh m = build_structured(2, 4);
    CHECK(m.num_vertices() == 25);
    CHECK(m.num_cells() == 32);
    CHECK(m.coarse_nodes().size() == 9);

    const TriMesh l = build_structured(1, 81);
    CHECK(l.num_vertices() == 82);
    CHECK(l.num_cells() == 81);
    REQUIRE(l.coarse_nodes().size() == 80);
    const auto pts = l.coarse_points();
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) CHECK(pts[k + 1][0] - pts[k][0] == doctest::Approx(1.0 / 81));

    const TriMesh big = refine(build_structured(2, 32), 3);
    CHECK(big.num_vertices() == 66049);
    CHECK(big.num_cells() == 131072);
}

TEST_CASE("refinement") {
    const TriMesh m = build_structured(2, 4);
    CHECK(refine(m, 1).num_cells() == 128);
    const TriMesh same = refine(m, 0);
    CHECK(same.vertices() == m.vertices());
    CHECK(same.cell_data() == m.cell_data());
    CHECK(refine(build_structured(1, 81), 3).num_cells() == 648);

    for (int dim : {1, 2}) {
        const TriMesh coarse = build_structured(dim, 3);
        for (int k = 1; k <= 3; ++k) {
            const TriMesh fine = refine(coarse, k);
            CHECK(fine.num_cells() == coarse.num_cells() << (dim * k));
            CHECK(std::abs(measure_sum(fine) - 1.0) < 1e-12);
            // coarse vertices keep their index and (bitwise) coordinates
            for (std::size_t v = 0; v < coarse.num_vertices(); ++v) CHECK(fine.vertex(v) == coarse.vertex(v));
            CHECK(fine.coarse_nodes() == coarse.coarse_nodes());
            for (std::size_t c = 0; c < fine.num_cells(); ++c) {
                CHECK(fine.cell_measure(c) > 0.0);
                const int root = fine.root_cell()[c];
                const Point b = fine.barycenter(c);
                const Point rb = coarse.barycenter(root);
                CHECK(distance(b, rb) < (dim == 1 ? 0.5 : 0.75) / 3.0 + 1e-12);
            }
        }
    }
}

TEST_CASE("coarse nodes are interior") {
    const TriMesh m = build_structured(2, 5);
    for (int v : m.coarse_nodes()) CHECK_FALSE(m.is_boundary(v));
    CHECK(m.boundary_nodes().size() + m.interior_nodes().size() == m.num_vertices());
}

TEST_CASE("2D triangles are counter-clockwise") {
    const TriMesh m = refine(build_structured(2, 3), 2);
    for (std::size_t c = 0; c < m.num_cells(); ++c) {
        const auto t = m.cell(c);
        const Point& a = m.vertex(t[0]);
        const Point& b = m.vertex(t[1]);
        const Point& d = m.vertex(t[2]);
        CHECK((b[0] - a[0]) * (d[1] - a[1]) - (b[1] - a[1]) * (d[0] - a[0]) > 0.0);
    }
}

TEST_CASE("invalid inputs") {
    CHECK_THROWS_AS(build_structured(2, 1), ConfigError);
    CHECK_THROWS_AS(build_structured(3, 4), ConfigError);
    CHECK_THROWS_AS(refine(build_structured(1, 4), -1), ConfigError);
}

TEST_CASE("dual volumes") {
    for (int dim : {1, 2}) {
        for (int n : {4, 7, 16}) {
            const TriMesh m = dim == 1 ? build_structured(1, n) : refine(build_structured(2, n), 1);
            const DualMesh d = dual_cells(m);
            CHECK(std::abs(std::accumulate(d.volumes.begin(), d.volumes.end(), 0.0) - 1.0) < 1e-12);
            for (double v : d.volumes) CHECK(v > 0.0);
            const double h = m.spacing();
            for (int v : m.interior_nodes()) CHECK(d.volumes[v] == doctest::Approx(dim == 1 ? h : h * h).epsilon(1e-12));
        }
    }
}

TEST_CASE("dual segments pair up with opposite orientation") {
    const TriMesh m = refine(build_structured(2, 3), 1);
    const DualMesh d = dual_cells(m);
    for (std::size_t v = 0; v < m.num_vertices(); ++v) {
        for (const auto& s : d.boundary_of(v)) {
            CHECK(s.owner == static_cast<int>(v));
            if (s.neighbor < 0) continue;
            int matches = 0;
            for (const auto& t : d.boundary_of(s.neighbor)) {
                if (t.neighbor == s.owner && t.cell == s.cell) {
                    ++matches;
                    CHECK(t.length == doctest::Approx(s.length));
                    CHECK(t.normal[0] == doctest::Approx(-s.normal[0]));
                    CHECK(t.normal[1] == doctest::Approx(-s.normal[1]));
                }
            }
            CHECK(matches == 1);
        }
    }
}

TEST_CASE("dual boundary is closed") {
    // sum of |s| n over the boundary of each dual cell vanishes
    const TriMesh m = refine(build_structured(2, 4), 1);
    const DualMesh d = dual_cells(m);
    for (std::size_t v = 0; v < m.num_vertices(); ++v) {
        double nx = 0.0, ny = 0.0;
        for (const auto& s : d.boundary_of(v)) {
            nx += s.length * s.normal[0];
            ny += s.length * s.normal[1];
        }
        CHECK(std::abs(nx) < 1e-12);
        CHECK(std::abs(ny) < 1e-12);
    }
}

TEST_CASE("layer regions") {
    const TriMesh coarse = build_structured(2, 4);
    const TriMesh fine = refine(coarse, 1);
    const int center = 4;  // (0.5, 0.5)
    REQUIRE(coarse.vertex(coarse.coarse_nodes()[center]) == Point{0.5, 0.5});
    const SubdomainMask big = layer_region(coarse, fine, center, 10);
    CHECK(big.covers_domain(fine));
    CHECK(big.fine_nodes == fine.interior_nodes());

    // node (0.25, 0.25), one layer: the 6 incident coarse triangles
    const SubdomainMask corner = layer_region(coarse, fine, 0, 1);
    CHECK(corner.coarse_cells.size() == 6);
    for (int v : corner.fine_nodes) {
        CHECK_FALSE(fine.is_boundary(v));
        for (int c : fine.vertex_cells(v)) {
            CHECK(std::binary_search(corner.coarse_cells.begin(), corner.coarse_cells.end(), fine.root_cell()[c]));
        }
    }
    CHECK(corner.local_coarse_nodes == std::vector<int>{0});
    CHECK(std::binary_search(corner.fine_nodes.begin(), corner.fine_nodes.end(), coarse.coarse_nodes()[0]));

    CHECK_THROWS_AS(layer_region(coarse, fine, 9, 1), IndexError);
    CHECK_THROWS_AS(layer_region(coarse, fine, -1, 1), IndexError);
    CHECK_THROWS_AS(layer_region(coarse, fine, 0, 0), ConfigError);
}

TEST_CASE("layer nesting") {
    const TriMesh coarse = build_structured(2, 16);
    const TriMesh fine = refine(coarse, 1);
    for (int node : {0, 7, 112, 224}) {
        SubdomainMask prev = layer_region(coarse, fine, node, 1);
        CHECK(std::binary_search(prev.fine_nodes.begin(), prev.fine_nodes.end(), coarse.coarse_nodes()[node]));
        for (int l = 2; l <= 40 && !prev.covers_domain(fine); ++l) {
            const SubdomainMask next = layer_region(coarse, fine, node, l);
            CHECK(includes(next.fine_nodes, prev.fine_nodes));
            CHECK(next.fine_nodes.size() > prev.fine_nodes.size());
            prev = next;
        }
        CHECK(prev.covers_domain(fine));
    }
    const TriMesh c1 = build_structured(1, 10);
    const TriMesh f1 = refine(c1, 2);
    const SubdomainMask m1 = layer_region(c1, f1, 4, 1);
    CHECK(m1.local_coarse_nodes == std::vector<int>{4});
    CHECK(m1.fine_nodes.size() == 7);  // open interval of two coarse cells at h = H/4
}

TEST_CASE("mesh norm") {
    const TriMesh fine = refine(build_structured(2, 64), 0);
    const std::vector<Point> centre{{0.5, 0.5}};
    CHECK(mesh_norm(centre, fine) == doctest::Approx(std::sqrt(0.5)));
    CHECK(mesh_norm(fine.vertices(), fine) == 0.0);

    const TriMesh c1 = build_structured(1, 81);
    CHECK(mesh_norm(c1.coarse_points(), refine(c1, 3)) == doctest::Approx(1.0 / 81));
    CHECK_THROWS_AS(mesh_norm(std::vector<Point>{}, fine), ConfigError);
}
