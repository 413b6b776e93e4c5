#include <doctest.h>

#include <cmath>
#include <random>

#include "kkt_oracle.hpp"
#include "rps/basis.hpp"
#include "rps/errors.hpp"

using namespace rps;

namespace {

std::shared_ptr<const Discretization> trig2d(int nc, int refinements) {
    return Discretization::build(2, nc, refinements, CoeffSpec(TrigMultiscale2d{}));
}

Vector hat(std::size_t nv, int v) {
    Vector e = Vector::Zero(static_cast<Eigen::Index>(nv));
    e[v] = 1.0;
    return e;
}

}  // namespace

TEST_CASE("Kronecker property and support") {
    auto disc = trig2d(4, 2);
    const BasisBuilder builder(disc);
    const auto& nodes = disc->fine->coarse_nodes();
    const std::size_t nv = disc->fine->num_vertices();
    for (LayerSetting l : {LayerSetting{}, LayerSetting{1}, LayerSetting{2}}) {
        const RpsBasis basis = builder.solve_all(l, 2);
        REQUIRE(basis.size() == 9);
        for (const auto& f : basis.functions) {
            for (std::size_t j = 0; j < nodes.size(); ++j) {
                CHECK(f.at(nodes[j]) == (static_cast<int>(j) == f.node ? 1.0 : 0.0));
            }
            const Vector d = f.dense(nv);
            for (int v : disc->fine->boundary_nodes()) CHECK(d[v] == 0.0);
            if (l) {
                const SubdomainMask mask = builder.support(f.node, *l);
                for (std::size_t v = 0; v < nv; ++v) {
                    if (!std::binary_search(mask.fine_nodes.begin(), mask.fine_nodes.end(), static_cast<int>(v))) {
                        CHECK(d[v] == 0.0);
                    }
                }
            }
        }
    }
}

TEST_CASE("KKT oracle agreement") {
    SUBCASE("1D, 9 interior fine nodes") {
        auto disc = Discretization::build(1, 5, 1, CoeffSpec(RandomFourier1d{1.0, 20, 4}));
        REQUIRE(disc->fine->interior_nodes().size() == 9);
        const BasisBuilder builder(disc);
        for (int i = 0; i < 4; ++i) {
            const Vector ref = oracle::kkt_basis(*disc, i, nullptr);
            CHECK((builder.solve_basis(i, LayerSetting{}).dense(11) - ref).cwiseAbs().maxCoeff() < 1e-8);
            const SubdomainMask mask = builder.support(i, 1);
            const Vector loc = oracle::kkt_basis(*disc, i, &mask);
            CHECK((builder.solve_basis(i, LayerSetting{1}).dense(11) - loc).cwiseAbs().maxCoeff() < 1e-8);
        }
    }
    SUBCASE("2D, Nc = 4, one refinement") {
        auto disc = trig2d(4, 1);
        const BasisBuilder builder(disc);
        for (int i = 0; i < 9; ++i) {
            const Vector ref = oracle::kkt_basis(*disc, i, nullptr);
            CHECK((builder.solve_basis(i, LayerSetting{}).dense(81) - ref).cwiseAbs().maxCoeff() < 1e-8);
            const SubdomainMask mask = builder.support(i, 1);
            const Vector loc = oracle::kkt_basis(*disc, i, &mask);
            CHECK((builder.solve_basis(i, LayerSetting{1}).dense(81) - loc).cwiseAbs().maxCoeff() < 1e-8);
        }
    }
}

TEST_CASE("1D closed form at h = 1/128") {
    auto disc = Discretization::build(1, 2, 6, CoeffSpec(ConstantField{1.0}));
    const BasisBuilder builder(disc);
    const RpsBasis basis = builder.solve_all(LayerSetting{});
    REQUIRE(basis.size() == 1);
    int quarter = -1;
    for (std::size_t v = 0; v < disc->fine->num_vertices(); ++v) {
        if (disc->fine->vertex(v)[0] == 0.25) quarter = static_cast<int>(v);
    }
    REQUIRE(quarter >= 0);
    CHECK(std::abs(basis.functions[0].at(quarter) - 0.6875) <= 0.01);
    const DenseMatrix p = gram(basis);
    CHECK(std::abs(p(0, 0) - 48.0) / 48.0 <= 0.02);
    CHECK(p(0, 0) == doctest::Approx(basis.functions[0].objective));
}

TEST_CASE("minimality and orthogonality") {
    auto disc = trig2d(4, 2);
    const BasisBuilder builder(disc);
    const std::size_t nv = disc->fine->num_vertices();
    std::mt19937 rng(9);
    std::normal_distribution<double> normal;
    for (LayerSetting l : {LayerSetting{}, LayerSetting{1}}) {
        const BasisFunction f = builder.solve_basis(4, l);
        const Vector phi = f.dense(nv);
        const double base = disc->fv.v_norm_squared(phi);
        CHECK(base == doctest::Approx(f.objective).epsilon(1e-10));
        std::vector<int> free;
        for (int v : f.support) {
            const auto& cn = disc->fine->coarse_nodes();
            if (!disc->fine->is_boundary(v) && std::find(cn.begin(), cn.end(), v) == cn.end()) free.push_back(v);
        }
        REQUIRE(!free.empty());
        for (int trial = 0; trial < 100; ++trial) {
            Vector v = Vector::Zero(static_cast<Eigen::Index>(nv));
            for (int k : free) v[k] = 0.1 * normal(rng);
            CHECK(disc->fv.v_norm_squared(phi + v) >= base - 1e-10);
        }
        const double nphi = std::sqrt(base);
        for (int k : free) {
            const Vector psi = hat(nv, k);
            const double inner = disc->fv.v_inner(phi, psi);
            CHECK(std::abs(inner) <= 1e-8 * nphi * std::sqrt(disc->fv.v_norm_squared(psi)));
        }
    }
}

TEST_CASE("objective decreases with the support") {
    auto disc = trig2d(8, 1);
    const BasisBuilder builder(disc);
    for (int node : {0, 27}) {
        const double global = builder.solve_basis(node, LayerSetting{}).objective;
        double prev = std::numeric_limits<double>::infinity();
        for (int l = 1; l <= 6; ++l) {
            const double obj = builder.solve_basis(node, LayerSetting{l}).objective;
            CHECK(obj <= prev + 1e-10 * prev);
            CHECK(obj >= global - 1e-10 * global);
            prev = obj;
        }
    }
}

TEST_CASE("gram matrix") {
    auto disc = trig2d(4, 2);
    const BasisBuilder builder(disc);
    const RpsBasis basis = builder.solve_all(LayerSetting{});
    const DenseMatrix p = gram(basis);
    CHECK((p - p.transpose()).cwiseAbs().maxCoeff() <= 1e-10 * p.cwiseAbs().maxCoeff());
    Eigen::SelfAdjointEigenSolver<DenseMatrix> eig(p);
    CHECK(eig.eigenvalues().minCoeff() > 0.0);
    const DenseMatrix t = theta(p);
    CHECK(inverse_residual(p, t) <= 1e-8);
    const DenseMatrix cols = basis.columns();
    std::mt19937 rng(1);
    std::normal_distribution<double> normal;
    for (int trial = 0; trial < 20; ++trial) {
        Vector w(9);
        for (int i = 0; i < 9; ++i) w[i] = normal(rng);
        const double lhs = disc->fv.v_norm_squared(cols * w);
        const double rhs = w.dot(p * w);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * rhs);
    }
    DenseMatrix singular = p;
    singular.row(0).setZero();
    singular.col(0).setZero();
    CHECK_THROWS_AS(theta(singular), ConditioningError);
}

TEST_CASE("worker count does not change results") {
    auto disc = trig2d(8, 1);
    const BasisBuilder builder(disc);
    const RpsBasis one = builder.solve_all(LayerSetting{2}, 1);
    const RpsBasis many = builder.solve_all(LayerSetting{2}, 8);
    REQUIRE(one.size() == many.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one.functions[i].values == many.functions[i].values);
        CHECK(one.functions[i].objective == many.functions[i].objective);
    }
}

TEST_CASE("localized supports are small") {
    auto disc = trig2d(16, 1);
    const BasisBuilder builder(disc);
    const RpsBasis basis = builder.solve_all(LayerSetting{3}, 2);
    const std::size_t interior = disc->fine->interior_nodes().size();
    for (const auto& f : basis.functions) CHECK(f.support.size() < interior);
    CHECK(basis.stored_nonzeros() * 4 < basis.size() * disc->fine->num_vertices());
}

TEST_CASE("degenerate supports") {
    auto disc = Discretization::build(2, 4, 0, CoeffSpec(ConstantField{1.0}));
    const BasisBuilder builder(disc);
    CHECK_THROWS_AS(builder.solve_basis(4, LayerSetting{1}), DegenerateSupportError);
    CHECK_THROWS_AS(builder.solve_all(LayerSetting{1}), DegenerateSupportError);
    // a support covering the domain pins every interior node: the element is the nodal hat
    auto tiny = Discretization::build(2, 2, 0, CoeffSpec(ConstantField{1.0}));
    const BasisFunction f = BasisBuilder(tiny).solve_basis(0, LayerSetting{1});
    CHECK(f.at(4) == 1.0);
}

TEST_CASE("layer labels") {
    CHECK(layer_label(LayerSetting{}) == "global");
    CHECK(layer_label(LayerSetting{3}) == "3");
}
