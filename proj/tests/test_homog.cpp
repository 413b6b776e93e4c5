#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "rps/analysis.hpp"
#include "rps/errors.hpp"
#include "rps/homog.hpp"

using namespace rps;
using std::numbers::pi;

namespace {

const ScalarFunction sin_product = [](const Point& p) { return std::sin(pi * p[0]) * std::sin(pi * p[1]); };

double energy(const Discretization& d, const Vector& u) { return u.dot(d.full_stiffness * u); }

}  // namespace

TEST_CASE("fine solves") {
    SUBCASE("zero load") {
        auto disc = Discretization::build(2, 4, 1, CoeffSpec(TrigMultiscale2d{}));
        CHECK(solve_fine(*disc, [](const Point&) { return 0.0; }).values.isZero());
    }
    SUBCASE("1D quadratic") {
        auto disc = Discretization::build(1, 4, 4, CoeffSpec(ConstantField{1.0}));
        const Solution u = solve_fine(*disc, [](const Point&) { return 2.0; });
        double err = 0.0;
        for (std::size_t v = 0; v < disc->fine->num_vertices(); ++v) {
            const double x = disc->fine->vertex(v)[0];
            err = std::max(err, std::abs(u.values[v] - x * (1 - x)));
        }
        CHECK(err < 1e-10);  // constant load: P1 is nodally exact in 1D
    }
    SUBCASE("2D manufactured solution, L2 error O(h^2)") {
        std::vector<double> errs;
        for (int r : {1, 2, 3}) {
            auto disc = Discretization::build(2, 8, r, CoeffSpec(ConstantField{1.0}));
            const Solution u = solve_fine(*disc, [](const Point& p) { return 2 * pi * pi * sin_product(p); });
            const Vector exact = nodal_values(*disc->fine, sin_product);
            errs.push_back(norms(*disc, u.values - exact).l2);
        }
        CHECK(std::log2(errs[0] / errs[1]) > 1.8);
        CHECK(std::log2(errs[1] / errs[2]) > 1.8);
    }
}

TEST_CASE("single node stiffness in 1D") {
    auto disc = Discretization::build(1, 2, 6, CoeffSpec(ConstantField{1.0}));
    const RpsBasis basis = BasisBuilder(disc).solve_all(LayerSetting{});
    const auto [sys, sol] = coarse_solve(basis, [](const Point&) { return 1.0; });
    CHECK(std::abs(sys.stiffness(0, 0) - 4.8) / 4.8 <= 0.02);
}

TEST_CASE("Galerkin properties") {
    auto disc = Discretization::build(2, 4, 2, CoeffSpec(TrigMultiscale2d{}));
    const BasisBuilder builder(disc);
    const Solution fine = solve_fine(*disc, sin_product);
    for (LayerSetting l : {LayerSetting{}, LayerSetting{1}, LayerSetting{2}}) {
        const RpsBasis basis = builder.solve_all(l);
        const auto [sys, coarse] = coarse_solve(basis, sin_product);
        CHECK(coarse.provenance == (l ? Provenance::coarse_localized : Provenance::coarse_global));
        CHECK((sys.stiffness - sys.stiffness.transpose()).cwiseAbs().maxCoeff() <=
              1e-10 * sys.stiffness.cwiseAbs().maxCoeff());
        const Vector e = fine.values - coarse.values;
        const DenseMatrix cols = basis.columns();
        const double scale = std::sqrt(energy(*disc, e));
        for (Eigen::Index j = 0; j < cols.cols(); ++j) {
            const Vector phi = cols.col(j);
            CHECK(std::abs(e.dot(disc->full_stiffness * phi)) <= 1e-8 * scale * std::sqrt(energy(*disc, phi)));
        }
        const Solution in = interpolate(basis, coarse_samples(*disc, fine.values));
        CHECK(energy(*disc, e) <= energy(*disc, fine.values - in.values) + 1e-10);
        for (int v : disc->fine->boundary_nodes()) CHECK(coarse.values[v] == 0.0);
    }
}

TEST_CASE("linearity") {
    auto disc = Discretization::build(2, 4, 2, CoeffSpec(TrigMultiscale2d{}));
    const RpsBasis basis = BasisBuilder(disc).solve_all(LayerSetting{2});
    const ScalarFunction g2 = [](const Point& p) { return p[0] * p[0] - p[1]; };
    const Vector a = coarse_solve(basis, sin_product).second.values;
    const Vector b = coarse_solve(basis, g2).second.values;
    const Vector ab = coarse_solve(basis, [&](const Point& p) { return sin_product(p) + g2(p); }).second.values;
    CHECK((ab - a - b).cwiseAbs().maxCoeff() <= 1e-10 * ab.cwiseAbs().maxCoeff());
}

TEST_CASE("saturated localization reproduces the global solve") {
    auto disc = Discretization::build(2, 4, 2, CoeffSpec(TrigMultiscale2d{}));
    const BasisBuilder builder(disc);
    const Vector global = coarse_solve(builder.solve_all(LayerSetting{}), sin_product).second.values;
    const Vector local = coarse_solve(builder.solve_all(LayerSetting{8}), sin_product).second.values;
    CHECK((global - local).cwiseAbs().maxCoeff() <= 1e-8);
}

TEST_CASE("interpolation and recovery") {
    auto disc = Discretization::build(2, 4, 2, CoeffSpec(TrigMultiscale2d{}));
    const RpsBasis basis = BasisBuilder(disc).solve_all(LayerSetting{1});
    const std::size_t nv = disc->fine->num_vertices();
    Vector e3 = Vector::Zero(9);
    e3[3] = 1.0;
    CHECK(interpolate(basis, e3).values == basis.functions[3].dense(nv));
    CHECK(interpolate(basis, Vector::Zero(9)).values.isZero());
    CHECK_THROWS_AS(interpolate(basis, Vector::Zero(4)), StructuralError);

    const Solution fine = solve_fine(*disc, sin_product);
    const Vector samples = coarse_samples(*disc, fine.values);
    std::map<int, double> meas;
    for (int i = 0; i < 9; ++i) meas[i] = samples[i];
    const Recovery rec = recover(basis, meas, 0.5);
    CHECK(rec.solution.values == interpolate(basis, samples).values);
    CHECK(rec.solution.provenance == Provenance::recovery);
    CHECK(rec.bound.find("H * M") != std::string::npos);

    std::mt19937 rng(2);
    std::normal_distribution<double> normal;
    Vector eta(9);
    std::map<int, double> noisy;
    for (int i = 0; i < 9; ++i) {
        eta[i] = 1e-3 * normal(rng);
        noisy[i] = samples[i] + eta[i];
    }
    const Vector diff = recover(basis, noisy, 0.5).solution.values - rec.solution.values;
    CHECK((diff - interpolate(basis, eta).values).cwiseAbs().maxCoeff() < 1e-15);

    meas.erase(4);
    CHECK_THROWS_AS(recover(basis, meas, 0.5), MeasurementError);
    meas[4] = 0.0;
    meas[12] = 1.0;
    CHECK_THROWS_AS(recover(basis, meas, 0.5), MeasurementError);
}

TEST_CASE("locality diagnostics shrink with the layers") {
    auto disc = Discretization::build(2, 8, 1, CoeffSpec(TrigMultiscale2d{}));
    const BasisBuilder builder(disc);
    const double first = locality_diagnostics(builder, builder.solve_basis(27, LayerSetting{2})).outer_layer_l2;
    const double later = locality_diagnostics(builder, builder.solve_basis(27, LayerSetting{4})).outer_layer_l2;
    CHECK(first > 0.0);
    CHECK(later < first);
}
