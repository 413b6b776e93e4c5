#include "rps/coeff.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "rps/errors.hpp"

namespace rps {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

double unit_draw(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53 - 0.5;
}

double trig_multiscale(double x, double y) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    constexpr double e1 = 1.0 / 5, e2 = 1.0 / 13, e3 = 1.0 / 17, e4 = 1.0 / 31, e5 = 1.0 / 65;
    const double t1 = (1.1 + std::sin(two_pi * x / e1)) / (1.1 + std::sin(two_pi * y / e1));
    const double t2 = (1.1 + std::sin(two_pi * y / e2)) / (1.1 + std::cos(two_pi * x / e2));
    const double t3 = (1.1 + std::cos(two_pi * x / e3)) / (1.1 + std::sin(two_pi * y / e3));
    const double t4 = (1.1 + std::sin(two_pi * y / e4)) / (1.1 + std::cos(two_pi * x / e4));
    const double t5 = (1.1 + std::cos(two_pi * x / e5)) / (1.1 + std::sin(two_pi * y / e5));
    return (t1 + t2 + t3 + t4 + t5 + std::sin(4.0 * x * x * y * y) + 1.0) / 6.0;
}

}  // namespace

CoeffSpec::CoeffSpec(CoeffKind kind) : kind_(std::move(kind)) {
    std::visit(overloaded{
                   [](const ConstantField& c) {
                       if (!(c.value > 0.0)) throw CoefficientError("coeff.value must be > 0, got " + std::to_string(c.value));
                   },
                   [](const TrigMultiscale2d&) {},
                   [this](const RandomFourier1d& r) {
                       if (r.modes < 1) throw ConfigError("coeff.modes must be >= 1");
                       std::mt19937_64 gen(r.seed);
                       zeta_sin_.resize(static_cast<std::size_t>(r.modes));
                       zeta_cos_.resize(static_cast<std::size_t>(r.modes));
                       for (auto& z : zeta_sin_) z = unit_draw(gen);
                       for (auto& z : zeta_cos_) z = unit_draw(gen);
                   },
                   [](const Checkerboard& c) {
                       if (!(c.contrast > 0.0)) throw ConfigError("coeff.contrast must be > 0");
                       if (!(c.period > 0.0)) throw ConfigError("coeff.period must be > 0");
                   },
               },
               kind_);
}

std::string CoeffSpec::name() const {
    return std::visit(overloaded{
                          [](const ConstantField&) { return std::string("constant"); },
                          [](const TrigMultiscale2d&) { return std::string("trig_multiscale_2d"); },
                          [](const RandomFourier1d&) { return std::string("random_fourier_1d"); },
                          [](const Checkerboard&) { return std::string("checkerboard"); },
                      },
                      kind_);
}

int CoeffSpec::required_dim() const {
    if (std::holds_alternative<TrigMultiscale2d>(kind_)) return 2;
    if (std::holds_alternative<RandomFourier1d>(kind_)) return 1;
    return 0;
}

double CoeffSpec::evaluate(const Point& p) const {
    return std::visit(
        overloaded{
            [](const ConstantField& c) { return c.value; },
            [&p](const TrigMultiscale2d&) { return trig_multiscale(p[0], p[1]); },
            [&](const RandomFourier1d& r) {
                double s = 0.0;
                for (int k = 1; k <= r.modes; ++k) {
                    const double kx = k * p[0];
                    const auto i = static_cast<std::size_t>(k - 1);
                    s += std::pow(static_cast<double>(k), -r.alpha) *
                         (zeta_sin_[i] * std::sin(kx) + zeta_cos_[i] * std::cos(kx));
                }
                return 1.0 + 0.5 * std::sin(s);
            },
            [&p](const Checkerboard& c) {
                const auto ix = static_cast<long>(std::floor(p[0] / c.period));
                const auto iy = static_cast<long>(std::floor(p[1] / c.period));
                return ((ix + iy) % 2 != 0) ? c.contrast : 1.0;
            },
        },
        kind_);
}

CellCoeffs sample(const CoeffSpec& spec, const TriMesh& mesh) {
    const int need = spec.required_dim();
    if (need != 0 && need != mesh.dim()) {
        throw ConfigError("coefficient '" + spec.name() + "' is defined for dimension " +
                          std::to_string(need) + ", mesh has dimension " + std::to_string(mesh.dim()));
    }
    CellCoeffs out;
    out.values.resize(mesh.num_cells());
    for (std::size_t c = 0; c < mesh.num_cells(); ++c) {
        const double a = spec.evaluate(mesh.barycenter(c));
        if (!(a > 0.0) || !std::isfinite(a)) {
            throw CoefficientError("coefficient '" + spec.name() + "' sampled non-positive value " +
                                   std::to_string(a) + " in cell " + std::to_string(c));
        }
        out.values[c] = a;
    }
    const auto [lo, hi] = std::minmax_element(out.values.begin(), out.values.end());
    out.lambda_min = *lo;
    out.lambda_max = *hi;
    return out;
}

}  // namespace rps
