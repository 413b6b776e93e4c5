#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "rps/mesh.hpp"

namespace rps {

struct ConstantField {
    double value = 1.0;
};

/// Five-scale trigonometric field on the unit square (scales 1/5, 1/13, 1/17, 1/31, 1/65).
struct TrigMultiscale2d {};

/// a(x) = 1 + 1/2 sin( sum_k k^-alpha (z1_k sin(kx) + z2_k cos(kx)) ), z uniform on [-1/2, 1/2].
struct RandomFourier1d {
    double alpha = 1.0;
    int modes = 20;
    std::uint64_t seed = 0;
};

/// Two-valued field: `contrast` on odd squares of side `period`, 1 elsewhere.
struct Checkerboard {
    double contrast = 100.0;
    double period = 0.25;
};

using CoeffKind = std::variant<ConstantField, TrigMultiscale2d, RandomFourier1d, Checkerboard>;

/// Identifier of the generator behind RandomFourier1d: std::mt19937_64 seeded
/// with the seed, each draw mapped to (bits >> 11) * 2^-53 - 1/2, drawing all
/// z1 coefficients first and then all z2.
inline constexpr const char* kFourierGenerator = "mt19937_64/u53";

/// Scalar coefficient specification. Random coefficients are drawn once at
/// construction and reused by every evaluation.
class CoeffSpec {
public:
    CoeffSpec() : CoeffSpec(ConstantField{}) {}
    explicit CoeffSpec(CoeffKind kind);

    const CoeffKind& kind() const { return kind_; }
    std::string name() const;
    /// Spatial dimension the field is defined for; 0 means any.
    int required_dim() const;

    double evaluate(const Point& p) const;

    const std::vector<double>& zeta_sin() const { return zeta_sin_; }
    const std::vector<double>& zeta_cos() const { return zeta_cos_; }

private:
    CoeffKind kind_;
    std::vector<double> zeta_sin_;
    std::vector<double> zeta_cos_;
};

/// Piecewise-constant coefficient, one value per fine cell.
struct CellCoeffs {
    std::vector<double> values;
    double lambda_min = 0.0;
    double lambda_max = 0.0;
};

/// Samples the field at cell barycenters. Throws CoefficientError on a non-positive sample.
CellCoeffs sample(const CoeffSpec& spec, const TriMesh& mesh);

}  // namespace rps
