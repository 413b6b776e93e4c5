#pragma once

#include <filesystem>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "rps/assembly.hpp"
#include "rps/basis.hpp"
#include "rps/coeff.hpp"
#include "rps/linalg.hpp"

namespace rps {

/// Named right-hand side g(x): constant(value) or sin_product (scale * prod_k sin(pi x_k)).
struct RhsSpec {
    std::string kind = "sin_product";
    double value = 1.0;
    double scale = 1.0;

    ScalarFunction function(int dim) const;
};

/// Layer selection: explicit settings, or the logarithmic rule l(H) = ceil(2 log2(1/H)).
struct LayerPlan {
    std::vector<LayerSetting> settings;
    bool logarithmic = false;

    /// Settings for a given coarse resolution.
    std::vector<LayerSetting> for_divisions(int coarse_divisions) const;
};

struct ProblemSpec {
    std::string kind = "elliptic";  ///< elliptic | wave | parabolic | basis-only | recover | decay | gram
    double final_time = 1.0;
    int steps = 0;  ///< 0 = 4 * fine divisions
    int snapshot_every = 0;
    double density = 1.0;
    bool lumped_mass = false;
    std::vector<int> sweep;  ///< coarse divisions for a convergence study
    std::string measurements;
    double rhs_bound = 1.0;
    int node = -1;  ///< -1 = node nearest the centre
    LayerSetting reference_layers;
};

struct OutputSpec {
    std::string dir;
    std::vector<std::string> dumps;  ///< any of: basis, matrices, solutions, field, mesh, trajectory
    bool plots = true;

    bool dump(const std::string& what) const;
};

struct ExperimentConfig {
    std::string name = "experiment";
    int dimension = 2;
    int coarse_divisions = 4;
    int refinements = 1;
    CoeffSpec coeff;
    LayerPlan layers;
    RhsSpec rhs;
    ProblemSpec problem;
    SolverOptions solver;
    OutputSpec outputs;
    int workers = 1;
    std::filesystem::path base_dir;  ///< directory of the config file, for relative paths

    int fine_divisions() const { return coarse_divisions << refinements; }
};

/// Parses and validates; ConfigError messages name the offending field.
ExperimentConfig parse_config(const nlohmann::json& j, const std::filesystem::path& base_dir = {});

/// Applies "dotted.key=value"; value is parsed as JSON when possible, else taken as a string.
void apply_override(nlohmann::json& j, const std::string& assignment);

nlohmann::json load_config_json(const std::filesystem::path& path, const std::vector<std::string>& overrides);

/// Canonical form of the parsed config with execution-only fields (workers) removed.
nlohmann::json resolved_json(const nlohmann::json& raw);

CoeffSpec parse_coeff(const nlohmann::json& j);
LayerPlan parse_layers(const nlohmann::json& j);

}  // namespace rps
