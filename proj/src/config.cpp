#include "rps/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>

#include "rps/analysis.hpp"
#include "rps/errors.hpp"
#include "rps/io.hpp"

namespace rps {

using nlohmann::json;

namespace {

void check_keys(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) throw ConfigError(where + " must be an object");
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [key, _] : j.items()) {
        if (!ok.count(key)) throw ConfigError("unknown field '" + (where.empty() ? key : where + "." + key) + "'");
    }
}

int get_int(const json& j, const char* key, const std::string& field, int fallback) {
    if (!j.contains(key)) return fallback;
    const auto& v = j.at(key);
    if (!v.is_number_integer()) throw ConfigError(field + " must be an integer");
    return v.get<int>();
}

double get_number(const json& j, const char* key, const std::string& field, double fallback) {
    if (!j.contains(key)) return fallback;
    const auto& v = j.at(key);
    if (!v.is_number()) throw ConfigError(field + " must be a number");
    return v.get<double>();
}

std::string get_string(const json& j, const char* key, const std::string& field, const std::string& fallback) {
    if (!j.contains(key)) return fallback;
    const auto& v = j.at(key);
    if (!v.is_string()) throw ConfigError(field + " must be a string");
    return v.get<std::string>();
}

LayerSetting parse_one_layer(const json& v) {
    if (v.is_string() && v.get<std::string>() == "global") return {};
    if (v.is_number_integer()) {
        const int l = v.get<int>();
        if (l < 1) throw ConfigError("layers entries must be >= 1, got " + std::to_string(l));
        return l;
    }
    throw ConfigError("layers entries must be positive integers or \"global\"");
}

}  // namespace

ScalarFunction RhsSpec::function(int dim) const {
    if (kind == "constant") {
        const double c = value;
        return [c](const Point&) { return c; };
    }
    if (kind == "sin_product") {
        const double s = scale;
        if (dim == 1) return [s](const Point& p) { return s * std::sin(std::numbers::pi * p[0]); };
        return [s](const Point& p) { return s * std::sin(std::numbers::pi * p[0]) * std::sin(std::numbers::pi * p[1]); };
    }
    throw ConfigError("rhs.kind must be constant|sin_product, got '" + kind + "'");
}

std::vector<LayerSetting> LayerPlan::for_divisions(int coarse_divisions) const {
    if (logarithmic) return {logarithmic_layers(coarse_divisions)};
    return settings;
}

bool OutputSpec::dump(const std::string& what) const {
    return std::find(dumps.begin(), dumps.end(), what) != dumps.end();
}

CoeffSpec parse_coeff(const json& j) {
    if (!j.is_object()) throw ConfigError("coeff must be an object");
    const std::string kind = get_string(j, "kind", "coeff.kind", "");
    if (kind == "constant") {
        check_keys(j, "coeff", {"kind", "value"});
        return CoeffSpec(ConstantField{get_number(j, "value", "coeff.value", 1.0)});
    }
    if (kind == "trig_multiscale_2d") {
        check_keys(j, "coeff", {"kind"});
        return CoeffSpec(TrigMultiscale2d{});
    }
    if (kind == "random_fourier_1d") {
        check_keys(j, "coeff", {"kind", "alpha", "modes", "seed", "generator"});
        const std::string gen = get_string(j, "generator", "coeff.generator", kFourierGenerator);
        if (gen != kFourierGenerator) {
            throw ConfigError("coeff.generator must be \"" + std::string(kFourierGenerator) + "\", got '" + gen + "'");
        }
        RandomFourier1d r;
        r.alpha = get_number(j, "alpha", "coeff.alpha", 1.0);
        r.modes = get_int(j, "modes", "coeff.modes", 20);
        if (j.contains("seed")) {
            if (!j.at("seed").is_number_unsigned()) throw ConfigError("coeff.seed must be a non-negative integer");
            r.seed = j.at("seed").get<std::uint64_t>();
        }
        return CoeffSpec(r);
    }
    if (kind == "checkerboard") {
        check_keys(j, "coeff", {"kind", "contrast", "period"});
        return CoeffSpec(Checkerboard{get_number(j, "contrast", "coeff.contrast", 100.0),
                                      get_number(j, "period", "coeff.period", 0.25)});
    }
    throw ConfigError("coeff.kind must be constant|trig_multiscale_2d|random_fourier_1d|checkerboard, got '" +
                      kind + "'");
}

LayerPlan parse_layers(const json& j) {
    LayerPlan plan;
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "global") {
            plan.settings = {LayerSetting{}};
            return plan;
        }
        if (s == "log") {
            plan.logarithmic = true;
            return plan;
        }
        const auto dots = s.find("..");
        if (dots != std::string::npos) {
            int lo = 0, hi = 0;
            try {
                lo = std::stoi(s.substr(0, dots));
                hi = std::stoi(s.substr(dots + 2));
            } catch (const std::exception&) {
                throw ConfigError("layers range '" + s + "' must look like a..b");
            }
            if (lo < 1 || hi < lo) throw ConfigError("layers range '" + s + "' must satisfy 1 <= a <= b");
            for (int l = lo; l <= hi; ++l) plan.settings.emplace_back(l);
            return plan;
        }
        try {
            return parse_layers(json(std::stoi(s)));
        } catch (const std::invalid_argument&) {
            throw ConfigError("layers must be an integer, a list, \"global\", \"log\" or \"a..b\", got '" + s + "'");
        }
    }
    if (j.is_number_integer()) {
        plan.settings = {parse_one_layer(j)};
        return plan;
    }
    if (j.is_array()) {
        if (j.empty()) throw ConfigError("layers list must not be empty");
        for (const auto& v : j) plan.settings.push_back(parse_one_layer(v));
        return plan;
    }
    throw ConfigError("layers must be an integer, a list, \"global\", \"log\" or \"a..b\"");
}

ExperimentConfig parse_config(const json& j, const std::filesystem::path& base_dir) {
    check_keys(j, "", {"name", "dimension", "coarse_divisions", "refinements", "coeff", "layers", "rhs", "problem",
                       "solver", "outputs", "workers", "$schema", "description"});
    ExperimentConfig c;
    c.base_dir = base_dir;
    c.name = get_string(j, "name", "name", "experiment");
    c.dimension = get_int(j, "dimension", "dimension", 2);
    if (c.dimension != 1 && c.dimension != 2) {
        throw ConfigError("dimension must be 1 or 2, got " + std::to_string(c.dimension));
    }
    c.coarse_divisions = get_int(j, "coarse_divisions", "coarse_divisions", 4);
    if (c.coarse_divisions < 2) {
        throw ConfigError("coarse_divisions must be >= 2, got " + std::to_string(c.coarse_divisions));
    }
    c.refinements = get_int(j, "refinements", "refinements", 1);
    if (c.refinements < 0 || c.refinements > 12) {
        throw ConfigError("refinements must be in [0, 12], got " + std::to_string(c.refinements));
    }
    if (j.contains("coeff")) c.coeff = parse_coeff(j.at("coeff"));
    if (c.coeff.required_dim() != 0 && c.coeff.required_dim() != c.dimension) {
        throw ConfigError("coeff.kind '" + c.coeff.name() + "' requires dimension " +
                          std::to_string(c.coeff.required_dim()));
    }
    c.layers = j.contains("layers") ? parse_layers(j.at("layers")) : LayerPlan{{LayerSetting{}}, false};

    if (j.contains("rhs")) {
        const auto& r = j.at("rhs");
        if (r.is_number()) {
            c.rhs.kind = "constant";
            c.rhs.value = r.get<double>();
        } else {
            check_keys(r, "rhs", {"kind", "value", "scale"});
            c.rhs.kind = get_string(r, "kind", "rhs.kind", "sin_product");
            c.rhs.value = get_number(r, "value", "rhs.value", 1.0);
            c.rhs.scale = get_number(r, "scale", "rhs.scale", 1.0);
        }
        (void)c.rhs.function(c.dimension);
    }

    if (j.contains("problem")) {
        const auto& p = j.at("problem");
        check_keys(p, "problem", {"kind", "T", "steps", "snapshot_every", "density", "lumped_mass", "sweep",
                                  "measurements", "rhs_bound", "node", "reference_layers"});
        c.problem.kind = get_string(p, "kind", "problem.kind", "elliptic");
        static const std::set<std::string> kinds{"elliptic", "wave", "parabolic", "basis-only", "recover", "decay",
                                                 "gram"};
        if (!kinds.count(c.problem.kind)) throw ConfigError("problem.kind '" + c.problem.kind + "' is not supported");
        c.problem.final_time = get_number(p, "T", "problem.T", 1.0);
        if (!(c.problem.final_time > 0.0)) throw ConfigError("problem.T must be > 0");
        c.problem.steps = get_int(p, "steps", "problem.steps", 0);
        if (c.problem.steps < 0) throw ConfigError("problem.steps must be >= 0");
        c.problem.snapshot_every = get_int(p, "snapshot_every", "problem.snapshot_every", 0);
        c.problem.density = get_number(p, "density", "problem.density", 1.0);
        if (!(c.problem.density > 0.0)) throw ConfigError("problem.density must be > 0");
        if (p.contains("lumped_mass")) {
            if (!p.at("lumped_mass").is_boolean()) throw ConfigError("problem.lumped_mass must be a boolean");
            c.problem.lumped_mass = p.at("lumped_mass").get<bool>();
        }
        if (p.contains("sweep")) {
            if (!p.at("sweep").is_array()) throw ConfigError("problem.sweep must be a list of coarse divisions");
            for (const auto& v : p.at("sweep")) {
                if (!v.is_number_integer() || v.get<int>() < 2) {
                    throw ConfigError("problem.sweep entries must be integers >= 2");
                }
                c.problem.sweep.push_back(v.get<int>());
            }
            if (c.problem.sweep.size() < 2) throw ConfigError("problem.sweep needs at least 2 entries");
        }
        c.problem.measurements = get_string(p, "measurements", "problem.measurements", "");
        c.problem.rhs_bound = get_number(p, "rhs_bound", "problem.rhs_bound", 1.0);
        c.problem.node = get_int(p, "node", "problem.node", -1);
        if (p.contains("reference_layers")) c.problem.reference_layers = parse_one_layer(p.at("reference_layers"));
        if (c.problem.kind == "recover" && c.problem.measurements.empty()) {
            throw ConfigError("problem.measurements is required for problem.kind = recover");
        }
    }

    if (j.contains("solver")) {
        const auto& s = j.at("solver");
        check_keys(s, "solver", {"tol", "max_iter", "method"});
        c.solver.tol = get_number(s, "tol", "solver.tol", 1e-10);
        if (!(c.solver.tol > 0.0)) throw ConfigError("solver.tol must be > 0");
        c.solver.max_iter = get_int(s, "max_iter", "solver.max_iter", 0);
        if (c.solver.max_iter < 0) throw ConfigError("solver.max_iter must be >= 0");
        c.solver.method = parse_solver_method(get_string(s, "method", "solver.method", "direct"));
    }

    if (j.contains("outputs")) {
        const auto& o = j.at("outputs");
        check_keys(o, "outputs", {"dir", "dumps", "plots"});
        c.outputs.dir = get_string(o, "dir", "outputs.dir", "");
        if (o.contains("dumps")) {
            static const std::set<std::string> known{"basis", "matrices", "solutions", "field", "mesh", "trajectory"};
            if (!o.at("dumps").is_array()) throw ConfigError("outputs.dumps must be a list");
            for (const auto& d : o.at("dumps")) {
                if (!d.is_string() || !known.count(d.get<std::string>())) {
                    throw ConfigError("outputs.dumps entries must be one of basis|matrices|solutions|field|mesh|trajectory");
                }
                c.outputs.dumps.push_back(d.get<std::string>());
            }
        }
        if (o.contains("plots")) {
            if (!o.at("plots").is_boolean()) throw ConfigError("outputs.plots must be a boolean");
            c.outputs.plots = o.at("plots").get<bool>();
        }
    }
    c.workers = get_int(j, "workers", "workers", 1);
    if (c.workers < 1) throw ConfigError("workers must be >= 1");
    return c;
}

void apply_override(json& j, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw ConfigError("override '" + assignment + "' must look like key=value");
    }
    const std::string key = assignment.substr(0, eq);
    const std::string raw = assignment.substr(eq + 1);
    json value = json::parse(raw, nullptr, false);
    if (value.is_discarded()) value = raw;

    json* node = &j;
    std::size_t start = 0;
    while (true) {
        const auto dot = key.find('.', start);
        const std::string part = key.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
        if (part.empty()) throw ConfigError("override key '" + key + "' has an empty component");
        if (dot == std::string::npos) {
            (*node)[part] = value;
            return;
        }
        if (!node->contains(part)) (*node)[part] = json::object();
        node = &(*node)[part];
        if (!node->is_object()) throw ConfigError("override key '" + key + "' descends into a non-object");
        start = dot + 1;
    }
}

json load_config_json(const std::filesystem::path& path, const std::vector<std::string>& overrides) {
    const std::string text = io::read_file(path);
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ConfigError("config " + path.string() + " is not valid JSON");
    if (!j.is_object()) throw ConfigError("config " + path.string() + " must contain a JSON object");
    for (const auto& o : overrides) apply_override(j, o);
    return j;
}

json resolved_json(const json& raw) {
    json out = raw;
    out.erase("workers");
    if (out.contains("outputs") && out["outputs"].is_object()) out["outputs"].erase("dir");
    return out;
}

}  // namespace rps
