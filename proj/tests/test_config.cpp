#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "rps/config.hpp"
#include "rps/errors.hpp"
#include "rps/io.hpp"

using namespace rps;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const fs::path kConfigs = fs::path(RPS_SOURCE_DIR) / "configs";

std::string error_of(const json& j) {
    try {
        parse_config(j);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("shipped configs parse") {
    int count = 0;
    for (const auto& entry : fs::directory_iterator(kConfigs)) {
        if (entry.path().extension() != ".json" || entry.path().filename() == "schema.json") continue;
        CAPTURE(entry.path().string());
        const ExperimentConfig c = parse_config(load_config_json(entry.path(), {}), kConfigs);
        CHECK(c.coarse_divisions >= 2);
        CHECK(sample(c.coeff, refine(build_structured(c.dimension, c.coarse_divisions), c.refinements)).lambda_min > 0);
        ++count;
    }
    CHECK(count >= 6);
}

TEST_CASE("field-specific errors") {
    CHECK(error_of({{"coarse_divisions", 1}}).find("coarse_divisions") != std::string::npos);
    CHECK(error_of({{"dimension", 3}}).find("dimension") != std::string::npos);
    CHECK(error_of({{"refinements", -1}}).find("refinements") != std::string::npos);
    CHECK(error_of({{"coeff", {{"kind", "lognormal"}}}}).find("coeff.kind") != std::string::npos);
    CHECK(error_of({{"coeff", {{"kind", "random_fourier_1d"}, {"generator", "pcg32"}}}}).find("coeff.generator") !=
          std::string::npos);
    CHECK(error_of({{"solver", {{"tol", -1.0}}}}).find("solver.tol") != std::string::npos);
    CHECK(error_of({{"problem", {{"kind", "recover"}}}}).find("measurements") != std::string::npos);
    CHECK(error_of({{"colour", "blue"}}).find("colour") != std::string::npos);
    CHECK(error_of({{"layers", "3..1"}}).find("layers") != std::string::npos);
    CHECK(error_of({{"outputs", {{"dumps", {"everything"}}}}}).find("outputs.dumps") != std::string::npos);
}

TEST_CASE("layer plans") {
    CHECK(parse_layers("global").settings == std::vector<LayerSetting>{LayerSetting{}});
    CHECK(parse_layers("2..4").settings == std::vector<LayerSetting>{2, 3, 4});
    CHECK(parse_layers(json::array({1, "global"})).settings == std::vector<LayerSetting>{1, LayerSetting{}});
    CHECK(parse_layers("5").settings == std::vector<LayerSetting>{5});
    const LayerPlan log = parse_layers("log");
    CHECK(log.logarithmic);
    CHECK(log.for_divisions(8) == std::vector<LayerSetting>{6});
    CHECK_THROWS_AS(parse_layers(0), ConfigError);
    CHECK_THROWS_AS(parse_layers("many"), ConfigError);
}

TEST_CASE("overrides") {
    json j = {{"problem", {{"kind", "decay"}}}};
    apply_override(j, "layers=1..6");
    apply_override(j, "coarse_divisions=8");
    apply_override(j, "problem.T=0.25");
    apply_override(j, "solver.method=pcg");
    CHECK(j["layers"] == "1..6");
    CHECK(j["coarse_divisions"] == 8);
    CHECK(j["problem"]["T"] == 0.25);
    CHECK(j["problem"]["kind"] == "decay");
    const ExperimentConfig c = parse_config(j);
    CHECK(c.solver.method == SolverMethod::pcg);
    CHECK(c.layers.settings.size() == 6);
    CHECK_THROWS_AS(apply_override(j, "novalue"), ConfigError);
    CHECK_THROWS_AS(apply_override(j, "layers.x=1"), ConfigError);
}

TEST_CASE("resolved config drops execution-only fields") {
    const json j = {{"workers", 8}, {"outputs", {{"dir", "/tmp/x"}, {"plots", false}}}, {"name", "n"}};
    const json r = resolved_json(j);
    CHECK_FALSE(r.contains("workers"));
    CHECK_FALSE(r["outputs"].contains("dir"));
    CHECK(r["outputs"]["plots"] == false);
}

TEST_CASE("io helpers") {
    CHECK(io::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(std::stod(io::format_double(0.1)) == 0.1);
    CHECK(io::csv({"a", "b"}, {{"1", "2"}}) == "a,b\n1,2\n");

    const fs::path dir = fs::temp_directory_path() / "rps_io_test";
    fs::remove_all(dir);
    io::OutputDir out(dir);
    out.write("b.txt", "two");
    out.write("sub/a.txt", "one");
    const std::string manifest = out.write_manifest();
    CHECK(manifest == io::sha256_hex("two") + "  b.txt\n" + io::sha256_hex("one") + "  sub/a.txt\n");
    CHECK(io::read_file(dir / "sub/a.txt") == "one");
    CHECK_THROWS_AS(io::read_file(dir / "missing"), IoError);

    std::ofstream(dir / "m.csv") << "node,value\n0,1.5\n2,-3\n";
    const auto m = io::read_measurements(dir / "m.csv");
    CHECK(m.size() == 2);
    CHECK(m.at(2) == -3.0);
    std::ofstream(dir / "bad.csv") << "node,value\n0,1.5\n0,2\n";
    CHECK_THROWS_AS(io::read_measurements(dir / "bad.csv"), MeasurementError);
    std::ofstream(dir / "bad2.csv") << "node,value\nzero,1.5\n";
    CHECK_THROWS_AS(io::read_measurements(dir / "bad2.csv"), MeasurementError);
    fs::remove_all(dir);
}

TEST_CASE("mesh export") {
    const std::string text = io::mesh_text(build_structured(1, 3));
    CHECK(text.find("vertices 4") != std::string::npos);
    CHECK(text.find("cells 3") != std::string::npos);
    CHECK(text.find("coarse_nodes 2") != std::string::npos);
}
