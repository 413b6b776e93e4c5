#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "rps/cli.hpp"
#include "rps/io.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path kConfigs = fs::path(RPS_SOURCE_DIR) / "configs";

struct Sandbox {
    fs::path root = fs::temp_directory_path() / "rps_cli_test";
    Sandbox() {
        fs::remove_all(root);
        fs::create_directories(root);
        setenv("RPS_OUTPUT_DIR", root.c_str(), 1);
    }
    ~Sandbox() { fs::remove_all(root); }
};

int run(std::vector<std::string> args) {
    args.insert(args.begin(), "rps");
    return rps::cli::main(args);
}

fs::path small_config(const fs::path& dir) {
    const fs::path p = dir / "small.json";
    std::ofstream(p) << R"({"name": "small", "dimension": 2, "coarse_divisions": 4, "refinements": 2,
        "coeff": {"kind": "trig_multiscale_2d"}, "layers": [1, 2, "global"],
        "problem": {"kind": "elliptic"}, "outputs": {"dumps": ["basis", "solutions", "field", "mesh", "matrices"]}})";
    return p;
}

}  // namespace

TEST_CASE("exit codes") {
    Sandbox box;
    const std::string cfg = small_config(box.root).string();
    CHECK(run({"frobnicate", "--config", cfg}) == rps::cli::kExitConfig);
    CHECK(run({"solve"}) == rps::cli::kExitConfig);
    CHECK(run({"solve", "--config", cfg, "--override", "coarse_divisions=1"}) == rps::cli::kExitConfig);
    CHECK(run({"solve", "--config", (box.root / "absent.json").string()}) == rps::cli::kExitIo);
    CHECK(run({"basis", "--config", cfg, "-o", "solver.method=pcg", "-o", "solver.max_iter=1"}) ==
          rps::cli::kExitSolver);
    CHECK(run({"basis", "--config", cfg, "-o", "refinements=0", "-o", "layers=1"}) == rps::cli::kExitSolver);
    CHECK(run({"solve", "--config", cfg}) == rps::cli::kExitOk);
}

TEST_CASE("outputs and determinism") {
    Sandbox box;
    const std::string cfg = small_config(box.root).string();
    REQUIRE(run({"solve", "--config", cfg, "--workers", "1"}) == 0);
    const fs::path out = box.root / "small" / "solve";
    const std::string first = rps::io::read_file(out / "MANIFEST");
    for (const char* f : {"errors.csv", "config.resolved.json", "run.log", "field.csv", "mesh_fine.txt",
                          "solutions/u_fine.csv", "basis/lglobal/phi_0004.csv", "errors.svg"}) {
        CAPTURE(f);
        CHECK(fs::exists(out / f));
    }
    CHECK(rps::io::read_file(out / "errors.csv").rfind("l,err_L2,err_H1,err_Linf\n", 0) == 0);
    REQUIRE(run({"solve", "--config", cfg, "--workers", "3"}) == 0);
    CHECK(rps::io::read_file(out / "MANIFEST") == first);
}

TEST_CASE("subcommands on shipped configs") {
    Sandbox box;
    const std::string twod = (kConfigs / "twod.json").string();
    CHECK(run({"mesh-info", "--config", twod, "-o", "coarse_divisions=4", "-o", "refinements=0"}) == 0);
    const std::string info = rps::io::read_file(box.root / "twod" / "mesh-info" / "mesh_info.csv");
    CHECK(info.find("coarse_vertices,25\n") != std::string::npos);
    CHECK(info.find("coarse_cells,32\n") != std::string::npos);
    CHECK(info.find("coarse_nodes,9\n") != std::string::npos);

    CHECK(run({"decay", "--config", twod, "-o", "coarse_divisions=8", "-o", "refinements=1", "-o", "layers=1..3"}) == 0);
    const std::string decay = rps::io::read_file(box.root / "twod" / "decay" / "decay.csv");
    CHECK(decay.rfind("l,err_L2,err_H1,err_Linf\n1,", 0) == 0);

    CHECK(run({"gram", "--config", (kConfigs / "oned.json").string(), "-o", "refinements=1"}) == 0);
    CHECK(fs::exists(box.root / "oned" / "gram" / "P.csv"));
    CHECK(fs::exists(box.root / "oned" / "gram" / "Theta.csv"));

    CHECK(run({"recover", "--config", (kConfigs / "recover2d.json").string(), "-o", "layers=2"}) == 0);
    CHECK(fs::exists(box.root / "recover2d" / "recover" / "recovered.csv"));

    for (const char* name : {"wave", "parabolic"}) {
        CAPTURE(name);
        const std::string cfg = (kConfigs / (std::string(name) + "2d.json")).string();
        CHECK(run({name, "--config", cfg, "-o", "coarse_divisions=4", "-o", "refinements=1", "-o", "layers=1..2",
                   "-o", "outputs.dumps=[\"trajectory\"]", "-o", "problem.snapshot_every=4"}) == 0);
        const fs::path out = box.root / (std::string(name) + "2d") / name;
        CHECK(fs::exists(out / (std::string(name) + "_errors.csv")));
        CHECK(fs::exists(out / "trajectory_l1.csv"));
        CHECK(fs::exists(out / "terminal_fine.csv"));
    }
}
