#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>

#include "cartanlab/cli/commands.hpp"
#include "cartanlab/cli/config.hpp"
#include "cartanlab/cli/report.hpp"
#include "cartanlab/kernel/gram.hpp"
#include "cartanlab/sl2/su11.hpp"

using namespace cartan;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("cartanlab-test-" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(slurp(p));
    for (std::string line; std::getline(in, line);) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

double num(const std::string& s) { return std::stod(s); }

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("exit codes") {
        const auto out = fresh_dir("codes").string();
        CHECK(cli::run({"--help"}) == cli::kExitOk);
        CHECK(cli::run({"wallach-scan", "--help"}) == cli::kExitOk);
        CHECK(cli::run({"--list-kernels"}) == cli::kExitOk);
        CHECK(cli::run({}) == cli::kExitConfigError);
        CHECK(cli::run({"no-such-experiment"}) == cli::kExitConfigError);
        CHECK(cli::run({"wallach-scan", "--domain", "ball-IV", "--out", out}) == cli::kExitConfigError);
        CHECK(cli::run({"wallach-scan", "--trials", "many", "--out", out}) == cli::kExitConfigError);
        CHECK(cli::run({"restriction-norm", "--s1", "0.7", "--n-list", "8,x", "--out", out}) == cli::kExitConfigError);
        CHECK(cli::subcommand_names().size() == 11);
    }

    TEST_CASE("wallach-scan matches the library") {
        const auto out = fresh_dir("wallach");
        REQUIRE(cli::run({"wallach-scan", "--domain", "ball-I", "--p", "2", "--q", "2", "--s-grid", "0:1.5:0.5", "--trials",
                          "12", "--points", "6", "--seed", "7", "--out", out.string()}) == cli::kExitOk);
        const auto rows = read_csv(out / "wallach-scan.csv");
        const auto api = wallach_scan(Domain::ball(2, 2), {0.0, 0.5, 1.0, 1.5}, 12, 6, 7);
        REQUIRE(rows.size() == api.size() + 1);
        CHECK(rows[0][0] == "s");
        for (std::size_t i = 0; i < api.size(); ++i) {
            CHECK(num(rows[i + 1][0]) == api[i].s);
            CHECK(num(rows[i + 1][5]) == api[i].fraction_indefinite);
            CHECK(num(rows[i + 1][6]) == api[i].worst_min_eigenvalue);
        }
        CHECK(fs::exists(out / "wallach-scan.jsonl"));
        CHECK(fs::exists(out / "wallach-scan.meta.json"));
    }

    TEST_CASE("restriction-norm matches the library") {
        const auto out = fresh_dir("restriction");
        REQUIRE(cli::run({"restriction-norm", "--s1", "0.7", "--s2", "0.7", "--n-list", "8,16,32", "--out",
                          out.string()}) == cli::kExitOk);
        const auto rows = read_csv(out / "restriction-norm.csv");
        const auto curve = restriction_norm_curve(0.7, 0.7, {8, 16, 32});
        REQUIRE(rows.size() == 4);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(std::stoi(rows[i + 1][0]) == curve.points[i].first);
            CHECK(num(rows[i + 1][1]) == curve.points[i].second);
        }
    }

    TEST_CASE("reports are reproducible and echo the configuration") {
        const auto a = fresh_dir("det-a"), b = fresh_dir("det-b");
        const std::vector<std::string> base = {"boundary-trace", "--trials", "3", "--seed", "5"};
        auto args_a = base, args_b = base;
        args_a.insert(args_a.end(), {"--out", a.string()});
        args_b.insert(args_b.end(), {"--out", b.string()});
        const int ra = cli::run(args_a), rb = cli::run(args_b);
        CHECK(ra == rb);
        const std::string ja = slurp(a / "boundary-trace.jsonl");
        CHECK(!ja.empty());
        CHECK(ja == slurp(b / "boundary-trace.jsonl"));
        CHECK(slurp(a / "boundary-trace.csv") == slurp(b / "boundary-trace.csv"));
        const auto first = cli::Json::parse(ja.substr(0, ja.find('\n')));
        CHECK(first["record"] == "config");
        CHECK(first["params"]["seed"] == "5");
        CHECK(first["params"].contains("s1"));
        const auto meta = cli::Json::parse(slurp(a / "boundary-trace.meta.json"));
        CHECK(meta["exit_code"] == ra);
        CHECK(meta.contains("wall_seconds"));
    }

    TEST_CASE("config files with flag overrides") {
        const auto out = fresh_dir("config");
        const fs::path cfg = out / "run.toml";
        std::ofstream(cfg) << "[restriction-norm]\ns1 = 0.3\ns2 = 0.4\nn-list = \"4,8\"\n";
        REQUIRE(cli::run({"--config", cfg.string(), "restriction-norm", "--s2", "0.9", "--out", out.string()}) ==
                cli::kExitOk);
        const std::string j = slurp(out / "restriction-norm.jsonl");
        const auto params = cli::Json::parse(j.substr(0, j.find('\n')))["params"];
        CHECK(params["s1"] == "0.3");
        CHECK(params["s2"] == "0.9");
        CHECK(params["n-list"] == "4,8");
        CHECK(read_csv(out / "restriction-norm.csv").size() == 3);
    }

    TEST_CASE("output directory from the environment") {
        const auto out = fresh_dir("env");
        ::setenv(cli::kOutDirEnv, out.string().c_str(), 1);
        CHECK(cli::default_out_dir() == out.string());
        CHECK(cli::run({"restriction-norm", "--n-list", "4"}) == cli::kExitOk);
        CHECK(fs::exists(out / "restriction-norm.csv"));
        ::unsetenv(cli::kOutDirEnv);
        CHECK(cli::default_out_dir() == "cartanlab-out");
    }

    TEST_CASE("number formatting and parsing") {
        for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0, 1e-8}) CHECK(std::stod(cli::shortest(x)) == x);
        CHECK(cli::shortest(0.1) == "0.1");
        CHECK(cli::shortest(1.0) == "1");
        const auto grid = cli::parse_real_grid("0:3:0.25");
        CHECK(grid.size() == 13);
        CHECK(grid.back() == 3.0);
        CHECK(cli::parse_real_grid("0.5,1,2.5") == std::vector<double>{0.5, 1.0, 2.5});
        CHECK(cli::parse_int_list("64,128") == std::vector<int>{64, 128});
        CHECK_THROWS_AS(cli::parse_real_grid("1:0:0.1"), cli::ConfigError);
        CHECK_THROWS_AS(cli::parse_int_list("3,,4"), cli::ConfigError);
        CHECK_THROWS_AS(cli::parse_domain("ball-V", 2, 2), cli::ConfigError);
        CHECK(cli::parse_group("SO*") == GroupType::SOSTAR);
        CHECK_THROWS_AS(cli::parse_group("GL"), cli::ConfigError);
    }
}
