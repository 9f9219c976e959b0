#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "doctest.h"

#include "dsirr/commands.hpp"
#include "dsirr/csv.hpp"
#include "dsirr/run_config.hpp"

using namespace dsirr;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

bool throws_mentioning(const std::function<void()>& fn,
                       const std::string& needle) {
    try {
        fn();
    } catch (const std::exception& e) {
        return std::string(e.what()).find(needle) != std::string::npos;
    }
    return false;
}

}  // namespace

TEST_CASE("number formatting is locale-free and 12 significant digits") {
    CHECK(format_number(0.49) == "0.49");
    CHECK(format_number(1.0 / 3.0) == "0.333333333333");
    CHECK(format_number(486.444287399462) == "486.444287399");
    CHECK(format_number(1e-6) == "1e-06");
    CHECK(format_number(-2.5e8) == "-250000000");
    CHECK(format_int(17) == "17");
    CHECK(format_int(-3) == "-3");
}

TEST_CASE("csv writer enforces a rectangular table") {
    CsvWriter w;
    w.comment("key", "value");
    w.header({"a", "b"});
    w.row({1.0, 2.0});
    CHECK_THROWS_AS(w.row({1.0}), std::logic_error);
    CHECK(w.str() == "# key: value\na,b\n1,2\n");
}

TEST_CASE("config defaults") {
    for (const char* text : {"", "   \n", "{}"}) {
        CAPTURE(text);
        const RunConfig rc = parse_run_config(text);
        CHECK(rc.experiment.mass == 1.67e-27);
        CHECK(rc.experiment.sigma0 == 7.8e-6);
        CHECK(rc.experiment.beta == 7.8e-6);
        CHECK(rc.experiment.d == 0.000125);
        CHECK(rc.experiment.lambda == 2e-9);
        CHECK(rc.experiment.gamma == -1.0);
        CHECK(rc.experiment.hbar == 1.0546e-34);
        CHECK(rc.tau_over_tau0 == 18.0);
        CHECK(rc.dq_m == 2.5e-6);
        CHECK(rc.dk_per_m == 1400.0);
        CHECK(rc.dq_ref_m == 0.17e-3);
        CHECK(rc.dk_ref_per_m == 1.58e5);
        CHECK(rc.t_lo == 0.0);
        CHECK(rc.t_hi == 3.0);
        CHECK(rc.t_steps == 121);
    }
}

TEST_CASE("config parsing: overrides, rejection, round trip") {
    SUBCASE("partial override keeps the remaining defaults") {
        const RunConfig rc =
            parse_run_config(R"({"gamma": 0.5, "t_steps": 7})");
        CHECK(rc.experiment.gamma == 0.5);
        CHECK(rc.t_steps == 7);
        CHECK(rc.experiment.mass == 1.67e-27);
    }
    SUBCASE("unknown keys are named in the error") {
        CHECK(throws_mentioning(
            [] { (void)parse_run_config(R"({"sigma_m": 1e-6})"); },
            "sigma_m"));
    }
    SUBCASE("invalid physics is named in the error") {
        CHECK(throws_mentioning(
            [] { (void)parse_run_config(R"({"sigma0_m": -1e-6})"); },
            "sigma0"));
        CHECK(throws_mentioning(
            [] { (void)parse_run_config(R"({"t_steps": 0})"); }, "t_steps"));
        CHECK(throws_mentioning(
            [] { (void)parse_run_config(R"({"t_steps": 2.5})"); },
            "t_steps"));
        CHECK(throws_mentioning(
            [] { (void)parse_run_config(R"({"dq_m": 1.0})"); }, "dq"));
    }
    SUBCASE("malformed json is rejected") {
        CHECK_THROWS_AS((void)parse_run_config("not json"),
                        std::invalid_argument);
        CHECK_THROWS_AS((void)parse_run_config("[1,2]"),
                        std::invalid_argument);
    }
    SUBCASE("serialization round-trips bit-exactly") {
        RunConfig rc;
        rc.experiment.gamma = -0.7311;
        rc.tau_over_tau0 = 17.25;
        rc.dq_m = 2.47e-6;
        rc.t_lo = 0.05;
        rc.t_hi = 2.95;
        rc.t_steps = 59;
        const RunConfig back = parse_run_config(run_config_json(rc));
        CHECK(back.experiment.gamma == rc.experiment.gamma);
        CHECK(back.tau_over_tau0 == rc.tau_over_tau0);
        CHECK(back.dq_m == rc.dq_m);
        CHECK(back.t_lo == rc.t_lo);
        CHECK(back.t_hi == rc.t_hi);
        CHECK(back.t_steps == rc.t_steps);
        CHECK(run_config_json(back) == run_config_json(rc));
    }
    SUBCASE("grid construction") {
        RunConfig rc;
        rc.t_lo = 0.5;
        rc.t_hi = 0.5;
        rc.t_steps = 1;
        rc.validate();
        const auto grid = rc.t_grid();
        REQUIRE(grid.size() == 1);
        CHECK(grid[0] == 0.5);
        CHECK_THROWS_AS(
            [] {
                RunConfig bad;
                bad.t_steps = 2;
                bad.t_hi = bad.t_lo;
                bad.validate();
            }(),
            std::invalid_argument);
    }
}

TEST_CASE("config files") {
    const fs::path dir = fresh_dir("dsirr_cfg_test");
    SUBCASE("an empty file means defaults") {
        const fs::path p = dir / "empty.json";
        std::ofstream(p).close();
        const RunConfig rc = load_run_config(p.string());
        CHECK(rc.experiment.mass == 1.67e-27);
    }
    SUBCASE("a missing file is a usage error") {
        CHECK_THROWS_AS((void)load_run_config((dir / "nope.json").string()),
                        std::invalid_argument);
    }
}

TEST_CASE("reruns reproduce output files byte for byte") {
    RunConfig rc;
    rc.validate();

    SUBCASE("extrema table") {
        const fs::path d1 = fresh_dir("dsirr_ext_a");
        const fs::path d2 = fresh_dir("dsirr_ext_b");
        OutputOptions out;
        out.out_dir = d1.string();
        REQUIRE(cmd_extrema(rc, out) == 0);
        out.out_dir = d2.string();
        REQUIRE(cmd_extrema(rc, out) == 0);
        const std::string a = slurp(d1 / "extrema.csv");
        CHECK(a == slurp(d2 / "extrema.csv"));
        CHECK(a.find("# config:") != std::string::npos);
        CHECK(a.find("irrQ_rescaled,min") != std::string::npos);
    }
    SUBCASE("fit table") {
        const fs::path d1 = fresh_dir("dsirr_fit_a");
        const fs::path d2 = fresh_dir("dsirr_fit_b");
        OutputOptions out;
        out.out_dir = d1.string();
        REQUIRE(cmd_fit(rc, out) == 0);
        out.out_dir = d2.string();
        REQUIRE(cmd_fit(rc, out) == 0);
        CHECK(slurp(d1 / "fit.csv") == slurp(d2 / "fit.csv"));
    }
}

TEST_CASE("pattern command clamps non-physical snapshot times") {
    RunConfig rc;
    rc.validate();
    const fs::path dir = fresh_dir("dsirr_pat");
    OutputOptions out;
    out.out_dir = dir.string();
    out.t = 0.0;
    REQUIRE(cmd_pattern(rc, out) == 0);
    const std::string csv = slurp(dir / "pattern.csv");
    CHECK(csv.find("# t_over_tau0: 1e-06") != std::string::npos);
    CHECK(csv.find("# fringes_above_threshold:") != std::string::npos);

    out.threshold = 1.7;
    CHECK_THROWS_AS((void)cmd_pattern(rc, out), std::invalid_argument);
}

TEST_CASE("sweep command validates the quantity name") {
    RunConfig rc;
    rc.t_lo = 0.2;
    rc.t_hi = 1.0;
    rc.t_steps = 5;
    rc.validate();
    const fs::path dir = fresh_dir("dsirr_swp");
    OutputOptions out;
    out.out_dir = dir.string();
    out.quantity = "bogus";
    CHECK(throws_mentioning([&] { (void)cmd_sweep(rc, out); }, "bogus"));

    out.quantity = "dC";
    REQUIRE(cmd_sweep(rc, out) == 0);
    const std::string csv = slurp(dir / "sweep_dC.csv");
    CHECK(csv.find("t_over_tau0,dC") != std::string::npos);
}
