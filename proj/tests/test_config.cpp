#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>

#include "tdsts/config.hpp"

using namespace tdsts;

TEST_CASE("defaults") {
    const auto cfg = parse_config_text("{}");
    CHECK(cfg.state.osc.m == 1.0);
    CHECK(cfg.state.alpha.re == 0.0);
    CHECK(cfg.state.z.r == 0.0);
    CHECK(cfg.time_grid.count == 1);
    CHECK(cfg.grid_x.points == 201);
    CHECK(cfg.oracle.fock_cutoff == 60);
    CHECK(cfg.oracle.quad_points == 2001);
    CHECK(cfg.output.format == "csv");
    CHECK(cfg.output.path == "-");
}

TEST_CASE("full config round trip") {
    const char* text = R"({
        "state": {
            "units": {"m": 2.0, "omega": 0.5, "hbar": 1.5, "kb": 2.0},
            "alpha": {"re": 0.5, "im": 0.3},
            "squeeze": {"r": 0.7, "phi": 1.0},
            "temps": {"input": [{"tau": 1.0}, {"T": 0.25}], "detector": [{"T": 0.5}]}
        },
        "time_grid": {"start": 0.0, "stop": 6.0, "count": 4},
        "grids": {"x": {"halfwidth_sigmas": 6.0, "points": 101}},
        "oracle": {"fock_cutoff": 80, "quad_points": 1001},
        "output": {"format": "json", "path": "out.json"}
    })";
    const auto cfg = parse_config_text(text);
    CHECK(cfg.state.osc.omega == 0.5);
    CHECK(cfg.state.alpha.im == 0.3);
    CHECK(cfg.state.z.r == 0.7);
    // tau converts with the configured constants: T = tau*hbar*omega/kb
    CHECK(cfg.state.thermal.input_temps[0] ==
          doctest::Approx(1.0 * 1.5 * 0.5 / 2.0));
    CHECK(cfg.state.thermal.input_temps[1] == 0.25);
    CHECK(cfg.state.thermal.detector_temps[0] == 0.5);
    CHECK(cfg.time_grid.at(0) == 0.0);
    CHECK(cfg.time_grid.at(3) == doctest::Approx(6.0));
    CHECK(cfg.grid_x.points == 101);
    CHECK(cfg.grid_p.points == 201);  // untouched axis keeps its default
    CHECK(cfg.oracle.fock_cutoff == 80);
    CHECK(cfg.output.format == "json");
}

TEST_CASE("alpha polar form") {
    const auto cfg = parse_config_text(
        R"({"state": {"alpha": {"mod": 2.0, "arg": 0.5}}})");
    CHECK(cfg.state.alpha.re == doctest::Approx(2.0 * std::cos(0.5)));
    CHECK(cfg.state.alpha.im == doctest::Approx(2.0 * std::sin(0.5)));
}

TEST_CASE("squeeze phase is normalized into [0, 2pi)") {
    const auto cfg = parse_config_text(
        R"({"state": {"squeeze": {"r": 0.3, "phi": -1.0}}})");
    CHECK(cfg.state.z.phi == doctest::Approx(2.0 * 3.14159265358979312 - 1.0));
}

TEST_CASE("rejections") {
    CHECK_THROWS_AS(parse_config_text("not json"), ConfigError);
    CHECK_THROWS_AS(parse_config_text(R"({"bogus": 1})"), ConfigError);
    CHECK_THROWS_AS(parse_config_text(R"({"state": {"alpha": {"re": 1, "mod": 1}}})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config_text(R"({"state": {"alpha": {"q": 1}}})"), ConfigError);
    CHECK_THROWS_AS(
        parse_config_text(R"({"state": {"temps": {"input": [{"T": 1, "tau": 1}]}}})"),
        ConfigError);
    CHECK_THROWS_AS(parse_config_text(R"({"state": {"temps": {"input": [{}]}}})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config_text(R"({"state": {"temps": {"input": [{"T": -1}]}}})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config_text(R"({"state": {"squeeze": {"r": -0.5}}})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config_text(R"({"time_grid": {"count": 0}})"), ConfigError);
    CHECK_THROWS_AS(parse_config_text(R"({"oracle": {"quad_points": 200}})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config_text(R"({"output": {"format": "xml"}})"), ConfigError);
    CHECK_THROWS_AS(parse_config_text(R"({"state": {"units": {"m": 0}}})"), ConfigError);
}

TEST_CASE("environment override of the fock cutoff") {
    const std::string path = "config_env_test.json";
    {
        std::ofstream out(path);
        out << R"({"oracle": {"fock_cutoff": 60}})";
    }
    setenv("TDSTS_FOCK_CUTOFF", "96", 1);
    const auto cfg = load_config_file(path);
    CHECK(cfg.oracle.fock_cutoff == 96);
    setenv("TDSTS_FOCK_CUTOFF", "abc", 1);
    CHECK_THROWS_AS(load_config_file(path), ConfigError);
    unsetenv("TDSTS_FOCK_CUTOFF");
    std::remove(path.c_str());
}
