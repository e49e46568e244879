#include <doctest.h>

#include "rsv/config.hpp"

using namespace rsv;

TEST_CASE("empty config gives documented defaults") {
    const RunConfig cfg = parse_config_text("{}");
    CHECK(cfg.L == 1.0);
    CHECK(cfg.n == 256);
    CHECK(cfg.eps == 1.0);
    CHECK(cfg.gravity.kind == "constant");
    CHECK(cfg.gravity.g0 == 9.81);
    CHECK(cfg.control.cfl == 0.4);
    CHECK(cfg.scenario.initial_kind == "lake_at_rest");
    CHECK(cfg.scenario.bathymetry_kind == "flat");
    CHECK(cfg.mode == RunMode::simulate);
    CHECK(cfg.output.csv);
    CHECK(!cfg.output.json);
}

TEST_CASE("full config round-trips through every section") {
    const char* text = R"({
        "grid": {"L": 2.0, "n": 128},
        "scenario": {
            "initial": {"kind": "gaussian_eta", "amplitude": 0.05, "width": 0.2},
            "bathymetry": {"kind": "gaussian_bump", "amplitude": 0.3, "d_bar": 1.5}
        },
        "physics": {"eps": 0.5,
                    "gravity": {"kind": "oscillating", "g0": 1.0,
                                "amplitude": 0.1, "omega": 3.0}},
        "control": {"cfl": 0.25, "t_end": 0.5, "record_every": 4},
        "mode": "picard",
        "output": {"directory": "run1", "formats": ["csv", "json"],
                   "snapshot_every": 10},
        "mms": {"amplitude": 0.01, "grids": [64, 128], "ref_n": 1024},
        "picard": {"T": 0.1, "iterations": 4},
        "probe": {"seed": 7, "samples": 20, "n": 64, "eps": 2.0}
    })";
    const RunConfig cfg = parse_config_text(text);
    CHECK(cfg.L == 2.0);
    CHECK(cfg.n == 128);
    CHECK(cfg.eps == 0.5);
    CHECK(cfg.gravity.kind == "oscillating");
    CHECK(cfg.gravity.amplitude == 0.1);
    CHECK(cfg.control.cfl == 0.25);
    CHECK(cfg.control.record_every == 4);
    CHECK(cfg.mode == RunMode::picard);
    CHECK(cfg.output.directory == "run1");
    CHECK(cfg.output.json);
    CHECK(cfg.scenario.initial_params.at("amplitude") == 0.05);
    CHECK(cfg.scenario.bathymetry_params.at("d_bar") == 1.5);
    CHECK(cfg.mms.grids == std::vector<int>{64, 128});
    CHECK(cfg.picard.iterations == 4);
    CHECK(cfg.probe.seed == 7);
}

TEST_CASE("unknown keys are rejected with the key named") {
    CHECK_THROWS_WITH_AS(parse_config_text(R"({"gird": {}})"),
                         "unknown key 'gird'", ConfigError);
    CHECK_THROWS_WITH_AS(parse_config_text(R"({"grid": {"m": 4}})"),
                         "unknown key 'grid.m'", ConfigError);
    CHECK_THROWS_WITH_AS(parse_config_text(R"({"control": {"dt": 0.1}})"),
                         "unknown key 'control.dt'", ConfigError);
}

TEST_CASE("constraint violations name the constraint") {
    CHECK_THROWS_WITH_AS(parse_config_text(R"({"physics": {"eps": -1.0}})"),
                         "physics.eps must satisfy eps >= 0", ConfigError);
    CHECK_THROWS_WITH_AS(parse_config_text(R"({"grid": {"n": 4}})"),
                         "grid.n must satisfy n >= 8", ConfigError);
    CHECK_THROWS_WITH_AS(parse_config_text(R"({"control": {"cfl": 1.5}})"),
                         "control.cfl must lie in (0, 1]", ConfigError);
    CHECK_THROWS_AS(parse_config_text(R"({
        "scenario": {"bathymetry": {"kind": "gaussian_bump",
                                    "amplitude": 1.0, "d_bar": 1.0}}})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config_text(R"({"mode": "simulte"})"), ConfigError);
    CHECK_THROWS_AS(parse_config_text(R"({"mms": {"grids": [100], "ref_n": 4096}})"),
                    ConfigError);
}

TEST_CASE("malformed JSON reports a parse error") {
    CHECK_THROWS_AS(parse_config_text("{"), ConfigError);
    CHECK_THROWS_AS(parse_config_text(R"(["not", "an", "object"])"), ConfigError);
}

TEST_CASE("serialised config parses back to the same values") {
    const char* text = R"({
        "grid": {"L": 3.0, "n": 64},
        "physics": {"eps": 0.25},
        "mode": "operator_probe",
        "probe": {"seed": 42, "samples": 5, "n": 32}
    })";
    const RunConfig a = parse_config_text(text);
    const RunConfig b = parse_config_text(config_to_json(a));
    CHECK(b.L == a.L);
    CHECK(b.n == a.n);
    CHECK(b.eps == a.eps);
    CHECK(b.mode == a.mode);
    CHECK(b.probe.seed == a.probe.seed);
    CHECK(config_to_json(a) == config_to_json(b));
}
