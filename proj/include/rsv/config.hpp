#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "rsv/fields.hpp"
#include "rsv/integrate.hpp"

namespace rsv {

class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

enum class RunMode { simulate, picard, mms_convergence, operator_probe };

std::string to_string(RunMode m);

struct GravitySpec {
    std::string kind = "constant";  // constant | oscillating
    double g0 = 9.81;
    double amplitude = 0.0;  // relative, oscillating only
    double omega = 0.0;

    Gravity build() const;
};

struct ScenarioSpec {
    std::string initial_kind = "lake_at_rest";
    ParamMap initial_params;
    std::string bathymetry_kind = "flat";
    ParamMap bathymetry_params;
};

struct MmsSpec {
    double amplitude = 0.02;
    int mode = 1;
    double omega = 2.0 * M_PI;
    double t_end = 0.25;
    std::vector<int> grids = {64, 128, 256, 512};
    int ref_n = 4096;
};

struct PicardSpec {
    double T = 0.05;
    int iterations = 6;
};

struct ProbeSpec {
    unsigned long long seed = 1;
    int samples = 100;
    int n = 256;
    double eps = 1.0;
};

struct OutputSpec {
    std::string directory = "out";
    bool csv = true;
    bool json = false;
    int snapshot_every = 0;  // in records; 0 disables snapshots
};

struct RunConfig {
    double L = 1.0;
    int n = 256;
    ScenarioSpec scenario;
    double eps = 1.0;
    GravitySpec gravity;
    StepControl control;
    RunMode mode = RunMode::simulate;
    OutputSpec output;
    MmsSpec mms;
    PicardSpec picard;
    ProbeSpec probe;
};

// Parse and validate a JSON config file; unknown keys are rejected with the
// offending key named, constraint violations with the constraint named.
RunConfig parse_config(const std::string& path);
RunConfig parse_config_text(const std::string& text);

std::string config_to_json(const RunConfig& cfg);

}  // namespace rsv
