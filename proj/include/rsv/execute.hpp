#pragma once

#include "rsv/config.hpp"

namespace rsv {

// Process exit codes reported by the CLI.
enum ExitCode : int {
    exit_ok = 0,
    exit_config_error = 2,
    exit_vacuum = 3,
    exit_gradient_blowup = 4,
};

struct MmsCase {
    int n = 0;
    double error = 0.0;
    double order = 0.0;  // vs the previous (coarser) case; 0 for the first
};

struct MmsResult {
    std::vector<MmsCase> cases;
};

struct ProbeResult {
    double max_roundtrip_rel = 0.0;   // worst apply(solve(rhs)) residual
    double min_spd_quotient = 0.0;    // min of v.Av / (h_inf |v|^2)
    double c_min = 0.0, c_max = 0.0;  // spread of the measured H1/L2 bound
};

// Individual mode drivers (exposed for tests; execute() wires in the I/O).
RunResult run_simulation(const RunConfig& cfg);
PicardReport run_picard(const RunConfig& cfg);
MmsResult run_mms(const RunConfig& cfg);
ProbeResult run_probe(const RunConfig& cfg);

// Runs the configured mode, writes all artifacts into output.directory
// (diagnostics, snapshots, tables, manifest), returns the process exit code.
int execute(const RunConfig& cfg);

}  // namespace rsv
