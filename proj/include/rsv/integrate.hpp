#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "rsv/diagnostics.hpp"
#include "rsv/dynamics.hpp"
#include "rsv/fields.hpp"
#include "rsv/grid.hpp"

namespace rsv {

struct StepControl {
    double cfl = 0.4;            // in (0, 1]
    double dt_max = 1e9;
    double t_end = 1.0;
    int record_every = 1;
    BlowupThresholds thresholds;
};

// Optional extra right-hand side (S_eta, S_u)(t), used by manufactured-
// solution runs.
using Forcing = std::function<std::pair<Field, Field>(double t)>;

// dt = min(dt_max, cfl * dx / max |u -/+ sqrt(g h)|).
double cfl_dt(const State& state, const Bathymetry& bathy, const Gravity& grav,
              const Grid& grid, const StepControl& ctrl);

// Classical four-stage Runge-Kutta step; bathymetry and gravity are evaluated
// at the stage times t, t+dt/2, t+dt/2, t+dt. A vacuum at any stage raises
// VacuumError naming the stage.
State rk4_step(const State& state, const Bathymetry& bathy, const Gravity& grav,
               double eps, const Grid& grid, double dt,
               const Forcing* forcing = nullptr);

struct RunResult {
    State final_state;
    RunHistory history;
    RunStatus status = RunStatus::ok;
    int steps = 0;
};

// Called with the state snapshot each time a record is emitted.
using RecordSink = std::function<void(const State&, const DiagnosticsRecord&)>;

// Advance to t_end (the final step is truncated to land on it exactly) or
// until a blow-up monitor trips; a record is emitted every record_every steps
// and always at the first and last step.
RunResult run(const State& initial, const Bathymetry& bathy, const Gravity& grav,
              double eps, const Grid& grid, const StepControl& ctrl,
              const Forcing* forcing = nullptr, const RecordSink& sink = {});

struct PicardReport {
    std::vector<std::vector<State>> iterates;  // iterates[0] is the frozen datum
    std::vector<std::vector<double>> etilde;   // etilde[k][j]: E~^{k+1}(t_j)
    std::vector<double> etilde_T;              // E~^{k+1}(T)
    std::vector<double> ratios;                // E~^{k+1}(T) / E~^{k}(T)
    double dt = 0.0;
    int steps = 0;
};

// Frozen-coefficient iteration: each pass integrates the linear system
//   dW/dt + B(W^n) W_x = F(W^n)
// with RK4, reading the coefficients from the stored trajectory of the
// previous iterate (linear interpolation at stage times). The difference
// energy uses the discrete H^1 proxy weighted by A(W^n) = diag(g/h^n, 1).
PicardReport picard_solve(const State& initial, const Bathymetry& bathy,
                          const Gravity& grav, double eps, const Grid& grid,
                          double T, int n_iters, double cfl = 0.4);

}  // namespace rsv
