#pragma once

#include <string>
#include <vector>

#include "rsv/fields.hpp"
#include "rsv/grid.hpp"

namespace rsv {

enum class RunStatus { ok, vacuum, gradient_blowup };

std::string to_string(RunStatus s);

// One diagnostics sample. Serialises to a CSV row / JSON object with the
// column order fixed as:
//   t, mass, energy, energy_source_integral, sup_Wx, inf_h, h2_norm, status
struct DiagnosticsRecord {
    double t = 0.0;
    double mass = 0.0;
    double energy = 0.0;
    double energy_source_integral = 0.0;
    double sup_Wx = 0.0;
    double inf_h = 0.0;
    double h2_norm = 0.0;
    RunStatus status = RunStatus::ok;
};

std::string csv_header();
std::string to_csv_row(const DiagnosticsRecord& r);
std::string to_json_object(const DiagnosticsRecord& r);

// Record trail of a run plus the per-record extras the envelope checks need
// (depth snapshots for the source quadrature, sup |u_x| for characteristics).
struct RunHistory {
    std::vector<DiagnosticsRecord> records;
    std::vector<Field> h_snapshots;
    std::vector<double> sup_ux;
    std::vector<double> sup_h;
};

// Total energy: integral of
//   h u^2 / 2 + eps h^3 u_x^2 / 2 + g eta^2 / 2 + eps g h^2 eta_x^2 / 2.
double energy_total(const State& state, const Bathymetry& bathy, const Gravity& grav,
                    double eps, const Grid& grid);

// Integral of the energy-balance source density
//   gdot (eta^2 + eps h^2 eta_x^2) / 2 - g eta d_t - eps g h^2 eta_x d_xt;
// identically zero for a fixed bottom under constant gravity.
double energy_source(const State& state, const Bathymetry& bathy, const Gravity& grav,
                     double eps, const Grid& grid);

// r(t_k) = centred difference of the recorded energy minus the recorded
// source rate; one value per interior record.
std::vector<double> energy_balance_residual(const std::vector<DiagnosticsRecord>& records,
                                            const std::vector<double>& source_rate);

// Upper envelope from integrating E' <= (|gdot|/g + 1) E + (g/2) int(d_t^2 +
// eps h^2 d_xt^2) between records (trapezoid in the coefficients).
std::vector<double> gronwall_bound(const RunHistory& history, const Gravity& grav,
                                   const Bathymetry& bathy, double eps,
                                   const Grid& grid);

// Discrete Sobolev-norm proxy via repeated central differencing, order 0..2.
double sobolev_proxy(const State& state, const Grid& grid, int order);

struct BlowupThresholds {
    // Gradient trigger: sup_Wx > sup_wx_factor * (initial sup_Wx + 1).
    double sup_wx_factor = 1e3;
    // Vacuum trigger: inf h < inf_h_factor * d_bar.
    double inf_h_factor = 1e-6;
};

// Vacuum takes precedence over the gradient criterion.
RunStatus blowup_check(double sup_Wx, double inf_h, double sup_wx_limit,
                       double inf_h_limit);

// Convenience overload evaluating sup_Wx and inf h from the state.
RunStatus blowup_check(const State& state, const Bathymetry& bathy, const Grid& grid,
                       double sup_wx_limit, double inf_h_limit);

}  // namespace rsv
