#pragma once

#include <functional>
#include <map>
#include <string>

#include "rsv/grid.hpp"

namespace rsv {

// Thrown when the total depth h = eta + d touches zero (or goes negative):
// the non-zero depth condition underpinning invertibility of the elliptic
// operator fails and the model leaves its regime of validity.
class VacuumError : public std::runtime_error {
  public:
    explicit VacuumError(const std::string& msg) : std::runtime_error(msg) {}
};

// Surface elevation and depth-averaged velocity at one instant.
struct State {
    Field eta;
    Field u;
    double t = 0.0;
};

// Bottom profile d(t,x) with analytic derivatives. The solver never
// differentiates d numerically: the energy diagnostics need d_xt, and a
// nested finite difference there would contaminate the balance residual.
struct Bathymetry {
    std::function<double(double, double)> d;     // d(t, x)
    std::function<double(double, double)> d_x;
    std::function<double(double, double)> d_xx;
    std::function<double(double, double)> d_t;
    std::function<double(double, double)> d_xt;
    double d_bar = 1.0;   // mean depth, used as the reference level
    bool moving = false;  // true when d_t or d_xt can be nonzero

    Field sample(double t, const Grid& grid) const;
    Field sample_x(double t, const Grid& grid) const;
    Field sample_xx(double t, const Grid& grid) const;
    Field sample_t(double t, const Grid& grid) const;
    Field sample_xt(double t, const Grid& grid) const;
};

struct Gravity {
    std::function<double(double)> g;     // g(t) > 0
    std::function<double(double)> gdot;  // dg/dt
    bool constant = true;
};

Gravity constant_gravity(double g0);
// g(t) = g0 * (1 + a*sin(omega*t)); requires |a| < 1.
Gravity oscillating_gravity(double g0, double a, double omega);

// Total depth h_i = eta_i + d(t, x_i).
Field depth(const State& state, const Bathymetry& bathy, const Grid& grid);

// Throws VacuumError if inf h <= floor.
void require_positive_depth(const Field& h, double floor, double t);

enum class BathymetryKind { flat, gaussian_bump, moving_bump };
enum class InitialKind { lake_at_rest, gaussian_eta, smoothed_dambreak, sine_wave };

// Named scenario parameters; missing keys fall back to documented defaults.
using ParamMap = std::map<std::string, double>;

Bathymetry preset_bathymetry(BathymetryKind kind, const ParamMap& params);
State preset_initial(InitialKind kind, const ParamMap& params,
                     const Bathymetry& bathy, const Grid& grid);

BathymetryKind bathymetry_kind_from_string(const std::string& s);
InitialKind initial_kind_from_string(const std::string& s);

// Analytic target fields for manufactured-solution runs. Time derivatives are
// supplied analytically so the forcing residual carries no extra time error.
struct MmsTarget {
    std::function<double(double, double)> eta;    // eta(t, x)
    std::function<double(double, double)> eta_t;
    std::function<double(double, double)> u;      // u(t, x)
    std::function<double(double, double)> u_t;

    State sample(double t, const Grid& grid) const;
};

// Travelling-wave target eta = a*cos(k x - omega t), u = a*sin(k x - omega t)
// with k = 2*pi*mode/L.
MmsTarget travelling_wave_target(double amplitude, int mode, double L, double omega);

// Residual (S_eta, S_u) such that the sampled target solves the semi-discrete
// evolution system with S added to each right-hand side; every term is
// evaluated with the module's own discrete operators on the given grid.
std::pair<Field, Field> mms_forcing(const MmsTarget& target, const Bathymetry& bathy,
                                    const Gravity& grav, double eps,
                                    const Grid& grid, double t);

}  // namespace rsv
