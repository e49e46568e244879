#include "rsv/fields.hpp"

#include <cmath>

#include "rsv/dynamics.hpp"

namespace rsv {

namespace {

double get_param(const ParamMap& p, const std::string& key, double def) {
    auto it = p.find(key);
    return it == p.end() ? def : it->second;
}

// Periodicise a localized profile by summing shifted images. Three images on
// each side keep the truncation far below round-off for sigma << L.
constexpr int kImages = 3;

}  // namespace

Field Bathymetry::sample(double t, const Grid& grid) const {
    Field out(grid.n);
    for (int i = 0; i < grid.n; ++i) out[i] = d(t, grid.nodes[i]);
    return out;
}
Field Bathymetry::sample_x(double t, const Grid& grid) const {
    Field out(grid.n);
    for (int i = 0; i < grid.n; ++i) out[i] = d_x(t, grid.nodes[i]);
    return out;
}
Field Bathymetry::sample_xx(double t, const Grid& grid) const {
    Field out(grid.n);
    for (int i = 0; i < grid.n; ++i) out[i] = d_xx(t, grid.nodes[i]);
    return out;
}
Field Bathymetry::sample_t(double t, const Grid& grid) const {
    Field out(grid.n);
    for (int i = 0; i < grid.n; ++i) out[i] = d_t(t, grid.nodes[i]);
    return out;
}
Field Bathymetry::sample_xt(double t, const Grid& grid) const {
    Field out(grid.n);
    for (int i = 0; i < grid.n; ++i) out[i] = d_xt(t, grid.nodes[i]);
    return out;
}

Gravity constant_gravity(double g0) {
    if (!(g0 > 0.0))
        throw std::invalid_argument("constant_gravity: g0 must be positive");
    Gravity g;
    g.g = [g0](double) { return g0; };
    g.gdot = [](double) { return 0.0; };
    g.constant = true;
    return g;
}

Gravity oscillating_gravity(double g0, double a, double omega) {
    if (!(g0 > 0.0) || std::fabs(a) >= 1.0)
        throw std::invalid_argument("oscillating_gravity: need g0 > 0 and |a| < 1");
    Gravity g;
    g.g = [=](double t) { return g0 * (1.0 + a * std::sin(omega * t)); };
    g.gdot = [=](double t) { return g0 * a * omega * std::cos(omega * t); };
    g.constant = (a == 0.0);
    return g;
}

Field depth(const State& state, const Bathymetry& bathy, const Grid& grid) {
    check_on_grid(state.eta, grid, "depth");
    Field h(grid.n);
    for (int i = 0; i < grid.n; ++i) h[i] = state.eta[i] + bathy.d(state.t, grid.nodes[i]);
    return h;
}

void require_positive_depth(const Field& h, double floor, double t) {
    const double hmin = field_min(h);
    if (!(hmin > floor))
        throw VacuumError("vacuum state: inf h = " + std::to_string(hmin) +
                          " at t = " + std::to_string(t));
}

Bathymetry preset_bathymetry(BathymetryKind kind, const ParamMap& params) {
    const double d_bar = get_param(params, "d_bar", 1.0);
    if (!(d_bar > 0.0))
        throw std::invalid_argument("preset_bathymetry: d_bar must be positive");

    Bathymetry b;
    b.d_bar = d_bar;

    switch (kind) {
        case BathymetryKind::flat: {
            b.d = [d_bar](double, double) { return d_bar; };
            b.d_x = [](double, double) { return 0.0; };
            b.d_xx = [](double, double) { return 0.0; };
            b.d_t = [](double, double) { return 0.0; };
            b.d_xt = [](double, double) { return 0.0; };
            b.moving = false;
            return b;
        }
        case BathymetryKind::gaussian_bump:
        case BathymetryKind::moving_bump: {
            const double a = get_param(params, "amplitude", 0.2);
            const double sigma = get_param(params, "sigma", 0.1);
            const double L = get_param(params, "L", 1.0);
            const double x0 = get_param(params, "x0", 0.5 * L);
            const double c = (kind == BathymetryKind::moving_bump)
                                 ? get_param(params, "speed", 0.1)
                                 : 0.0;
            if (a >= d_bar)
                throw std::invalid_argument(
                    "preset_bathymetry: bump amplitude must stay below d_bar to "
                    "keep inf d > 0");
            if (!(sigma > 0.0) || !(L > 0.0))
                throw std::invalid_argument("preset_bathymetry: sigma and L must be positive");

            auto bump = [=](double t, double x) {
                const double xc = x0 + c * t;
                double s = 0.0;
                for (int j = -kImages; j <= kImages; ++j) {
                    const double r = x - xc - j * L;
                    s += std::exp(-r * r / (2.0 * sigma * sigma));
                }
                return s;
            };
            auto bump_x = [=](double t, double x) {
                const double xc = x0 + c * t;
                double s = 0.0;
                for (int j = -kImages; j <= kImages; ++j) {
                    const double r = x - xc - j * L;
                    s += -r / (sigma * sigma) * std::exp(-r * r / (2.0 * sigma * sigma));
                }
                return s;
            };
            auto bump_xx = [=](double t, double x) {
                const double xc = x0 + c * t;
                double s = 0.0;
                for (int j = -kImages; j <= kImages; ++j) {
                    const double r = x - xc - j * L;
                    const double s2 = sigma * sigma;
                    s += (r * r / s2 - 1.0) / s2 * std::exp(-r * r / (2.0 * s2));
                }
                return s;
            };
            // Profile depends on x - x0(t) only, so d_t = -c d_x, d_xt = -c d_xx.
            b.d = [=](double t, double x) { return d_bar - a * bump(t, x); };
            b.d_x = [=](double t, double x) { return -a * bump_x(t, x); };
            b.d_xx = [=](double t, double x) { return -a * bump_xx(t, x); };
            b.d_t = [=](double t, double x) { return c * a * bump_x(t, x); };
            b.d_xt = [=](double t, double x) { return c * a * bump_xx(t, x); };
            b.moving = (c != 0.0);
            return b;
        }
    }
    throw std::invalid_argument("preset_bathymetry: unknown kind");
}

State preset_initial(InitialKind kind, const ParamMap& params,
                     const Bathymetry& bathy, const Grid& grid) {
    State s;
    s.t = 0.0;
    s.eta.assign(grid.n, 0.0);
    s.u.assign(grid.n, 0.0);

    switch (kind) {
        case InitialKind::lake_at_rest:
            break;
        case InitialKind::gaussian_eta: {
            const double a = get_param(params, "amplitude", 0.1);
            const double sigma = get_param(params, "sigma", 0.1 * grid.L);
            const double x0 = get_param(params, "x0", 0.5 * grid.L);
            for (int i = 0; i < grid.n; ++i) {
                double v = 0.0;
                for (int j = -kImages; j <= kImages; ++j) {
                    const double r = grid.nodes[i] - x0 - j * grid.L;
                    v += std::exp(-r * r / (2.0 * sigma * sigma));
                }
                s.eta[i] = a * v;
            }
            break;
        }
        case InitialKind::smoothed_dambreak: {
            // Two tanh fronts at L/4 and 3L/4 so the profile is periodic.
            const double etaL = get_param(params, "eta_left", 0.2);
            const double etaR = get_param(params, "eta_right", 0.0);
            const double w = get_param(params, "width", 0.05 * grid.L);
            if (w < 10.0 * grid.dx)
                throw std::invalid_argument(
                    "preset_initial: dam-break front width must be >= 10 dx");
            const double xa = 0.25 * grid.L;
            const double xb = 0.75 * grid.L;
            for (int i = 0; i < grid.n; ++i) {
                const double x = grid.nodes[i];
                const double step =
                    0.5 * (std::tanh((x - xa) / w) - std::tanh((x - xb) / w));
                s.eta[i] = etaR + (etaL - etaR) * step;
            }
            break;
        }
        case InitialKind::sine_wave: {
            const double a = get_param(params, "amplitude", 0.05);
            const double ua = get_param(params, "u_amplitude", 0.0);
            const int mode = static_cast<int>(get_param(params, "mode", 1.0));
            const double k = 2.0 * M_PI * mode / grid.L;
            for (int i = 0; i < grid.n; ++i) {
                s.eta[i] = a * std::sin(k * grid.nodes[i]);
                s.u[i] = ua * std::sin(k * grid.nodes[i]);
            }
            break;
        }
    }

    const Field h = depth(s, bathy, grid);
    if (!(field_min(h) > 0.0))
        throw std::invalid_argument(
            "preset_initial: resulting depth is not positive everywhere");
    return s;
}

BathymetryKind bathymetry_kind_from_string(const std::string& s) {
    if (s == "flat") return BathymetryKind::flat;
    if (s == "gaussian_bump") return BathymetryKind::gaussian_bump;
    if (s == "moving_bump") return BathymetryKind::moving_bump;
    throw std::invalid_argument("unknown bathymetry kind: " + s);
}

InitialKind initial_kind_from_string(const std::string& s) {
    if (s == "lake_at_rest") return InitialKind::lake_at_rest;
    if (s == "gaussian_eta") return InitialKind::gaussian_eta;
    if (s == "smoothed_dambreak") return InitialKind::smoothed_dambreak;
    if (s == "sine_wave") return InitialKind::sine_wave;
    throw std::invalid_argument("unknown initial kind: " + s);
}

State MmsTarget::sample(double t, const Grid& grid) const {
    State s;
    s.t = t;
    s.eta.resize(grid.n);
    s.u.resize(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        s.eta[i] = eta(t, grid.nodes[i]);
        s.u[i] = u(t, grid.nodes[i]);
    }
    return s;
}

MmsTarget travelling_wave_target(double amplitude, int mode, double L, double omega) {
    const double k = 2.0 * M_PI * mode / L;
    MmsTarget m;
    m.eta = [=](double t, double x) { return amplitude * std::cos(k * x - omega * t); };
    m.eta_t = [=](double t, double x) { return amplitude * omega * std::sin(k * x - omega * t); };
    m.u = [=](double t, double x) { return amplitude * std::sin(k * x - omega * t); };
    m.u_t = [=](double t, double x) { return -amplitude * omega * std::cos(k * x - omega * t); };
    return m;
}

std::pair<Field, Field> mms_forcing(const MmsTarget& target, const Bathymetry& bathy,
                                    const Gravity& grav, double eps,
                                    const Grid& grid, double t) {
    const State s = target.sample(t, grid);
    const Tendency rhs = evaluate_tendency(s, bathy, grav, eps, grid);
    Field s_eta(grid.n), s_u(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        const double x = grid.nodes[i];
        s_eta[i] = target.eta_t(t, x) - rhs.deta_dt[i];
        s_u[i] = target.u_t(t, x) - rhs.du_dt[i];
    }
    return {std::move(s_eta), std::move(s_u)};
}

}  // namespace rsv
