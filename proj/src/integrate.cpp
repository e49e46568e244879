#include "rsv/integrate.hpp"

#include <cmath>
#include <limits>

#include "rsv/sturm_liouville.hpp"

namespace rsv {

namespace {

void axpy(Field& y, double a, const Field& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

Tendency forced_tendency(const State& s, const Bathymetry& bathy, const Gravity& grav,
                         double eps, const Grid& grid, const Forcing* forcing) {
    Tendency t = evaluate_tendency(s, bathy, grav, eps, grid);
    if (forcing) {
        auto [s_eta, s_u] = (*forcing)(s.t);
        axpy(t.deta_dt, 1.0, s_eta);
        axpy(t.du_dt, 1.0, s_u);
    }
    return t;
}

DiagnosticsRecord make_record(const State& s, const Bathymetry& bathy,
                              const Gravity& grav, double eps, const Grid& grid,
                              double esrc_integral, RunStatus status,
                              RunHistory& history) {
    const Field h = depth(s, bathy, grid);
    const Field etax = ddx(s.eta, grid);
    const Field ux = ddx(s.u, grid);

    DiagnosticsRecord r;
    r.t = s.t;
    r.mass = quad(h, grid);
    // A state can reach a record with h <= 0 even though every RK stage saw a
    // positive depth; keep the record trail alive in that case.
    try {
        r.energy = energy_total(s, bathy, grav, eps, grid);
    } catch (const VacuumError&) {
        r.energy = std::numeric_limits<double>::quiet_NaN();
    }
    r.energy_source_integral = esrc_integral;
    r.sup_Wx = std::max(field_max_abs(etax), field_max_abs(ux));
    r.inf_h = field_min(h);
    r.h2_norm = sobolev_proxy(s, grid, 2);
    r.status = status;

    history.records.push_back(r);
    history.h_snapshots.push_back(h);
    history.sup_ux.push_back(field_max_abs(ux));
    history.sup_h.push_back(field_max(h));
    return r;
}

}  // namespace

double cfl_dt(const State& state, const Bathymetry& bathy, const Gravity& grav,
              const Grid& grid, const StepControl& ctrl) {
    auto [lm, lp] = char_speeds(state, bathy, grav, grid);
    const double smax = std::max(field_max_abs(lm), field_max_abs(lp));
    if (!(smax > 0.0)) return ctrl.dt_max;
    return std::min(ctrl.dt_max, ctrl.cfl * grid.dx / smax);
}

State rk4_step(const State& state, const Bathymetry& bathy, const Gravity& grav,
               double eps, const Grid& grid, double dt, const Forcing* forcing) {
    if (!(dt > 0.0)) throw std::invalid_argument("rk4_step: dt must be positive");

    auto stage = [&](double t_stage, const Field& eta, const Field& u, int index) {
        State s;
        s.t = t_stage;
        s.eta = eta;
        s.u = u;
        try {
            return forced_tendency(s, bathy, grav, eps, grid, forcing);
        } catch (const VacuumError& e) {
            throw VacuumError(std::string(e.what()) + " (RK stage " +
                              std::to_string(index) + ")");
        }
    };

    const double t = state.t;
    const Tendency k1 = stage(t, state.eta, state.u, 1);

    Field eta2 = state.eta, u2 = state.u;
    axpy(eta2, 0.5 * dt, k1.deta_dt);
    axpy(u2, 0.5 * dt, k1.du_dt);
    const Tendency k2 = stage(t + 0.5 * dt, eta2, u2, 2);

    Field eta3 = state.eta, u3 = state.u;
    axpy(eta3, 0.5 * dt, k2.deta_dt);
    axpy(u3, 0.5 * dt, k2.du_dt);
    const Tendency k3 = stage(t + 0.5 * dt, eta3, u3, 3);

    Field eta4 = state.eta, u4 = state.u;
    axpy(eta4, dt, k3.deta_dt);
    axpy(u4, dt, k3.du_dt);
    const Tendency k4 = stage(t + dt, eta4, u4, 4);

    State out;
    out.t = t + dt;
    out.eta = state.eta;
    out.u = state.u;
    const double w = dt / 6.0;
    for (int i = 0; i < grid.n; ++i) {
        out.eta[i] += w * (k1.deta_dt[i] + 2.0 * k2.deta_dt[i] +
                           2.0 * k3.deta_dt[i] + k4.deta_dt[i]);
        out.u[i] += w * (k1.du_dt[i] + 2.0 * k2.du_dt[i] +
                         2.0 * k3.du_dt[i] + k4.du_dt[i]);
    }
    return out;
}

RunResult run(const State& initial, const Bathymetry& bathy, const Gravity& grav,
              double eps, const Grid& grid, const StepControl& ctrl,
              const Forcing* forcing, const RecordSink& sink) {
    if (!(ctrl.cfl > 0.0 && ctrl.cfl <= 1.0))
        throw std::invalid_argument("run: cfl must be in (0, 1]");
    if (!(ctrl.t_end > 0.0))
        throw std::invalid_argument("run: t_end must be positive");

    const double sup_wx0 =
        std::max(field_max_abs(ddx(initial.eta, grid)), field_max_abs(ddx(initial.u, grid)));
    const double sup_wx_limit = ctrl.thresholds.sup_wx_factor * (sup_wx0 + 1.0);
    const double inf_h_limit = ctrl.thresholds.inf_h_factor * bathy.d_bar;

    RunResult res;
    res.final_state = initial;
    State& s = res.final_state;

    double esrc_integral = 0.0;
    double source_prev = energy_source(s, bathy, grav, eps, grid);
    {
        const DiagnosticsRecord r0 = make_record(s, bathy, grav, eps, grid,
                                                 esrc_integral, RunStatus::ok,
                                                 res.history);
        if (sink) sink(s, r0);
    }

    const double t_end = ctrl.t_end;
    while (s.t < t_end * (1.0 - 1e-14)) {
        double dt = cfl_dt(s, bathy, grav, grid, ctrl);
        if (s.t + dt > t_end) dt = t_end - s.t;

        try {
            s = rk4_step(s, bathy, grav, eps, grid, dt, forcing);
        } catch (const VacuumError&) {
            res.status = RunStatus::vacuum;
            const DiagnosticsRecord r = make_record(s, bathy, grav, eps, grid,
                                                    esrc_integral, res.status,
                                                    res.history);
            if (sink) sink(s, r);
            return res;
        }
        ++res.steps;

        double source_now = 0.0;
        try {
            source_now = energy_source(s, bathy, grav, eps, grid);
        } catch (const VacuumError&) {
        }
        esrc_integral += 0.5 * dt * (source_prev + source_now);
        source_prev = source_now;

        const RunStatus status =
            blowup_check(s, bathy, grid, sup_wx_limit, inf_h_limit);
        const bool last = !(s.t < t_end * (1.0 - 1e-14));
        if (status != RunStatus::ok) {
            res.status = status;
            const DiagnosticsRecord r = make_record(s, bathy, grav, eps, grid,
                                                    esrc_integral, status,
                                                    res.history);
            if (sink) sink(s, r);
            return res;
        }
        if (res.steps % ctrl.record_every == 0 || last) {
            const DiagnosticsRecord r = make_record(s, bathy, grav, eps, grid,
                                                    esrc_integral, status,
                                                    res.history);
            if (sink) sink(s, r);
        }
    }
    return res;
}

namespace {

// Linear interpolation of a stored trajectory at an arbitrary time in [0, T].
State interp_state(const std::vector<State>& traj, double dt, double t) {
    const int m = static_cast<int>(traj.size()) - 1;
    double pos = t / dt;
    if (pos <= 0.0) return traj.front();
    if (pos >= m) return traj.back();
    const int j = static_cast<int>(pos);
    const double w = pos - j;
    State out;
    out.t = t;
    const int n = static_cast<int>(traj[j].eta.size());
    out.eta.resize(n);
    out.u.resize(n);
    for (int i = 0; i < n; ++i) {
        out.eta[i] = (1.0 - w) * traj[j].eta[i] + w * traj[j + 1].eta[i];
        out.u[i] = (1.0 - w) * traj[j].u[i] + w * traj[j + 1].u[i];
    }
    return out;
}

// Right-hand side of the frozen-coefficient linear system at one stage time.
Tendency linear_tendency(const Field& eta, const Field& u, double t,
                         const State& frozen, const Bathymetry& bathy,
                         const Gravity& grav, double eps, const Grid& grid) {
    const int n = grid.n;
    const double g = grav.g(t);
    State fz = frozen;
    fz.t = t;
    const Field hn = depth(fz, bathy, grid);
    require_positive_depth(hn, 0.0, t);
    const Field un = frozen.u;

    const Field etax = ddx(eta, grid);
    const Field ux = ddx(u, grid);

    Tendency out;
    out.deta_dt.resize(n);
    out.du_dt.resize(n);
    for (int i = 0; i < n; ++i) {
        const double x = grid.nodes[i];
        out.deta_dt[i] = -(un[i] * etax[i] + hn[i] * ux[i]) - bathy.d_t(t, x) -
                         un[i] * bathy.d_x(t, x);
        out.du_dt[i] = -(g * etax[i] + un[i] * ux[i]);
    }

    if (eps > 0.0) {
        const Field etanx = ddx(frozen.eta, grid);
        const Field unx = ddx(un, grid);
        const SLOperator op = assemble(hn, eps, grid);

        Field arg(n), src(n);
        bool src_nonzero = false;
        for (int i = 0; i < n; ++i) {
            const double x = grid.nodes[i];
            const double h2 = hn[i] * hn[i];
            const double h3 = h2 * hn[i];
            arg[i] = 2.0 * h3 * unx[i] * unx[i] -
                     0.5 * g * h2 *
                         (etanx[i] * etanx[i] + 2.0 * etanx[i] * bathy.d_x(t, x));
            src[i] = h2 * etanx[i] * bathy.d_xx(t, x);
            src_nonzero = src_nonzero || (src[i] != 0.0);
        }
        const Field nl = solve_dx(op, arg, grid);
        for (int i = 0; i < n; ++i) out.du_dt[i] -= eps * nl[i];
        if (src_nonzero) {
            const Field sol = solve(op, src);
            for (int i = 0; i < n; ++i) out.du_dt[i] += eps * g * sol[i];
        }
    }
    return out;
}

// Difference energy between consecutive iterates: H^1 proxy weighted by
// A = diag(g/h_prev, 1).
double difference_energy(const State& w_new, const State& w_prev,
                         const Bathymetry& bathy, const Gravity& grav,
                         const Grid& grid) {
    const double g = grav.g(w_prev.t);
    State prev = w_prev;
    const Field h = depth(prev, bathy, grid);
    Field de(grid.n), du(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        de[i] = w_new.eta[i] - w_prev.eta[i];
        du[i] = w_new.u[i] - w_prev.u[i];
    }
    const Field dex = ddx(de, grid);
    const Field dux = ddx(du, grid);
    Field density(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        density[i] = (g / h[i]) * (de[i] * de[i] + dex[i] * dex[i]) +
                     du[i] * du[i] + dux[i] * dux[i];
    }
    return quad(density, grid);
}

}  // namespace

PicardReport picard_solve(const State& initial, const Bathymetry& bathy,
                          const Gravity& grav, double eps, const Grid& grid,
                          double T, int n_iters, double cfl) {
    if (!(T > 0.0)) throw std::invalid_argument("picard_solve: T must be positive");
    if (n_iters < 2)
        throw std::invalid_argument("picard_solve: need at least 2 iterations");

    StepControl ctrl;
    ctrl.cfl = cfl;
    const double dt0 = cfl_dt(initial, bathy, grav, grid, ctrl);
    const int m = std::max(1, static_cast<int>(std::ceil(T / dt0)));
    const double dt = T / m;

    PicardReport rep;
    rep.dt = dt;
    rep.steps = m;

    // W^0 is the frozen initial datum at every time level.
    std::vector<State> prev(m + 1, initial);
    for (int j = 0; j <= m; ++j) prev[j].t = j * dt;
    rep.iterates.push_back(prev);

    for (int iter = 1; iter <= n_iters; ++iter) {
        std::vector<State> cur(m + 1);
        cur[0] = initial;
        cur[0].t = 0.0;
        for (int j = 0; j < m; ++j) {
            const double t = j * dt;
            const State& w = cur[j];

            auto stage = [&](double ts, const Field& eta, const Field& u) {
                const State frozen = interp_state(prev, dt, ts);
                return linear_tendency(eta, u, ts, frozen, bathy, grav, eps, grid);
            };

            const Tendency k1 = stage(t, w.eta, w.u);
            Field e2 = w.eta, u2 = w.u;
            axpy(e2, 0.5 * dt, k1.deta_dt);
            axpy(u2, 0.5 * dt, k1.du_dt);
            const Tendency k2 = stage(t + 0.5 * dt, e2, u2);
            Field e3 = w.eta, u3 = w.u;
            axpy(e3, 0.5 * dt, k2.deta_dt);
            axpy(u3, 0.5 * dt, k2.du_dt);
            const Tendency k3 = stage(t + 0.5 * dt, e3, u3);
            Field e4 = w.eta, u4 = w.u;
            axpy(e4, dt, k3.deta_dt);
            axpy(u4, dt, k3.du_dt);
            const Tendency k4 = stage(t + dt, e4, u4);

            State next;
            next.t = (j + 1) * dt;
            next.eta = w.eta;
            next.u = w.u;
            const double wgt = dt / 6.0;
            for (int i = 0; i < grid.n; ++i) {
                next.eta[i] += wgt * (k1.deta_dt[i] + 2.0 * k2.deta_dt[i] +
                                      2.0 * k3.deta_dt[i] + k4.deta_dt[i]);
                next.u[i] += wgt * (k1.du_dt[i] + 2.0 * k2.du_dt[i] +
                                    2.0 * k3.du_dt[i] + k4.du_dt[i]);
            }
            cur[j + 1] = std::move(next);
        }

        std::vector<double> energies(m + 1);
        for (int j = 0; j <= m; ++j)
            energies[j] = difference_energy(cur[j], prev[j], bathy, grav, grid);
        rep.etilde.push_back(energies);
        rep.etilde_T.push_back(energies[m]);
        if (rep.etilde_T.size() >= 2) {
            const double prev_e = rep.etilde_T[rep.etilde_T.size() - 2];
            rep.ratios.push_back(prev_e > 0.0 ? rep.etilde_T.back() / prev_e : 0.0);
        }

        rep.iterates.push_back(cur);
        prev = std::move(cur);
    }
    return rep;
}

}  // namespace rsv
