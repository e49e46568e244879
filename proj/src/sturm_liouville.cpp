#include "rsv/sturm_liouville.hpp"

#include <cmath>

namespace rsv {

namespace {

// Thomas algorithm for a (plain, non-cyclic) symmetric tridiagonal system
// with diagonal b and couplings c (c[i] between rows i and i+1, c[n-1] unused).
Field thomas(const Field& b, const Field& c, const Field& rhs) {
    const int n = static_cast<int>(b.size());
    Field cp(n, 0.0), dp(n, 0.0), x(n, 0.0);
    if (!(std::fabs(b[0]) > 0.0))
        throw NumericalDegeneracyError("tridiagonal solve: zero pivot at row 0");
    cp[0] = c[0] / b[0];
    dp[0] = rhs[0] / b[0];
    for (int i = 1; i < n; ++i) {
        const double m = b[i] - c[i - 1] * cp[i - 1];
        if (!(std::fabs(m) > 0.0))
            throw NumericalDegeneracyError("tridiagonal solve: zero pivot at row " +
                                           std::to_string(i));
        cp[i] = (i + 1 < n ? c[i] : 0.0) / m;
        dp[i] = (rhs[i] - c[i - 1] * dp[i - 1]) / m;
    }
    x[n - 1] = dp[n - 1];
    for (int i = n - 2; i >= 0; --i) x[i] = dp[i] - cp[i] * x[i + 1];
    return x;
}

}  // namespace

SLOperator assemble(const Field& h, double eps, const Grid& grid) {
    check_on_grid(h, grid, "assemble");
    if (eps < 0.0)
        throw std::invalid_argument("assemble: eps must be non-negative");
    const double h_inf = field_min(h);
    if (!(h_inf > 0.0))
        throw VacuumError("assemble: inf h = " + std::to_string(h_inf) +
                          " violates the non-zero depth condition");

    const int n = grid.n;
    const double inv_dx2 = 1.0 / (grid.dx * grid.dx);
    SLOperator op;
    op.h_inf = h_inf;
    op.eps = eps;
    op.dx = grid.dx;
    op.n = n;
    op.diag.resize(n);
    op.off.resize(n);

    // Face coefficient from the arithmetic mean of h, cubed.
    Field kappa(n);
    for (int i = 0; i < n; ++i) {
        const int ip = (i + 1 == n) ? 0 : i + 1;
        const double hm = 0.5 * (h[i] + h[ip]);
        kappa[i] = hm * hm * hm;
    }
    for (int i = 0; i < n; ++i) {
        const int im = (i == 0) ? n - 1 : i - 1;
        op.diag[i] = h[i] + eps * (kappa[i] + kappa[im]) * inv_dx2;
        op.off[i] = -eps * kappa[i] * inv_dx2;
    }
    return op;
}

Field apply(const SLOperator& op, const Field& psi) {
    if (static_cast<int>(psi.size()) != op.n)
        throw std::invalid_argument("apply: field length does not match operator size");
    const int n = op.n;
    Field out(n);
    for (int i = 0; i < n; ++i) {
        const int ip = (i + 1 == n) ? 0 : i + 1;
        const int im = (i == 0) ? n - 1 : i - 1;
        out[i] = op.diag[i] * psi[i] + op.off[i] * psi[ip] + op.off[im] * psi[im];
    }
    return out;
}

Field solve(const SLOperator& op, const Field& rhs) {
    if (static_cast<int>(rhs.size()) != op.n)
        throw std::invalid_argument("solve: field length does not match operator size");
    if (!(op.h_inf > 0.0))
        throw VacuumError("solve: operator assembled from non-positive depth");
    const int n = op.n;

    if (op.eps == 0.0) {
        Field x(n);
        for (int i = 0; i < n; ++i) x[i] = rhs[i] / op.diag[i];
        return x;
    }

    // Sherman-Morrison splitting of the periodic corner entries.
    const double alpha = op.off[n - 1];
    const double gamma = -op.diag[0];
    Field b = op.diag;
    b[0] -= gamma;
    b[n - 1] -= alpha * alpha / gamma;

    Field u(n, 0.0);
    u[0] = gamma;
    u[n - 1] = alpha;

    const Field y = thomas(b, op.off, rhs);
    const Field z = thomas(b, op.off, u);

    const double denom = 1.0 + z[0] + alpha * z[n - 1] / gamma;
    if (!(std::fabs(denom) > 1e-300))
        throw NumericalDegeneracyError("solve: singular periodic correction");
    const double factor = (y[0] + alpha * y[n - 1] / gamma) / denom;

    Field x(n);
    for (int i = 0; i < n; ++i) x[i] = y[i] - factor * z[i];
    return x;
}

Field solve_dx(const SLOperator& op, const Field& psi, const Grid& grid) {
    return solve(op, ddx(psi, grid));
}

}  // namespace rsv
