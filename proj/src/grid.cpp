#include "rsv/grid.hpp"

#include <algorithm>
#include <cmath>

namespace rsv {

Grid make_grid(double L, int n) {
    if (!(L > 0.0))
        throw std::invalid_argument("make_grid: L must be positive");
    if (n < 8)
        throw std::invalid_argument("make_grid: n must be at least 8");
    Grid g;
    g.L = L;
    g.n = n;
    g.dx = L / n;
    g.nodes.resize(n);
    for (int i = 0; i < n; ++i) g.nodes[i] = i * g.dx;
    return g;
}

Field ddx(const Field& f, const Grid& grid) {
    check_on_grid(f, grid, "ddx");
    const int n = grid.n;
    const double inv2dx = 1.0 / (2.0 * grid.dx);
    Field out(n);
    for (int i = 0; i < n; ++i) {
        const int ip = (i + 1 == n) ? 0 : i + 1;
        const int im = (i == 0) ? n - 1 : i - 1;
        out[i] = (f[ip] - f[im]) * inv2dx;
    }
    return out;
}

double quad(const Field& f, const Grid& grid) {
    check_on_grid(f, grid, "quad");
    double s = 0.0;
    for (double v : f) s += v;
    return s * grid.dx;
}

double field_min(const Field& f) { return *std::min_element(f.begin(), f.end()); }

double field_max(const Field& f) { return *std::max_element(f.begin(), f.end()); }

double field_max_abs(const Field& f) {
    double m = 0.0;
    for (double v : f) m = std::max(m, std::fabs(v));
    return m;
}

}  // namespace rsv
