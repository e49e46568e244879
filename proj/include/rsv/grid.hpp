#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rsv {

// Scalar samples co-located with the grid nodes.
using Field = std::vector<double>;

// Periodic uniform 1D mesh: nodes x_i = i*dx, i = 0..n-1, with x_n == x_0.
struct Grid {
    double L = 0.0;
    int n = 0;
    double dx = 0.0;
    std::vector<double> nodes;
};

Grid make_grid(double L, int n);

// Second-order central difference with periodic wrap.
Field ddx(const Field& f, const Grid& grid);

// Rectangle-rule quadrature dx * sum(f); spectrally accurate for smooth
// periodic integrands.
double quad(const Field& f, const Grid& grid);

// Small helpers used all over the place.
double field_min(const Field& f);
double field_max(const Field& f);
double field_max_abs(const Field& f);

inline void check_on_grid(const Field& f, const Grid& grid, const char* what) {
    if (static_cast<int>(f.size()) != grid.n)
        throw std::invalid_argument(std::string(what) + ": field length " +
                                    std::to_string(f.size()) +
                                    " does not match grid n = " +
                                    std::to_string(grid.n));
}

}  // namespace rsv
