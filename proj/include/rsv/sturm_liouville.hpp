#pragma once

#include "rsv/fields.hpp"
#include "rsv/grid.hpp"

namespace rsv {

class NumericalDegeneracyError : public std::runtime_error {
  public:
    explicit NumericalDegeneracyError(const std::string& msg)
        : std::runtime_error(msg) {}
};

// Discrete elliptic operator h - eps * d/dx (h^3 d/dx) in flux form on the
// periodic grid: a symmetric positive definite cyclic tridiagonal matrix.
//
//   (L psi)_i = h_i psi_i
//             - eps * [kappa_{i+1/2} (psi_{i+1} - psi_i)
//                      - kappa_{i-1/2} (psi_i - psi_{i-1})] / dx^2,
//   kappa_{i+1/2} = ((h_i + h_{i+1}) / 2)^3.
struct SLOperator {
    Field diag;   // diag[i] couples node i with itself
    Field off;    // off[i] couples nodes i and i+1 (off[n-1] wraps to node 0)
    double h_inf = 0.0;
    double eps = 0.0;
    double dx = 0.0;
    int n = 0;
};

SLOperator assemble(const Field& h, double eps, const Grid& grid);

Field apply(const SLOperator& op, const Field& psi);

// Direct solve: cyclic Thomas algorithm with a rank-one periodic correction.
Field solve(const SLOperator& op, const Field& rhs);

// solve(op, ddx(psi)): the inverse-operator-times-derivative composition
// appearing in the momentum equation.
Field solve_dx(const SLOperator& op, const Field& psi, const Grid& grid);

}  // namespace rsv
