#pragma once

#include "rsv/fields.hpp"
#include "rsv/grid.hpp"
#include "rsv/sturm_liouville.hpp"

namespace rsv {

struct Tendency {
    Field deta_dt;
    Field du_dt;
};

// eta_t = -d/dx(h u) - d_t. Flux form: the centred difference of a periodic
// flux telescopes, so the discrete mass integral is conserved exactly.
Field rhs_mass(const State& state, const Bathymetry& bathy, const Grid& grid);

// u_t = -u u_x - g eta_x
//       + eps g L_h^{-1} { h^2 eta_x d_xx }
//       - eps L_h^{-1} d/dx { 2 h^3 u_x^2 - (g/2) h^2 (eta_x^2 + 2 eta_x d_x) }
Field rhs_momentum(const State& state, const Bathymetry& bathy, const Gravity& grav,
                   double eps, const Grid& grid);

Tendency evaluate_tendency(const State& state, const Bathymetry& bathy,
                           const Gravity& grav, double eps, const Grid& grid);

// Local form of the regularising flux term:
//   R = 2 h^3 u_x^2 - h^3 d/dx(u_t + u u_x + g eta_x)
//       - (g/2) h^2 (eta_x^2 + 2 eta_x d_x),
// with u_t taken from an already-computed tendency. The advective part of the
// bracket is grouped conservatively as (u^2/2)_x, keeping this route an
// independent second-order discretisation from the non-local one below.
Field compute_R_direct(const State& state, const Tendency& tendency,
                       const Bathymetry& bathy, const Gravity& grav,
                       const Grid& grid);

// Non-local form:
//   R = (1 + eps h^3 d/dx L_h^{-1} d/dx) { 2 h^3 u_x^2 - (g/2) h^2 (...) }
//       - eps h^3 d/dx L_h^{-1} { g h^2 eta_x d_xx }.
Field compute_R_nonlocal(const State& state, const Bathymetry& bathy,
                         const Gravity& grav, double eps, const Grid& grid);

// Eigenvalues u -/+ sqrt(g h) of the advection matrix [[u, h], [g, u]].
std::pair<Field, Field> char_speeds(const State& state, const Bathymetry& bathy,
                                    const Gravity& grav, const Grid& grid);

// Max over nodes of the off-diagonal asymmetry of A(W) B(W) with the
// symmetriser A = diag(g/h, 1); zero up to round-off by construction.
double symmetriser_check(const State& state, const Bathymetry& bathy,
                         const Gravity& grav, const Grid& grid);

}  // namespace rsv
