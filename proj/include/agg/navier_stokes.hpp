#pragma once

#include <optional>

#include "agg/field.hpp"
#include "agg/fluid_params.hpp"

namespace agg {

enum class ViscousMode { Explicit, SemiImplicit };

struct NSStepConfig {
    double dt = 1e-3;
    ViscousMode viscous_mode = ViscousMode::SemiImplicit;
    double pressure_tol = 1e-11; // absolute L^2 residual of the projection solve
    int pressure_max_iter = 500;
    std::optional<int> galerkin_m; // Stokes-eigenvalue cutoff index; empty = untruncated
    bool flux_correction = true;   // the (rho1-rho2)/2 (grad mu . grad) u term
};

struct PressureSolveResult {
    SpectralField p;
    int iters = 0;
    double residual = 0.0;
};

struct NSStepResult {
    SpectralVectorField u;
    SpectralField pressure;
    int pcg_iters = 0;
    double div_norm = 0.0;
};

/// One semi-implicit step of the non-conservative momentum equation
///
///   rho(u* - u^n)/dt = -rho (u^n.grad)u^n + (rho1-rho2)/2 (grad mu.grad)u^n
///                      + div(nu(phi) D u^n) + mu grad(phi)
///
/// followed by the variable-density projection
///
///   div((dt/rho) grad P) = div u*,   u^{n+1} = u* - (dt/rho) grad P  (k != 0).
///
/// In semi-implicit mode the constant-coefficient piece (nu_min/2) lap u is
/// shifted implicit: the whole explicit force is assembled on the
/// rho-divided form and the update becomes
///   u*_k = u^n_k + dt G_k / (1 + dt (nu_min/2) |k|^2),
/// which is the diagonal Fourier solve of the add-subtract split (the
/// shifted terms cancel exactly on u^n).  The k = 0 momentum mode is
/// advanced by the mean of the explicit forces and is never projected.
NSStepResult ns_step(const SpectralVectorField& u_n, const SpectralField& phi_next,
                     const SpectralField& mu_next, const FluidParams& p, const NSStepConfig& cfg);

/// Solve div((1/rho) grad P) = rhs_div with mean(P) = 0 by conjugate
/// gradients on zero-mean fields, preconditioned by the constant-coefficient
/// spectral inverse with rho replaced by its mean.  Requires
/// |mean(rhs_div)| <= 1e-13.
PressureSolveResult pressure_solve(const SpectralField& rhs_div, const SpectralField& rho,
                                   const NSStepConfig& cfg);

/// Forward operator of the projection problem: div(dealias((1/rho) grad P)).
SpectralField pressure_forward_operator(const SpectralField& P, const SpectralField& rho);

/// The m-th distinct eigenvalue |k|^2 of the Stokes operator on the torus
/// (1-indexed over k != 0); returns +inf past the grid's resolvable set.
double stokes_eigenvalue(int m, const Grid& grid);

/// Remove every k != 0 coefficient with |k|^2 beyond the m-th distinct
/// Stokes eigenvalue.  The constant mode is always retained.
SpectralVectorField galerkin_truncate(SpectralVectorField u, int m);

} // namespace agg
