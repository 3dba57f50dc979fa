#pragma once

#include <vector>

#include "agg/errors.hpp"
#include "agg/field.hpp"
#include "agg/fluid_params.hpp"

namespace agg {

/// One implicit step of the convective Cahn-Hilliard subsystem with a
/// first-order convex splitting:
///
///   (phi^{n+1} - phi^n)/dt + div(u^n phi^n) = lap(mu^{n+1})
///   mu^{n+1} = -lap(phi^{n+1}) + F'(phi^{n+1}) - theta0 phi^n
///
/// The singular convex part F' is implicit (it supplies the barrier that
/// keeps |phi| < 1), the expansive -theta0 phi and the transport are
/// explicit.  Mass is conserved to round-off because both lap(mu) and
/// div(u phi) have exactly zero mean in coefficients.

struct CHStepConfig {
    double dt = 1e-3;
    double newton_tol = 1e-10; // L^2 norm of the residual
    int max_newton = 50;
    int max_backtrack = 40;
    double linsolve_tol = 1e-12; // floor for the inner linear residual
};

struct CHStepReport {
    int newton_iters = 0;
    double final_residual = 0.0;
    int backtracks = 0;
    int linear_iters = 0;
    std::vector<double> residual_history; // ||R|| before each update and at exit
};

struct CHStepResult {
    SpectralField phi;
    SpectralField mu;
    CHStepReport report;
};

struct NewtonResult {
    SpectralField phi;
    CHStepReport report;
};

/// Residual of the implicit equation at phi:
///   R(phi) = phi - phi_n + dt*transport - dt*lap(-lap(phi) + F'(phi) - theta0 phi_n).
SpectralField ch_residual(const SpectralField& phi, const SpectralField& phi_n,
                          const SpectralField& transport, const FluidParams& p, double dt);

/// Jacobian action of R at phi:  v + dt*lap^2(v) - dt*lap(F''(phi) v).
SpectralField ch_jacobian_apply(const SpectralField& phi, const SpectralField& v,
                                const FluidParams& p, double dt);

/// Damped Newton iteration on R(phi) = 0.  Every iterate is kept strictly
/// inside (-1 + 1e-13, 1 - 1e-13) by halving the update.  Throws
/// StepFailure on iteration or backtracking caps.
NewtonResult newton_solve(const SpectralField& phi_guess, const SpectralField& phi_n,
                          const SpectralField& transport, const FluidParams& p,
                          const CHStepConfig& cfg);

/// Full step: assembles the dealiased transport div(u_n phi_n), solves for
/// phi^{n+1}, and returns the scheme-consistent mu^{n+1}.
CHStepResult ch_step(const SpectralField& phi_n, const SpectralVectorField& u_n,
                     const FluidParams& p, const CHStepConfig& cfg);

} // namespace agg
