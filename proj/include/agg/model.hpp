#pragma once

#include "agg/field.hpp"
#include "agg/fluid_params.hpp"
#include "agg/potential.hpp"

namespace agg {

/// Simulation state at one time instant.  u is solenoidal up to solver
/// tolerance; mu and pressure are caches from the producing time step.
struct FlowState {
    double time = 0.0;
    SpectralVectorField u;
    SpectralField phi;
    SpectralField mu;
    SpectralField pressure;
};

struct EnergyBreakdown {
    double total;
    double kinetic;
    double free;
};

struct DissipationRates {
    double viscous; // integral of nu(phi) |Du|^2
    double mobility; // integral of |grad mu|^2
};

/// rho(phi) = rho1 (1+phi)/2 + rho2 (1-phi)/2, evaluated exactly in
/// coefficients (the map is affine).  Checks |phi| <= 1 on samples.
SpectralField density(const SpectralField& phi, const FluidParams& p);
SpectralField viscosity(const SpectralField& phi, const FluidParams& p);

/// Sample-space affine evaluations used inside the time steppers.
void density_samples(const RealSamples& phi, const FluidParams& p, RealSamples& out);
void viscosity_samples(const RealSamples& phi, const FluidParams& p, RealSamples& out);

/// mu = -lap(phi) + Psi'(phi), with Psi'(phi) evaluated pointwise on the
/// grid and dealiased.  Requires max |phi| <= 1 - 1e-12 on samples.
SpectralField chemical_potential(const SpectralField& phi, const FluidParams& p);

/// J = -(rho1 - rho2)/2 grad(mu); identically zero for matched densities.
SpectralVectorField diffusive_flux(const SpectralField& mu, const FluidParams& p);

/// mu grad(phi), the capillary force modulo a gradient absorbed into the
/// pressure.  Pointwise product, dealiased.
SpectralVectorField capillary_force(const SpectralField& phi, const SpectralField& mu);

/// E = int 1/2 rho(phi)|u|^2 + int 1/2 |grad phi|^2 + Psi(phi).
EnergyBreakdown total_energy(const FlowState& state, const FluidParams& p);

DissipationRates dissipation(const FlowState& state, const FluidParams& p);

} // namespace agg
