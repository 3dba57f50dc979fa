#pragma once

#include "agg/field.hpp"
#include "agg/fluid_params.hpp"

namespace agg {

/// Values of the Flory-Huggins potential and of its convex logarithmic part
/// at one point of (-1, 1):
///   F(s)   = theta/2 [ (1+s)log(1+s) + (1-s)log(1-s) ]
///   Psi(s) = F(s) - theta0/2 s^2
struct PotentialValues {
    double Psi;
    double dPsi;
    double F;
    double dF;
    double d2F;
};

/// Throws PhaseBoundError when |s| >= 1 (the singular barrier).
PotentialValues potential_values(double s, const FluidParams& p);

/// F'(s) = theta/2 log((1+s)/(1-s)) on samples; throws on any |s| >= 1.
void convex_dpotential_samples(const RealSamples& s, const FluidParams& p, RealSamples& out);

/// F''(s) = theta/(1 - s^2) on samples; throws on any |s| >= 1.
void convex_d2potential_samples(const RealSamples& s, const FluidParams& p, RealSamples& out);

} // namespace agg
