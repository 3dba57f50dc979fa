#include "agg/potential.hpp"

#include <cmath>
#include <string>

#include "agg/errors.hpp"

namespace agg {
namespace {

[[noreturn]] void barrier_error(double s) {
    throw PhaseBoundError("potential: argument " + std::to_string(s) + " outside (-1, 1)");
}

} // namespace

PotentialValues potential_values(double s, const FluidParams& p) {
    if (!(std::abs(s) < 1.0)) barrier_error(s);
    const double th = p.theta;
    PotentialValues v;
    v.F = 0.5 * th * ((1.0 + s) * std::log1p(s) + (1.0 - s) * std::log1p(-s));
    v.dF = 0.5 * th * (std::log1p(s) - std::log1p(-s));
    v.d2F = th / ((1.0 - s) * (1.0 + s));
    v.Psi = v.F - 0.5 * p.theta0 * s * s;
    v.dPsi = v.dF - p.theta0 * s;
    return v;
}

void convex_dpotential_samples(const RealSamples& s, const FluidParams& p, RealSamples& out) {
    out.resize(s.size());
    const double half_theta = 0.5 * p.theta;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!(std::abs(s[i]) < 1.0)) barrier_error(s[i]);
        out[i] = half_theta * (std::log1p(s[i]) - std::log1p(-s[i]));
    }
}

void convex_d2potential_samples(const RealSamples& s, const FluidParams& p, RealSamples& out) {
    out.resize(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!(std::abs(s[i]) < 1.0)) barrier_error(s[i]);
        out[i] = p.theta / ((1.0 - s[i]) * (1.0 + s[i]));
    }
}

} // namespace agg
