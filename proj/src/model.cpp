#include "agg/model.hpp"

#include <cmath>
#include <string>

#include "agg/errors.hpp"
#include "agg/fft.hpp"
#include "agg/spectral_ops.hpp"

namespace agg {
namespace {

void check_phase_bound(const SpectralField& phi, double limit, const char* who) {
    const double m = max_abs_samples(phi);
    if (!(m <= limit))
        throw PhaseBoundError(std::string(who) + ": max|phi| = " + std::to_string(m) +
                              " exceeds " + std::to_string(limit));
}

SpectralField affine_of(const SpectralField& phi, double mid, double slope) {
    SpectralField out = phi;
    out *= slope;
    out.coeff(0, 0) += mid;
    return out;
}

} // namespace

SpectralField density(const SpectralField& phi, const FluidParams& p) {
    check_phase_bound(phi, 1.0, "density");
    return affine_of(phi, p.rho_mid(), p.rho_slope());
}

SpectralField viscosity(const SpectralField& phi, const FluidParams& p) {
    check_phase_bound(phi, 1.0, "viscosity");
    return affine_of(phi, p.nu_mid(), p.nu_slope());
}

void density_samples(const RealSamples& phi, const FluidParams& p, RealSamples& out) {
    out.resize(phi.size());
    const double mid = p.rho_mid(), slope = p.rho_slope();
    for (std::size_t i = 0; i < phi.size(); ++i) out[i] = mid + slope * phi[i];
}

void viscosity_samples(const RealSamples& phi, const FluidParams& p, RealSamples& out) {
    out.resize(phi.size());
    const double mid = p.nu_mid(), slope = p.nu_slope();
    for (std::size_t i = 0; i < phi.size(); ++i) out[i] = mid + slope * phi[i];
}

SpectralField chemical_potential(const SpectralField& phi, const FluidParams& p) {
    check_phase_bound(phi, 1.0 - 1e-12, "chemical_potential");
    RealSamples s = backward_transform(phi);
    RealSamples dF;
    convex_dpotential_samples(s, p, dF);
    SpectralField mu = dealias(forward_transform(dF, phi.grid()));
    mu -= laplacian(phi);
    SpectralField expansive = phi;
    expansive *= p.theta0;
    mu -= expansive;
    return mu;
}

SpectralVectorField diffusive_flux(const SpectralField& mu, const FluidParams& p) {
    SpectralVectorField j = gradient(mu);
    j *= -p.rho_slope();
    return j;
}

SpectralVectorField capillary_force(const SpectralField& phi, const SpectralField& mu) {
    if (phi.grid() != mu.grid()) throw ConfigError("capillary_force: grid mismatch");
    const Grid g = phi.grid();
    SpectralVectorField gphi = gradient(phi);
    RealSamples mus = backward_transform(mu);
    RealSamples gx = backward_transform(gphi.x);
    RealSamples gy = backward_transform(gphi.y);
    for (std::size_t i = 0; i < mus.size(); ++i) {
        gx[i] *= mus[i];
        gy[i] *= mus[i];
    }
    SpectralVectorField f = forward_transform(gx, gy, g);
    dealias_inplace(f);
    return f;
}

EnergyBreakdown total_energy(const FlowState& state, const FluidParams& p) {
    check_phase_bound(state.phi, 1.0, "total_energy");
    const Grid g = state.phi.grid();
    const double cell = g.h() * g.h();

    RealSamples phis = backward_transform(state.phi);
    RealSamples ux = backward_transform(state.u.x);
    RealSamples uy = backward_transform(state.u.y);

    double kin = 0.0;
    double psi_sum = 0.0;
    const double mid = p.rho_mid(), slope = p.rho_slope();
    for (std::size_t i = 0; i < phis.size(); ++i) {
        const double rho = mid + slope * phis[i];
        kin += 0.5 * rho * (ux[i] * ux[i] + uy[i] * uy[i]);
        const double s = phis[i];
        if (!(std::abs(s) < 1.0)) throw PhaseBoundError("total_energy: sample at the barrier");
        const double F = 0.5 * p.theta * ((1.0 + s) * std::log1p(s) + (1.0 - s) * std::log1p(-s));
        psi_sum += F - 0.5 * p.theta0 * s * s;
    }
    kin *= cell;
    psi_sum *= cell;

    SpectralVectorField gphi = gradient(state.phi);
    const double grad2 = inner_l2(gphi, gphi);

    EnergyBreakdown e;
    e.kinetic = kin;
    e.free = 0.5 * grad2 + psi_sum;
    e.total = e.kinetic + e.free;
    return e;
}

DissipationRates dissipation(const FlowState& state, const FluidParams& p) {
    const Grid g = state.phi.grid();
    const double cell = g.h() * g.h();

    SymmetricGradient d = symmetric_gradient(state.u);
    RealSamples dxx = backward_transform(d.xx);
    RealSamples dxy = backward_transform(d.xy);
    RealSamples dyy = backward_transform(d.yy);
    RealSamples phis = backward_transform(state.phi);

    double visc = 0.0;
    const double mid = p.nu_mid(), slope = p.nu_slope();
    for (std::size_t i = 0; i < phis.size(); ++i) {
        const double nu = mid + slope * phis[i];
        visc += nu * (dxx[i] * dxx[i] + 2.0 * dxy[i] * dxy[i] + dyy[i] * dyy[i]);
    }
    visc *= cell;

    SpectralVectorField gmu = gradient(state.mu);
    DissipationRates r;
    r.viscous = visc;
    r.mobility = inner_l2(gmu, gmu);
    return r;
}

} // namespace agg
