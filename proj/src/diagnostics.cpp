#include "agg/diagnostics.hpp"

#include <cmath>

#include "agg/errors.hpp"
#include "agg/fft.hpp"
#include "agg/spectral_ops.hpp"

namespace agg {
namespace {

// int mu (u . grad phi): triple product, dealiased pointwise quadrature.
double transport_pairing(const FlowState& s) {
    const Grid g = s.phi.grid();
    SpectralVectorField gphi = gradient(s.phi);
    RealSamples px = backward_transform(gphi.x);
    RealSamples py = backward_transform(gphi.y);
    RealSamples ux = backward_transform(s.u.x);
    RealSamples uy = backward_transform(s.u.y);
    RealSamples mu = backward_transform(s.mu);
    double acc = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) acc += mu[i] * (ux[i] * px[i] + uy[i] * py[i]);
    return acc * g.h() * g.h();
}

} // namespace

HFunctional h_functional(const FlowState& state, const FluidParams& p) {
    const DissipationRates d = dissipation(state, p);
    const double pairing = transport_pairing(state);
    HFunctional h;
    h.value = 0.5 * d.viscous + 0.5 * d.mobility + pairing;
    h.lower_surrogate = 0.25 * d.mobility + 0.25 * d.viscous;
    return h;
}

double x_functional(const FlowState& state, const FluidParams& p) {
    const DissipationRates d = dissipation(state, p);
    return 0.5 * d.mobility + transport_pairing(state);
}

EstimateRatios estimate_ratios(const FlowState& state, const FluidParams& p) {
    const DissipationRates d = dissipation(state, p);
    const double gmu = std::sqrt(d.mobility);
    EstimateRatios r;
    r.phi_h2 = sobolev_norm(state.phi, 2) / (1.0 + std::sqrt(gmu));
    r.mu_h1 = sobolev_norm(state.mu, 1) / (1.0 + gmu);
    return r;
}

double continuous_dependence_metric(const FlowState& a, const FlowState& b, const FluidParams&) {
    if (a.phi.grid() != b.phi.grid()) throw ConfigError("continuous_dependence_metric: grid mismatch");
    SpectralVectorField du = a.u;
    du -= b.u;
    SpectralField dphi = a.phi;
    dphi -= b.phi;
    const double u2 = inner_l2(du, du);
    const double phi_h1 = sobolev_norm(dphi, 1);
    return u2 + phi_h1 * phi_h1;
}

DiagnosticsRecord record(const FlowState& state, const DiagnosticsRecord* prev,
                         const FluidParams& p, [[maybe_unused]] double dt) {
    DiagnosticsRecord r;
    r.t = state.time;

    const EnergyBreakdown e = total_energy(state, p);
    r.E_total = e.total;
    r.E_kin = e.kinetic;
    r.E_free = e.free;

    const DissipationRates d = dissipation(state, p);
    r.D_visc = d.viscous;
    r.D_mu = d.mobility;

    r.mass_phi = mean(state.phi);
    SpectralField rho = state.phi;
    rho *= p.rho_slope();
    rho.coeff(0, 0) += p.rho_mid();
    r.mom_x = inner_l2(rho, state.u.x);
    r.mom_y = inner_l2(rho, state.u.y);

    r.max_abs_phi = max_abs_samples(state.phi);

    r.H1_u = sobolev_norm(state.u, 1);
    r.H1_mu = sobolev_norm(state.mu, 1);
    r.H2_phi = sobolev_norm(state.phi, 2);
    r.H3_phi = sobolev_norm(state.phi, 3);
    r.H3_mu = sobolev_norm(state.mu, 3);
    r.L2_P = sobolev_norm(state.pressure, 0);

    const double pairing = transport_pairing(state);
    r.H_func = 0.5 * d.viscous + 0.5 * d.mobility + pairing;
    r.X_func = 0.5 * d.mobility + pairing;

    const double gmu = std::sqrt(d.mobility);
    r.ratio_phiH2 = r.H2_phi / (1.0 + std::sqrt(gmu));
    r.ratio_muH1 = r.H1_mu / (1.0 + gmu);

    if (prev) {
        const double elapsed = state.time - prev->t;
        r.energy_residual = r.E_total - prev->E_total + elapsed * (r.D_visc + r.D_mu);
    }
    return r;
}

} // namespace agg
