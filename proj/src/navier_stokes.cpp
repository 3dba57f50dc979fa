#include "agg/navier_stokes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "agg/errors.hpp"
#include "agg/fft.hpp"
#include "agg/krylov.hpp"
#include "agg/model.hpp"
#include "agg/spectral_ops.hpp"

namespace agg {

SpectralField pressure_forward_operator(const SpectralField& P, const SpectralField& rho) {
    const Grid grid = P.grid();
    SpectralVectorField g = gradient(P);
    RealSamples gx = backward_transform(g.x);
    RealSamples gy = backward_transform(g.y);
    RealSamples rs = backward_transform(rho);
    for (std::size_t i = 0; i < rs.size(); ++i) {
        gx[i] /= rs[i];
        gy[i] /= rs[i];
    }
    SpectralVectorField flux = forward_transform(gx, gy, grid);
    dealias_inplace(flux);
    return divergence(flux);
}

PressureSolveResult pressure_solve(const SpectralField& rhs_div, const SpectralField& rho,
                                   const NSStepConfig& cfg) {
    const Grid grid = rhs_div.grid();
    if (grid != rho.grid()) throw ConfigError("pressure_solve: grid mismatch");
    if (std::abs(mean(rhs_div)) > 1e-13)
        throw PreconditionError("pressure_solve: right-hand side has nonzero mean " +
                                std::to_string(mean(rhs_div)));

    RealSamples rho_s = backward_transform(rho);
    double rho_lo = rho_s[0];
    for (double r : rho_s) rho_lo = std::min(rho_lo, r);
    if (!(rho_lo > 0.0)) throw PreconditionError("pressure_solve: rho not positive everywhere");
    const double rho_bar = mean(rho);

    auto apply = [&](const SpectralField& P) {
        SpectralVectorField g = gradient(P);
        RealSamples gx = backward_transform(g.x);
        RealSamples gy = backward_transform(g.y);
        for (std::size_t i = 0; i < rho_s.size(); ++i) {
            gx[i] /= rho_s[i];
            gy[i] /= rho_s[i];
        }
        SpectralVectorField flux = forward_transform(gx, gy, grid);
        dealias_inplace(flux);
        SpectralField d = divergence(flux);
        d *= -1.0; // -div((1/rho) grad .) is SPD on zero-mean fields
        return d;
    };
    auto precond = [&](const SpectralField& r) {
        SpectralField z(grid);
        const int n = grid.n;
        for (int a = 0; a < n; ++a) {
            const double kx = (a == n / 2) ? 0.0 : grid.wavenumber(a);
            for (int b = 0; b < n; ++b) {
                const double ky = (b == n / 2) ? 0.0 : grid.wavenumber(b);
                const double k2 = kx * kx + ky * ky;
                z.coeff(a, b) = k2 > 0.0 ? rho_bar * r.coeff(a, b) / k2 : Complex(0.0, 0.0);
            }
        }
        return z;
    };

    SpectralField b = dealias(rhs_div);
    b *= -1.0;
    b.coeff(0, 0) = Complex(0.0, 0.0);
    KrylovResult kr = pcg(apply, precond, b, cfg.pressure_tol, cfg.pressure_max_iter);
    if (!kr.converged)
        throw StepFailure("pressure_solve: PCG hit iteration cap with residual " +
                          std::to_string(kr.residual_norm));

    PressureSolveResult out;
    out.p = std::move(kr.x);
    out.p.coeff(0, 0) = Complex(0.0, 0.0);
    out.iters = kr.iters;
    out.residual = kr.residual_norm;
    return out;
}

double stokes_eigenvalue(int m, const Grid& grid) {
    if (m < 1) throw ConfigError("stokes_eigenvalue: m must be >= 1");
    std::set<long> values;
    const int kmax = grid.n / 2;
    for (int kx = 0; kx <= kmax; ++kx)
        for (int ky = 0; ky <= kmax; ++ky) {
            const long k2 = static_cast<long>(kx) * kx + static_cast<long>(ky) * ky;
            if (k2 > 0) values.insert(k2);
        }
    if (static_cast<std::size_t>(m) > values.size()) return std::numeric_limits<double>::infinity();
    auto it = values.begin();
    std::advance(it, m - 1);
    return static_cast<double>(*it);
}

SpectralVectorField galerkin_truncate(SpectralVectorField u, int m) {
    const double lambda = stokes_eigenvalue(m, u.grid());
    const int n = u.grid().n;
    for (int a = 0; a < n; ++a) {
        const double kx = u.grid().wavenumber(a);
        for (int b = 0; b < n; ++b) {
            const double ky = u.grid().wavenumber(b);
            const double k2 = kx * kx + ky * ky;
            if (k2 > lambda) {
                u.x.coeff(a, b) = Complex(0.0, 0.0);
                u.y.coeff(a, b) = Complex(0.0, 0.0);
            }
        }
    }
    return u;
}

NSStepResult ns_step(const SpectralVectorField& u_n, const SpectralField& phi_next,
                     const SpectralField& mu_next, const FluidParams& p, const NSStepConfig& cfg) {
    if (cfg.dt <= 0.0) throw ConfigError("ns_step: dt must be positive");
    const Grid grid = u_n.grid();
    if (grid != phi_next.grid() || grid != mu_next.grid())
        throw ConfigError("ns_step: grid mismatch");
    const double dt = cfg.dt;
    const double h = grid.h();

    RealSamples ux = backward_transform(u_n.x);
    RealSamples uy = backward_transform(u_n.y);
    double umax = 0.0;
    for (std::size_t i = 0; i < ux.size(); ++i)
        umax = std::max(umax, std::sqrt(ux[i] * ux[i] + uy[i] * uy[i]));

    if (umax > 0.0 && dt > 0.5 * h / umax)
        throw StepFailure("ns_step: advective CFL violated, dt = " + std::to_string(dt) +
                          " > " + std::to_string(0.5 * h / umax));
    if (cfg.viscous_mode == ViscousMode::Explicit &&
        dt > 0.25 * h * h * p.rho_min() / p.nu_max())
        throw StepFailure("ns_step: explicit viscous CFL violated");

    RealSamples phis = backward_transform(phi_next);
    RealSamples rho_s, nu_s;
    density_samples(phis, p, rho_s);
    viscosity_samples(phis, p, nu_s);

    // Velocity gradient samples; D entries come from the same derivatives.
    SpectralVectorField gux = gradient(u_n.x);
    SpectralVectorField guy = gradient(u_n.y);
    RealSamples dxux = backward_transform(gux.x);
    RealSamples dyux = backward_transform(gux.y);
    RealSamples dxuy = backward_transform(guy.x);
    RealSamples dyuy = backward_transform(guy.y);

    // Viscous force div(nu D u), assembled spectrally from nu*D products.
    const std::size_t sz = grid.size();
    RealSamples nDxx(sz), nDxy(sz), nDyy(sz);
    for (std::size_t i = 0; i < sz; ++i) {
        nDxx[i] = nu_s[i] * dxux[i];
        nDxy[i] = nu_s[i] * 0.5 * (dyux[i] + dxuy[i]);
        nDyy[i] = nu_s[i] * dyuy[i];
    }
    SpectralField nDxx_h = dealias(forward_transform(nDxx, grid));
    SpectralField nDxy_h = dealias(forward_transform(nDxy, grid));
    SpectralField nDyy_h = dealias(forward_transform(nDyy, grid));
    SpectralVectorField row_x{};
    row_x.x = nDxx_h;
    row_x.y = nDxy_h;
    SpectralVectorField row_y{};
    row_y.x = nDxy_h;
    row_y.y = nDyy_h;
    RealSamples visc_x = backward_transform(divergence(row_x));
    RealSamples visc_y = backward_transform(divergence(row_y));

    SpectralVectorField gmu = gradient(mu_next);
    RealSamples mux = backward_transform(gmu.x);
    RealSamples muy = backward_transform(gmu.y);
    RealSamples mus = backward_transform(mu_next);

    SpectralVectorField gphi = gradient(phi_next);
    RealSamples phix = backward_transform(gphi.x);
    RealSamples phiy = backward_transform(gphi.y);

    const double rho_slope = p.rho_slope();
    const bool with_flux = cfg.flux_correction && rho_slope != 0.0;

    RealSamples fx(sz), fy(sz);
    for (std::size_t i = 0; i < sz; ++i) {
        double rx = visc_x[i] + mus[i] * phix[i];
        double ry = visc_y[i] + mus[i] * phiy[i];
        if (with_flux) {
            rx += rho_slope * (mux[i] * dxux[i] + muy[i] * dyux[i]);
            ry += rho_slope * (mux[i] * dxuy[i] + muy[i] * dyuy[i]);
        }
        fx[i] = -(ux[i] * dxux[i] + uy[i] * dyux[i]) + rx / rho_s[i];
        fy[i] = -(ux[i] * dxuy[i] + uy[i] * dyuy[i]) + ry / rho_s[i];
    }
    SpectralVectorField force = forward_transform(fx, fy, grid);
    dealias_inplace(force);

    const double c_impl = cfg.viscous_mode == ViscousMode::SemiImplicit ? 0.5 * p.nu_min() : 0.0;
    SpectralVectorField ustar = u_n;
    {
        const int n = grid.n;
        for (int a = 0; a < n; ++a) {
            const double kx = (a == n / 2) ? 0.0 : grid.wavenumber(a);
            for (int b = 0; b < n; ++b) {
                const double ky = (b == n / 2) ? 0.0 : grid.wavenumber(b);
                const double fac = dt / (1.0 + dt * c_impl * (kx * kx + ky * ky));
                ustar.x.coeff(a, b) += fac * force.x.coeff(a, b);
                ustar.y.coeff(a, b) += fac * force.y.coeff(a, b);
            }
        }
    }

    // Projection: solve div((1/rho) grad Q) = div u*, subtract (1/rho) grad Q.
    SpectralField rhs = divergence(ustar);
    SpectralField rho_field = phi_next;
    rho_field *= rho_slope;
    rho_field.coeff(0, 0) += p.rho_mid();
    PressureSolveResult ps = pressure_solve(rhs, rho_field, cfg);

    SpectralVectorField gq = gradient(ps.p);
    RealSamples qx = backward_transform(gq.x);
    RealSamples qy = backward_transform(gq.y);
    for (std::size_t i = 0; i < sz; ++i) {
        qx[i] /= rho_s[i];
        qy[i] /= rho_s[i];
    }
    SpectralVectorField corr = forward_transform(qx, qy, grid);
    dealias_inplace(corr);
    corr.x.coeff(0, 0) = Complex(0.0, 0.0); // mean mode is not projected
    corr.y.coeff(0, 0) = Complex(0.0, 0.0);

    NSStepResult out;
    out.u = ustar;
    out.u -= corr;
    out.pressure = ps.p;
    out.pressure *= 1.0 / dt;
    out.pcg_iters = ps.iters;
    out.div_norm = sobolev_norm(divergence(out.u), 0);
    if (cfg.galerkin_m) out.u = galerkin_truncate(std::move(out.u), *cfg.galerkin_m);
    return out;
}

} // namespace agg
