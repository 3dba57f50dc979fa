#include "agg/cahn_hilliard.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "agg/fft.hpp"
#include "agg/krylov.hpp"
#include "agg/potential.hpp"
#include "agg/spectral_ops.hpp"

namespace agg {
namespace {

constexpr double kInteriorMargin = 1e-13;

// mu-tilde(phi) = -lap(phi) + F'(phi) - theta0 phi_n, with F' evaluated on
// the supplied samples of phi.
SpectralField scheme_mu(const SpectralField& phi, const RealSamples& phi_samples,
                        const SpectralField& phi_n, const FluidParams& p) {
    RealSamples dF;
    convex_dpotential_samples(phi_samples, p, dF);
    SpectralField mu = dealias(forward_transform(dF, phi.grid()));
    mu -= laplacian(phi);
    SpectralField expansive = phi_n;
    expansive *= p.theta0;
    mu -= expansive;
    return mu;
}

SpectralField residual_from_samples(const SpectralField& phi, const RealSamples& phi_samples,
                                    const SpectralField& phi_n, const SpectralField& transport,
                                    const FluidParams& p, double dt) {
    SpectralField r = laplacian(scheme_mu(phi, phi_samples, phi_n, p));
    r *= -dt;
    r += phi;
    r -= phi_n;
    SpectralField t = transport;
    t *= dt;
    r += t;
    return r;
}

bool interior(const RealSamples& s) {
    for (double x : s)
        if (!(std::abs(x) < 1.0 - kInteriorMargin)) return false;
    return true;
}

} // namespace

SpectralField ch_residual(const SpectralField& phi, const SpectralField& phi_n,
                          const SpectralField& transport, const FluidParams& p, double dt) {
    RealSamples s = backward_transform(phi);
    return residual_from_samples(phi, s, phi_n, transport, p, dt);
}

SpectralField ch_jacobian_apply(const SpectralField& phi, const SpectralField& v,
                                const FluidParams& p, double dt) {
    RealSamples phis = backward_transform(phi);
    RealSamples d2F;
    convex_d2potential_samples(phis, p, d2F);
    RealSamples vs = backward_transform(v);
    for (std::size_t i = 0; i < vs.size(); ++i) vs[i] *= d2F[i];
    SpectralField jv = laplacian(dealias(forward_transform(vs, phi.grid())));
    jv *= -dt;
    SpectralField b = bilaplacian(v);
    b *= dt;
    jv += b;
    jv += v;
    return jv;
}

NewtonResult newton_solve(const SpectralField& phi_guess, const SpectralField& phi_n,
                          const SpectralField& transport, const FluidParams& p,
                          const CHStepConfig& cfg) {
    const Grid grid = phi_guess.grid();
    NewtonResult out;
    out.phi = phi_guess;

    RealSamples phi_samples = backward_transform(out.phi);
    if (!interior(phi_samples)) throw StepFailure("newton_solve: guess not strictly interior");

    SpectralField r = residual_from_samples(out.phi, phi_samples, phi_n, transport, p, cfg.dt);
    double rnorm = sobolev_norm(r, 0);
    out.report.residual_history.push_back(rnorm);

    RealSamples d2F, f_dv, trial(phi_samples.size());
    const double dt = cfg.dt;

    while (rnorm > cfg.newton_tol) {
        if (out.report.newton_iters >= cfg.max_newton) {
            out.report.final_residual = rnorm;
            throw StepFailure("newton_solve: no convergence after " +
                              std::to_string(cfg.max_newton) +
                              " iterations, residual " + std::to_string(rnorm));
        }

        convex_d2potential_samples(phi_samples, p, d2F);
        const double gamma = *std::max_element(d2F.begin(), d2F.end());

        auto apply = [&](const SpectralField& v) {
            RealSamples vs = backward_transform(v);
            f_dv.resize(vs.size());
            for (std::size_t i = 0; i < vs.size(); ++i) f_dv[i] = d2F[i] * vs[i];
            SpectralField jv = laplacian(dealias(forward_transform(f_dv, grid)));
            jv *= -dt;
            SpectralField b = bilaplacian(v);
            b *= dt;
            jv += b;
            jv += v;
            return jv;
        };
        // Constant-coefficient bound of the Jacobian; diagonal in k.
        auto precond = [&](const SpectralField& v) {
            SpectralField z(grid);
            const int n = grid.n;
            for (int a = 0; a < n; ++a) {
                const double kx = (a == n / 2) ? 0.0 : grid.wavenumber(a);
                for (int b = 0; b < n; ++b) {
                    const double ky = (b == n / 2) ? 0.0 : grid.wavenumber(b);
                    const double k2 = kx * kx + ky * ky;
                    z.coeff(a, b) = v.coeff(a, b) / (1.0 + dt * k2 * k2 + dt * gamma * k2);
                }
            }
            return z;
        };

        SpectralField rhs = r;
        rhs *= -1.0;
        // Eisenstat-Walker style forcing with an absolute floor.
        const double lin_tol = std::max(cfg.linsolve_tol, std::min(0.1 * rnorm, rnorm * rnorm));
        KrylovResult lin = bicgstab(apply, precond, rhs, lin_tol, 200);
        out.report.linear_iters += lin.iters;
        if (!lin.converged)
            throw StepFailure("newton_solve: inner linear solve stalled at residual " +
                              std::to_string(lin.residual_norm));

        RealSamples delta_samples = backward_transform(lin.x);
        double alpha = 1.0;
        int bt = 0;
        for (;;) {
            for (std::size_t i = 0; i < trial.size(); ++i)
                trial[i] = phi_samples[i] + alpha * delta_samples[i];
            if (interior(trial)) break;
            alpha *= 0.5;
            ++bt;
            ++out.report.backtracks;
            if (bt > cfg.max_backtrack)
                throw StepFailure("newton_solve: phase bound unrecoverable after " +
                                  std::to_string(bt) + " halvings");
        }

        SpectralField upd = lin.x;
        upd *= alpha;
        out.phi += upd;
        phi_samples.swap(trial);
        ++out.report.newton_iters;

        r = residual_from_samples(out.phi, phi_samples, phi_n, transport, p, dt);
        rnorm = sobolev_norm(r, 0);
        out.report.residual_history.push_back(rnorm);
    }

    out.report.final_residual = rnorm;
    return out;
}

CHStepResult ch_step(const SpectralField& phi_n, const SpectralVectorField& u_n,
                     const FluidParams& p, const CHStepConfig& cfg) {
    if (cfg.dt <= 0.0) throw ConfigError("ch_step: dt must be positive");
    const Grid grid = phi_n.grid();

    RealSamples phis = backward_transform(phi_n);
    if (!interior(phis)) throw PhaseBoundError("ch_step: phi_n not strictly interior");

    // Transport in divergence form: exactly zero mean in coefficients.
    RealSamples wx = backward_transform(u_n.x);
    RealSamples wy = backward_transform(u_n.y);
    for (std::size_t i = 0; i < phis.size(); ++i) {
        wx[i] *= phis[i];
        wy[i] *= phis[i];
    }
    SpectralVectorField w = forward_transform(wx, wy, grid);
    dealias_inplace(w);
    SpectralField transport = divergence(w);

    NewtonResult nr = newton_solve(phi_n, phi_n, transport, p, cfg);

    CHStepResult res;
    res.phi = std::move(nr.phi);
    res.report = std::move(nr.report);
    // Exact mass conservation: the k=0 residual row is the identity, so the
    // solve leaves the mean untouched up to the linear tolerance; pin it.
    res.phi.coeff(0, 0) = phi_n.coeff(0, 0);

    RealSamples phinext_s = backward_transform(res.phi);
    res.mu = scheme_mu(res.phi, phinext_s, phi_n, p);
    return res;
}

} // namespace agg
