#pragma once

#include <cmath>
#include <functional>

#include "agg/field.hpp"
#include "agg/spectral_ops.hpp"

namespace agg {

struct KrylovResult {
    SpectralField x;
    int iters = 0;
    double residual_norm = 0.0;
    bool converged = false;
};

using FieldOp = std::function<SpectralField(const SpectralField&)>;

/// Conjugate gradients for a symmetric positive definite operator,
/// preconditioned by `precond` (also SPD).  Convergence on the absolute
/// L^2 norm of the true residual b - A x.
inline KrylovResult pcg(const FieldOp& apply, const FieldOp& precond, const SpectralField& b,
                        double tol, int max_iter) {
    KrylovResult res;
    res.x = SpectralField(b.grid());
    SpectralField r = b;
    res.residual_norm = sobolev_norm(r, 0);
    if (res.residual_norm <= tol) {
        res.converged = true;
        return res;
    }
    SpectralField z = precond(r);
    SpectralField p = z;
    double rz = inner_l2(r, z);
    for (int it = 1; it <= max_iter; ++it) {
        SpectralField ap = apply(p);
        const double pap = inner_l2(p, ap);
        if (!(pap > 0.0)) break; // lost positivity; bail out with best iterate
        const double alpha = rz / pap;
        for (std::size_t i = 0; i < res.x.data().size(); ++i) {
            res.x.data()[i] += alpha * p.data()[i];
            r.data()[i] -= alpha * ap.data()[i];
        }
        res.iters = it;
        res.residual_norm = sobolev_norm(r, 0);
        if (res.residual_norm <= tol) {
            res.converged = true;
            return res;
        }
        z = precond(r);
        const double rz_next = inner_l2(r, z);
        const double beta = rz_next / rz;
        rz = rz_next;
        for (std::size_t i = 0; i < p.data().size(); ++i)
            p.data()[i] = z.data()[i] + beta * p.data()[i];
    }
    return res;
}

/// BiCGStab with right preconditioning for mildly nonsymmetric operators.
/// Convergence on the absolute L^2 norm of the residual.
inline KrylovResult bicgstab(const FieldOp& apply, const FieldOp& precond, const SpectralField& b,
                             double tol, int max_iter) {
    KrylovResult res;
    res.x = SpectralField(b.grid());
    SpectralField r = b;
    res.residual_norm = sobolev_norm(r, 0);
    if (res.residual_norm <= tol) {
        res.converged = true;
        return res;
    }
    const SpectralField r0 = r;
    SpectralField p = r;
    double rho = inner_l2(r0, r);
    for (int it = 1; it <= max_iter; ++it) {
        SpectralField phat = precond(p);
        SpectralField v = apply(phat);
        const double r0v = inner_l2(r0, v);
        if (r0v == 0.0) break;
        const double alpha = rho / r0v;
        SpectralField s = r;
        for (std::size_t i = 0; i < s.data().size(); ++i) s.data()[i] -= alpha * v.data()[i];
        if (sobolev_norm(s, 0) <= tol) {
            for (std::size_t i = 0; i < res.x.data().size(); ++i)
                res.x.data()[i] += alpha * phat.data()[i];
            res.iters = it;
            res.residual_norm = sobolev_norm(s, 0);
            res.converged = true;
            return res;
        }
        SpectralField shat = precond(s);
        SpectralField t = apply(shat);
        const double tt = inner_l2(t, t);
        if (tt == 0.0) break;
        const double omega = inner_l2(t, s) / tt;
        for (std::size_t i = 0; i < res.x.data().size(); ++i) {
            res.x.data()[i] += alpha * phat.data()[i] + omega * shat.data()[i];
            r.data()[i] = s.data()[i] - omega * t.data()[i];
        }
        res.iters = it;
        res.residual_norm = sobolev_norm(r, 0);
        if (res.residual_norm <= tol) {
            res.converged = true;
            return res;
        }
        const double rho_next = inner_l2(r0, r);
        if (rho_next == 0.0 || omega == 0.0) break;
        const double beta = (rho_next / rho) * (alpha / omega);
        rho = rho_next;
        for (std::size_t i = 0; i < p.data().size(); ++i)
            p.data()[i] = r.data()[i] + beta * (p.data()[i] - omega * v.data()[i]);
    }
    return res;
}

} // namespace agg
