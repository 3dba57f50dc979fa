#pragma once

#include "agg/field.hpp"

namespace agg {

/// Components i*k_j*f_hat_k.  The Nyquist row/column (k = n/2) is zeroed,
/// as in every derivative multiplier below.
SpectralVectorField gradient(const SpectralField& f);

/// i k . v_hat_k.
SpectralField divergence(const SpectralVectorField& v);

/// -|k|^2 multiplier.
SpectralField laplacian(const SpectralField& f);

/// |k|^4 multiplier.
SpectralField bilaplacian(const SpectralField& f);

/// D_ij = (d_i v_j + d_j v_i)/2.
SymmetricGradient symmetric_gradient(const SpectralVectorField& v);

/// 2/3-rule: zero every coefficient with 3*max(|kx|,|ky|) > n.
SpectralField dealias(SpectralField f);
void dealias_inplace(SpectralField& f);
void dealias_inplace(SpectralVectorField& v);

/// Coefficient-sum Sobolev norm:
///   ||f||_{H^s}^2 = (2 pi)^2 / 2 * sum_k (1 + |k|^{2s}) |f_hat_k|^2.
/// The scaling makes s = 0 coincide with the L^2(T^2) integral norm, since
/// the weight is identically 2 there.
double sobolev_norm(const SpectralField& f, int s);
double sobolev_norm(const SpectralVectorField& v, int s);

/// L^2(T^2) inner product via Parseval: (2 pi)^2 sum_k f_hat_k conj(g_hat_k).
double inner_l2(const SpectralField& f, const SpectralField& g);
double inner_l2(const SpectralVectorField& v, const SpectralVectorField& w);

/// The mean value of the field; exactly coeff(0,0) under our normalization.
double mean(const SpectralField& f);

/// Helmholtz-Leray projection: v_hat_k -> v_hat_k - (k.v_hat_k) k / |k|^2
/// for k != 0.  The k = 0 mode is retained unchanged (the velocity mean is
/// a dynamical variable here, not gauged away).
SpectralVectorField leray_project(SpectralVectorField v);

/// Max over grid samples of |f|. Transforms internally.
double max_abs_samples(const SpectralField& f);

} // namespace agg
