#pragma once

#include "agg/field.hpp"

namespace agg {

/// DFT of real grid samples, normalized so coeff(0,0) is the sample mean.
/// The result is Hermitian-symmetrized so the reality constraint holds
/// exactly, not just to FFT round-off.
SpectralField forward_transform(const RealSamples& samples, const Grid& grid);

/// Inverse of forward_transform; returns the real parts of the inverse DFT.
RealSamples backward_transform(const SpectralField& f);

RealSamples backward_transform(const SpectralField& f, RealSamples&& reuse);

inline SpectralVectorField forward_transform(const RealSamples& sx, const RealSamples& sy, const Grid& grid) {
    SpectralVectorField v;
    v.x = forward_transform(sx, grid);
    v.y = forward_transform(sy, grid);
    return v;
}

} // namespace agg
