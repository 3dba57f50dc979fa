#pragma once

#include <cmath>
#include <cstddef>

#include "agg/errors.hpp"

namespace agg {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Uniform n x n sampling of the torus (R/2piZ)^2.
///
/// Physical nodes are x_j = 2*pi*j/n.  After a forward transform the
/// retained wavenumbers per dimension are {-n/2+1, ..., n/2}; index a in
/// [0, n) maps to k = a for a <= n/2 and k = a - n otherwise.
struct Grid {
    int n = 0;

    Grid() = default;
    explicit Grid(int n_) : n(n_) {
        if (n < 8 || n % 2 != 0)
            throw ConfigError("Grid: n must be even and >= 8, got " + std::to_string(n));
    }

    std::size_t size() const { return static_cast<std::size_t>(n) * static_cast<std::size_t>(n); }

    /// Spacing between physical nodes.
    double h() const { return kTwoPi / n; }

    /// Wavenumber of transform index a in [0, n).
    int wavenumber(int a) const { return a <= n / 2 ? a : a - n; }

    /// Largest wavenumber kept by the 2/3 dealiasing rule: 3*max(|kx|,|ky|) <= n.
    int dealias_cutoff() const { return n / 3; }

    bool operator==(const Grid&) const = default;
};

} // namespace agg
