#pragma once

#include <algorithm>
#include <string>

#include "agg/errors.hpp"

namespace agg {

/// Physical constants of the two-fluid mixture: homogeneous densities and
/// viscosities of the pure phases and the two potential temperatures,
/// subject to 0 < theta < theta0.
struct FluidParams {
    double rho1 = 1.0;
    double rho2 = 1.0;
    double nu1 = 1.0;
    double nu2 = 1.0;
    double theta = 1.0;
    double theta0 = 2.0;

    double rho_min() const { return std::min(rho1, rho2); }
    double rho_max() const { return std::max(rho1, rho2); }
    double nu_min() const { return std::min(nu1, nu2); }
    double nu_max() const { return std::max(nu1, nu2); }

    /// rho'(phi), constant because rho is affine: (rho1 - rho2)/2.
    double rho_slope() const { return 0.5 * (rho1 - rho2); }
    double rho_mid() const { return 0.5 * (rho1 + rho2); }
    double nu_slope() const { return 0.5 * (nu1 - nu2); }
    double nu_mid() const { return 0.5 * (nu1 + nu2); }

    void validate() const {
        if (rho1 <= 0.0 || rho2 <= 0.0) throw ConfigError("FluidParams: densities must be positive");
        if (nu1 <= 0.0 || nu2 <= 0.0) throw ConfigError("FluidParams: viscosities must be positive");
        if (!(0.0 < theta && theta < theta0))
            throw ConfigError("FluidParams: need 0 < theta < theta0, got theta=" + std::to_string(theta) +
                              " theta0=" + std::to_string(theta0));
    }
};

} // namespace agg
