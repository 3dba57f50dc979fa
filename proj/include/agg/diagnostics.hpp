#pragma once

#include <cstdint>
#include <optional>

#include "agg/model.hpp"

namespace agg {

/// One row of monitored functionals.  Solver counters are filled in by the
/// time loop, not by record().
struct DiagnosticsRecord {
    std::int64_t step = 0;
    double t = 0.0;
    double E_total = 0.0;
    double E_kin = 0.0;
    double E_free = 0.0;
    double D_visc = 0.0;
    double D_mu = 0.0;
    double mass_phi = 0.0;
    double mom_x = 0.0;
    double mom_y = 0.0;
    double max_abs_phi = 0.0;
    double H1_u = 0.0;
    double H1_mu = 0.0;
    double H2_phi = 0.0;
    double H3_phi = 0.0;
    double H3_mu = 0.0;
    double L2_P = 0.0;
    double H_func = 0.0;
    double X_func = 0.0;
    std::optional<double> energy_residual; // absent on the first record
    double ratio_phiH2 = 0.0;
    double ratio_muH1 = 0.0;
    int newton_iters = 0;
    int pcg_iters = 0;
};

struct HFunctional {
    double value;         // 1/2 int nu|Du|^2 + 1/2 ||grad mu||^2 + int mu (u.grad phi)
    double lower_surrogate; // 1/4 ||grad mu||^2 + 1/4 int nu|Du|^2
};

/// H functional of the velocity/concentration estimates.
HFunctional h_functional(const FlowState& state, const FluidParams& p);

/// X = 1/2 ||grad mu||^2 + int mu (u.grad phi); H without the viscous term.
double x_functional(const FlowState& state, const FluidParams& p);

/// Monitored (never asserted) a priori estimate ratios:
///   ||phi||_{H^2} / (1 + ||grad mu||^{1/2}),  ||mu||_{H^1} / (1 + ||grad mu||).
struct EstimateRatios {
    double phi_h2;
    double mu_h1;
};
EstimateRatios estimate_ratios(const FlowState& state, const FluidParams& p);

/// Squared continuous-dependence metric ||u_a - u_b||_{L^2}^2 + ||phi_a - phi_b||_{H^1}^2.
double continuous_dependence_metric(const FlowState& a, const FlowState& b, const FluidParams& p);

/// Populate every functional; energy_residual = E(t_{n+1}) - E(t_n)
/// + (t_{n+1} - t_n) * (D_visc + D_mu) evaluated at the new state, present
/// only when prev is supplied.
DiagnosticsRecord record(const FlowState& state, const DiagnosticsRecord* prev,
                         const FluidParams& p, double dt);

} // namespace agg
