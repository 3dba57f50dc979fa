#pragma once

#include <cstdint>
#include <string>

#include "agg/cahn_hilliard.hpp"
#include "agg/fluid_params.hpp"
#include "agg/grid.hpp"
#include "agg/navier_stokes.hpp"

namespace agg {

enum class IcPreset { Spinodal, TaylorGreen, Bubble };

struct InitialCondition {
    IcPreset preset = IcPreset::Spinodal;
    std::uint64_t seed = 1;
    // spinodal: phi = mean + uniform noise in [-amplitude, amplitude], u = 0
    double mean = 0.0;
    double amplitude = 0.05;
    // taylor_green: u = velocity_amplitude (sin x cos y, -cos x sin y)
    double velocity_amplitude = 1.0;
    std::string phi_mode = "constant"; // "constant" or "band"
    double phi_value = 0.0;
    // bubble: phi = phi_max tanh((radius - r)/width), centered at (pi, pi)
    double radius = 1.2;
    double width = 0.35;
    double phi_max = 0.95;
    // band (stratified tanh strip for taylor_green)
    double band_amplitude = 0.8;
    double band_width = 0.5;
};

struct OutputConfig {
    std::string dir = ".";
    std::string csv = "diagnostics.csv";
    std::string checkpoint = "state.agg2chk";
    int diag_every = 1;
    int checkpoint_every = 0; // 0 = final checkpoint only
};

struct RunConfig {
    int n = 64;
    double dt = 1e-3;
    double t_end = 1.0;
    FluidParams fluid;
    InitialCondition ic;
    NSStepConfig ns;
    CHStepConfig ch;
    OutputConfig output;

    void validate() const;
};

/// Parse the `key = value` sections [grid] [time] [fluid] [potential] [ic]
/// [ns] [ch] [output].  Unknown sections or keys are errors naming the
/// offending key.
RunConfig parse_config_text(const std::string& text);
RunConfig load_config(const std::string& path);

} // namespace agg
