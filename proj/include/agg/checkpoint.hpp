#pragma once

#include <string>

#include "agg/field.hpp"
#include "agg/fluid_params.hpp"

namespace agg {

/// Raw simulation state as stored on disk: real samples, row-major.
struct CheckpointData {
    int n = 0;
    double time = 0.0;
    FluidParams fluid;
    RealSamples phi;
    RealSamples ux;
    RealSamples uy;
};

/// Little-endian binary layout: magic "AGG2", u32 version = 1, u32 n,
/// f64 time, f64 rho1 rho2 nu1 nu2 theta theta0, then three n*n f64 blocks
/// (phi, u_x, u_y).  Round-trips are bit-exact.
void write_checkpoint(const std::string& path, const CheckpointData& data);
CheckpointData read_checkpoint(const std::string& path);

} // namespace agg
