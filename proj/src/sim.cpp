#include "agg/sim.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>

#include "agg/cahn_hilliard.hpp"
#include "agg/errors.hpp"
#include "agg/fft.hpp"
#include "agg/navier_stokes.hpp"
#include "agg/rng.hpp"
#include "agg/spectral_ops.hpp"

namespace agg {
namespace {

constexpr double kIcBoundMargin = 1e-6;

// Band-limit sample data: forward, 2/3-rule, back.
RealSamples band_limit(const RealSamples& s, const Grid& grid) {
    return backward_transform(dealias(forward_transform(s, grid)));
}

void check_ic_bounds(const RealSamples& phi) {
    double m = 0.0, acc = 0.0;
    for (double v : phi) {
        m = std::max(m, std::abs(v));
        acc += v;
    }
    if (!(m <= 1.0 - kIcBoundMargin))
        throw ConfigError("initial condition: max|phi0| = " + std::to_string(m) +
                          " exceeds 1 - 1e-6");
    const double mean = acc / static_cast<double>(phi.size());
    if (!(std::abs(mean) < 1.0))
        throw ConfigError("initial condition: |mean(phi0)| must be < 1");
}

RealSamples spinodal_phi(const Grid& grid, const InitialCondition& ic) {
    Rng rng(ic.seed);
    RealSamples phi(grid.size());
    for (double& v : phi) v = rng.uniform(-ic.amplitude, ic.amplitude);
    phi = band_limit(phi, grid);
    // Recenter so the mean is exactly the configured value.
    double acc = 0.0;
    for (double v : phi) acc += v;
    const double shift = ic.mean - acc / static_cast<double>(phi.size());
    for (double& v : phi) v += shift;
    return phi;
}

RealSamples bubble_phi(const Grid& grid, const InitialCondition& ic) {
    const int n = grid.n;
    RealSamples phi(grid.size());
    const double cx = 0.5 * kTwoPi, cy = 0.5 * kTwoPi;
    for (int i = 0; i < n; ++i) {
        const double x = grid.h() * i;
        double dx = std::abs(x - cx);
        dx = std::min(dx, kTwoPi - dx);
        for (int j = 0; j < n; ++j) {
            const double y = grid.h() * j;
            double dy = std::abs(y - cy);
            dy = std::min(dy, kTwoPi - dy);
            const double r = std::sqrt(dx * dx + dy * dy);
            phi[static_cast<std::size_t>(i) * n + j] = ic.phi_max * std::tanh((ic.radius - r) / ic.width);
        }
    }
    return band_limit(phi, grid);
}

RealSamples band_phi(const Grid& grid, const InitialCondition& ic) {
    const int n = grid.n;
    RealSamples phi(grid.size());
    const double y1 = 0.5 * kTwoPi - 0.25 * kTwoPi;
    const double y2 = 0.5 * kTwoPi + 0.25 * kTwoPi;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double y = grid.h() * j;
            const double band = std::tanh((y - y1) / ic.band_width) - std::tanh((y - y2) / ic.band_width) - 1.0;
            phi[static_cast<std::size_t>(i) * n + j] = ic.band_amplitude * band;
        }
    return band_limit(phi, grid);
}

} // namespace

SampleState make_initial_state(const RunConfig& cfg) {
    const Grid grid(cfg.n);
    SampleState s;
    s.time = 0.0;
    s.ux.assign(grid.size(), 0.0);
    s.uy.assign(grid.size(), 0.0);

    switch (cfg.ic.preset) {
        case IcPreset::Spinodal:
            s.phi = spinodal_phi(grid, cfg.ic);
            break;
        case IcPreset::Bubble:
            s.phi = bubble_phi(grid, cfg.ic);
            break;
        case IcPreset::TaylorGreen: {
            const int n = grid.n;
            s.ux.resize(grid.size());
            s.uy.resize(grid.size());
            for (int i = 0; i < n; ++i) {
                const double x = grid.h() * i;
                for (int j = 0; j < n; ++j) {
                    const double y = grid.h() * j;
                    const std::size_t idx = static_cast<std::size_t>(i) * n + j;
                    s.ux[idx] = cfg.ic.velocity_amplitude * std::sin(x) * std::cos(y);
                    s.uy[idx] = -cfg.ic.velocity_amplitude * std::cos(x) * std::sin(y);
                }
            }
            if (cfg.ic.phi_mode == "constant") {
                s.phi.assign(grid.size(), cfg.ic.phi_value);
            } else if (cfg.ic.phi_mode == "band") {
                s.phi = band_phi(grid, cfg.ic);
            } else {
                throw ConfigError("initial condition: unknown phi_mode '" + cfg.ic.phi_mode + "'");
            }
            break;
        }
    }
    check_ic_bounds(s.phi);

    // Keep u exactly solenoidal and band-limited at t = 0.
    SpectralVectorField u = forward_transform(s.ux, s.uy, grid);
    dealias_inplace(u);
    u = leray_project(std::move(u));
    s.ux = backward_transform(u.x, std::move(s.ux));
    s.uy = backward_transform(u.y, std::move(s.uy));
    return s;
}

FlowState to_flow_state(const SampleState& s, const Grid& grid) {
    FlowState f;
    f.time = s.time;
    f.phi = dealias(forward_transform(s.phi, grid));
    f.u = forward_transform(s.ux, s.uy, grid);
    dealias_inplace(f.u);
    f.mu = SpectralField(grid);
    f.pressure = SpectralField(grid);
    return f;
}

AdvanceResult advance(SampleState& state, const Grid& grid, const FluidParams& p,
                      const NSStepConfig& ns_cfg, const CHStepConfig& ch_cfg, int depth) {
    SampleState saved = state;
    try {
        SpectralField phi_n = dealias(forward_transform(state.phi, grid));
        SpectralVectorField u_n = forward_transform(state.ux, state.uy, grid);
        dealias_inplace(u_n);

        CHStepResult ch = ch_step(phi_n, u_n, p, ch_cfg);
        NSStepResult ns = ns_step(u_n, ch.phi, ch.mu, p, ns_cfg);

        state.phi = backward_transform(ch.phi, std::move(state.phi));
        state.ux = backward_transform(ns.u.x, std::move(state.ux));
        state.uy = backward_transform(ns.u.y, std::move(state.uy));
        state.time += ch_cfg.dt;

        AdvanceResult out;
        out.mu = std::move(ch.mu);
        out.pressure = std::move(ns.pressure);
        out.newton_iters = ch.report.newton_iters;
        out.pcg_iters = ns.pcg_iters;
        return out;
    } catch (const StepFailure& e) {
        state = std::move(saved);
        if (depth >= 5)
            throw RunAbort(std::string("advance: retries exhausted at t = ") +
                           std::to_string(state.time) + ": " + e.what());
        NSStepConfig ns_half = ns_cfg;
        CHStepConfig ch_half = ch_cfg;
        ns_half.dt *= 0.5;
        ch_half.dt *= 0.5;
        AdvanceResult first = advance(state, grid, p, ns_half, ch_half, depth + 1);
        AdvanceResult second = advance(state, grid, p, ns_half, ch_half, depth + 1);
        second.newton_iters += first.newton_iters;
        second.pcg_iters += first.pcg_iters;
        second.substeps = first.substeps + second.substeps;
        return second;
    }
}

std::string diagnostics_csv_header() {
    return "step,t,E_total,E_kin,E_free,D_visc,D_mu,mass_phi,mom_x,mom_y,max_abs_phi,"
           "H1_u,H1_mu,H2_phi,H3_phi,H3_mu,L2_P,H_func,X_func,energy_residual,"
           "ratio_phiH2,ratio_muH1,newton_iters,pcg_iters";
}

std::string diagnostics_csv_row(const DiagnosticsRecord& r) {
    char buf[1024];
    const double residual = r.energy_residual ? *r.energy_residual
                                              : std::numeric_limits<double>::quiet_NaN();
    std::snprintf(buf, sizeof buf,
                  "%" PRId64 ",%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,"
                  "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%d,%d",
                  r.step, r.t, r.E_total, r.E_kin, r.E_free, r.D_visc, r.D_mu, r.mass_phi,
                  r.mom_x, r.mom_y, r.max_abs_phi, r.H1_u, r.H1_mu, r.H2_phi, r.H3_phi,
                  r.H3_mu, r.L2_P, r.H_func, r.X_func, residual, r.ratio_phiH2, r.ratio_muH1,
                  r.newton_iters, r.pcg_iters);
    return buf;
}

namespace {

struct LoopIo {
    std::ofstream csv;
    std::string checkpoint_path;
};

DiagnosticsRecord make_record(const SampleState& state, const Grid& grid, const FluidParams& p,
                              const SpectralField* mu, const SpectralField* pressure,
                              const DiagnosticsRecord* prev, double dt, std::int64_t step) {
    FlowState f = to_flow_state(state, grid);
    if (mu) f.mu = *mu;
    if (pressure) f.pressure = *pressure;
    DiagnosticsRecord r = record(f, prev, p, dt);
    r.step = step;
    return r;
}

RunResult run_loop(const RunConfig& cfg, SampleState state, std::int64_t first_step,
                   bool emit_initial_record, bool quiet, const RecordSink& sink, LoopIo& io) {
    const Grid grid(cfg.n);
    const std::int64_t total_steps = std::llround(cfg.t_end / cfg.dt);
    if (total_steps < 1) throw ConfigError("run: t_end shorter than one step");

    RunResult result;
    DiagnosticsRecord prev;
    bool have_prev = false;

    auto emit = [&](const DiagnosticsRecord& r) {
        if (io.csv.is_open()) {
            io.csv << diagnostics_csv_row(r) << '\n';
            io.csv.flush();
        }
        if (sink) sink(r);
    };

    if (emit_initial_record) {
        // At t = 0 the cache fields hold the time-zero chemical potential
        // and a zero pressure.
        FlowState f = to_flow_state(state, grid);
        f.mu = chemical_potential(f.phi, cfg.fluid);
        DiagnosticsRecord r0 = record(f, nullptr, cfg.fluid, cfg.dt);
        r0.step = first_step;
        emit(r0);
        prev = r0;
        have_prev = true;
    } else {
        // Resumed: rebuild the reference energy of the checkpointed instant
        // (identical to the uninterrupted run's record at that step).
        prev = make_record(state, grid, cfg.fluid, nullptr, nullptr, nullptr, cfg.dt, first_step);
        have_prev = true;
    }

    auto write_checkpoint_now = [&](const SampleState& s) {
        CheckpointData data;
        data.n = cfg.n;
        data.time = s.time;
        data.fluid = cfg.fluid;
        data.phi = s.phi;
        data.ux = s.ux;
        data.uy = s.uy;
        write_checkpoint(io.checkpoint_path, data);
    };

    std::int64_t step = first_step;
    try {
        while (step < total_steps) {
            AdvanceResult adv = advance(state, grid, cfg.fluid, cfg.ns, cfg.ch);
            ++step;
            if (step % cfg.output.diag_every == 0 || step == total_steps) {
                DiagnosticsRecord r = make_record(state, grid, cfg.fluid, &adv.mu, &adv.pressure,
                                                  have_prev ? &prev : nullptr, cfg.dt, step);
                r.newton_iters = adv.newton_iters;
                r.pcg_iters = adv.pcg_iters;
                emit(r);
                prev = r;
                have_prev = true;
                if (!quiet)
                    std::printf("step %" PRId64 "/%" PRId64 "  t=%.6g  E=%.12g\n", step,
                                total_steps, r.t, r.E_total);
            }
            if (cfg.output.checkpoint_every > 0 && step % cfg.output.checkpoint_every == 0)
                write_checkpoint_now(state);
        }
        write_checkpoint_now(state);
        result.exit_code = 0;
    } catch (const RunAbort& e) {
        if (io.csv.is_open()) io.csv.flush();
        result.exit_code = 1;
        result.message = e.what();
        if (!quiet) std::fprintf(stderr, "run aborted: %s\n", e.what());
    }
    result.final_state = std::move(state);
    result.steps_done = step;
    return result;
}

LoopIo open_io(const RunConfig& cfg, bool append_csv) {
    LoopIo io;
    namespace fs = std::filesystem;
    fs::create_directories(cfg.output.dir);
    const fs::path dir(cfg.output.dir);
    const fs::path csv_path = dir / cfg.output.csv;
    io.csv.open(csv_path, append_csv ? std::ios::app : std::ios::trunc);
    if (!io.csv) throw ConfigError("run: cannot open " + csv_path.string());
    if (!append_csv) io.csv << diagnostics_csv_header() << '\n';
    io.checkpoint_path = (dir / cfg.output.checkpoint).string();
    return io;
}

} // namespace

RunResult run(const RunConfig& cfg, bool quiet, const RecordSink& sink) {
    cfg.validate();
    LoopIo io = open_io(cfg, /*append_csv=*/false);
    SampleState state = make_initial_state(cfg);
    return run_loop(cfg, std::move(state), 0, /*emit_initial_record=*/true, quiet, sink, io);
}

RunResult resume(const RunConfig& cfg, const std::string& checkpoint_path, bool quiet,
                 const RecordSink& sink) {
    cfg.validate();
    CheckpointData data = read_checkpoint(checkpoint_path);
    if (data.n != cfg.n)
        throw ConfigError("resume: checkpoint grid n=" + std::to_string(data.n) +
                          " does not match config n=" + std::to_string(cfg.n));
    const FluidParams& a = data.fluid;
    const FluidParams& b = cfg.fluid;
    if (a.rho1 != b.rho1 || a.rho2 != b.rho2 || a.nu1 != b.nu1 || a.nu2 != b.nu2 ||
        a.theta != b.theta || a.theta0 != b.theta0)
        throw ConfigError("resume: checkpoint fluid parameters differ from config");

    SampleState state;
    state.time = data.time;
    state.phi = std::move(data.phi);
    state.ux = std::move(data.ux);
    state.uy = std::move(data.uy);
    const std::int64_t first_step = std::llround(state.time / cfg.dt);

    LoopIo io = open_io(cfg, /*append_csv=*/true);
    return run_loop(cfg, std::move(state), first_step, /*emit_initial_record=*/false, quiet, sink, io);
}

} // namespace agg
