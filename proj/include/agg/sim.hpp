#pragma once

#include <functional>
#include <string>
#include <vector>

#include "agg/checkpoint.hpp"
#include "agg/config.hpp"
#include "agg/diagnostics.hpp"
#include "agg/model.hpp"

namespace agg {

/// Canonical state between steps: real samples, so checkpoints and resumes
/// are bit-exact.  Spectral views are rebuilt (and dealiased) per step.
struct SampleState {
    double time = 0.0;
    RealSamples phi;
    RealSamples ux;
    RealSamples uy;
};

struct AdvanceResult {
    SpectralField mu;       // scheme mu^{n+1} of the last substep
    SpectralField pressure; // pressure of the last substep
    int newton_iters = 0;   // summed over substeps
    int pcg_iters = 0;
    int substeps = 1;
};

SampleState make_initial_state(const RunConfig& cfg);

FlowState to_flow_state(const SampleState& s, const Grid& grid);

/// One macro-step of length ns_cfg.dt == ch_cfg.dt: Cahn-Hilliard first with
/// u^n, then the momentum step with phi^{n+1}, mu^{n+1}.  On StepFailure the
/// interval is re-attempted as two halves, recursively up to depth 5, so the
/// caller's step cadence is preserved.  Throws RunAbort when exhausted.
AdvanceResult advance(SampleState& state, const Grid& grid, const FluidParams& p,
                      const NSStepConfig& ns_cfg, const CHStepConfig& ch_cfg, int depth = 0);

using RecordSink = std::function<void(const DiagnosticsRecord&)>;

struct RunResult {
    int exit_code = 0;
    std::string message;
    SampleState final_state;
    std::int64_t steps_done = 0;
};

/// Drive the coupled system from the configured initial state to t_end,
/// writing the diagnostics CSV and checkpoints under cfg.output.  `sink`,
/// when set, receives every emitted record (acceptance tests use this).
RunResult run(const RunConfig& cfg, bool quiet = true, const RecordSink& sink = nullptr);

/// Continue a run from a checkpoint written by `run`.  Solver settings and
/// t_end come from cfg; the physical parameters come from the checkpoint and
/// must match cfg.fluid exactly.  Emitted rows reproduce an uninterrupted
/// run byte-for-byte.
RunResult resume(const RunConfig& cfg, const std::string& checkpoint_path, bool quiet = true,
                 const RecordSink& sink = nullptr);

/// CSV column order shared by run() and the experiment reports.
std::string diagnostics_csv_header();
std::string diagnostics_csv_row(const DiagnosticsRecord& r);

} // namespace agg
