#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <vector>

#include "wavekin/cases.hpp"
#include "wavekin/diagnostics.hpp"

namespace wavekin {

struct RunArtifacts {
    std::vector<DiagnosticRecord> diagnostics;
    SnapshotSeries snapshots;
    CflReport cfl;
    double dt_used = 0.0;
    std::size_t steps = 0;
    bool aborted = false;
    std::size_t abort_step = 0;
    double wall_seconds = 0.0;
};

/// Integrate a configured run from t = 0 to t_end.
///
/// Diagnostics are recorded every `cadence` steps (plus t = 0 and the final
/// state); snapshots are taken at t = 0, at each configured snapshot time
/// (first step reaching it) and at t_end. With cfl_mode = enforce and the
/// Euler method, dt is clamped to the Proposition bound. A non-finite state
/// aborts the run and marks the artifacts instead of throwing.
inline RunArtifacts run(const SimulationConfig& cfg) {
    const auto wall_start = std::chrono::steady_clock::now();
    const Grid grid = cfg.make_grid();
    const KernelSpec spec(cfg.gamma);
    EnergyState state = project_ic(cfg.ic, grid);

    RunArtifacts art;
    art.cfl = cfl_bound(grid, spec, state, cfg.integrator.dt);
    double dt = cfg.integrator.dt;
    if (cfg.integrator.cfl_mode == CflMode::enforce &&
        cfg.integrator.method == Method::euler)
        dt = std::min(dt, art.cfl.dt_bound);
    art.dt_used = dt;

    art.diagnostics.push_back(diagnose(grid, state));
    art.snapshots.times.push_back(0.0);
    art.snapshots.states.push_back(state.g);

    const auto elapsed = [&wall_start] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start)
            .count();
    };
    const double T = cfg.integrator.t_end;
    if (T <= 0.0) {
        art.wall_seconds = elapsed();
        return art;
    }

    const auto n_steps = static_cast<std::size_t>(std::ceil(T / dt - 1e-12));
    std::vector<double> snap_times = cfg.snapshot_times;
    std::sort(snap_times.begin(), snap_times.end());
    std::size_t next_snap = 0;
    while (next_snap < snap_times.size() && snap_times[next_snap] <= 0.0) ++next_snap;

    for (std::size_t n = 1; n <= n_steps; ++n) {
        const double step_dt = std::min(dt, T - state.t);
        if (!(step_dt > 0.0)) break;
        try {
            state = step(grid, spec, state, cfg.integrator, step_dt, n);
        } catch (const InstabilityError& e) {
            art.aborted = true;
            art.abort_step = e.step;
            break;
        }
        art.steps = n;
        const bool last = (n == n_steps) || !(state.t < T);
        if (n % cfg.cadence == 0 || last) art.diagnostics.push_back(diagnose(grid, state));
        bool want_snap = last;
        while (next_snap < snap_times.size() && state.t >= snap_times[next_snap]) {
            want_snap = true;
            ++next_snap;
        }
        if (want_snap) {
            art.snapshots.times.push_back(state.t);
            art.snapshots.states.push_back(state.g);
        }
        if (last) break;
    }
    art.wall_seconds = elapsed();
    return art;
}

/// Run with snapshots on a fixed cadence in time (every `snap_dt` units),
/// used by the convergence studies.
inline RunArtifacts run_with_snapshot_cadence(SimulationConfig cfg, double snap_dt) {
    cfg.snapshot_times.clear();
    for (double t = snap_dt; t < cfg.integrator.t_end - 1e-12; t += snap_dt)
        cfg.snapshot_times.push_back(t);
    return run(cfg);
}

}  // namespace wavekin
