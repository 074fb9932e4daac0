// Acceptance suite: one PASS/FAIL line per criterion, exit code = number of
// failed criteria. Criteria follow the documented tolerances; checks that are
// transcribed verbatim but mathematically unattainable (see README, "Known
// limitations") run anyway and report their failure honestly.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "doc_examples.hpp"
#include "wavekin/wavekin.hpp"

using namespace wavekin;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string fmt(double x, int prec = 4) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", prec, x);
    return buf;
}

// --------------------------------------------------------------------------
// Shared convergence-study runs (criteria 1 and 2): gamma = 2, R = 50,
// T = 25, dt = 0.0125, spike initial data, snapshots every 0.25 time units.
// Companion grids h/2, h/4 double the cell count of the coarse grid so the
// families stay nested even when R/h is not integral (h = 0.3).

struct EocData {
    std::map<double, Grid> grids;
    std::map<double, SnapshotSeries> snaps;
    bool ok = false;
    std::string error;
};

const EocData& eoc_data() {
    static const EocData data = [] {
        EocData d;
        SimulationConfig base = preset("test1", 50.0, 2.0);
        base.integrator.dt = 0.0125;
        base.integrator.t_end = 25.0;
        base.integrator.cfl_mode = CflMode::off;

        std::vector<std::pair<double, std::size_t>> jobs;
        const auto add = [&](double h, std::size_t cells) {
            for (const auto& j : jobs)
                if (j.first == h) return;
            jobs.emplace_back(h, cells);
        };
        for (double h : {0.4, 0.3, 0.2}) {
            const auto m = static_cast<std::size_t>(std::llround(50.0 / h));
            add(h, m);
            add(h / 2, 2 * m);
            add(h / 4, 4 * m);
        }
        add(1.0 / 80.0, 4000);

        try {
            std::vector<std::future<std::pair<double, RunArtifacts>>> futs;
            for (const auto& [h, cells] : jobs) {
                d.grids.emplace(h, uniform_grid_cells(cells, h));
                futs.push_back(std::async(std::launch::async, [base, &d, h = h] {
                    SimulationConfig cfg = base;
                    cfg.edges = d.grids.at(h).edges();
                    return std::make_pair(h, run_with_snapshot_cadence(cfg, 0.25));
                }));
            }
            for (auto& f : futs) {
                auto [h, art] = f.get();
                if (art.aborted) throw std::runtime_error("instability at h=" + fmt(h));
                d.snaps.emplace(h, std::move(art.snapshots));
            }
            d.ok = true;
        } catch (const std::exception& e) {
            d.error = e.what();
        }
        return d;
    }();
    return data;
}

// Criterion 1: three-grid estimator at h in {0.4, 0.3, 0.2}, each with its
// h/2, h/4 companions; p in [2.3, 2.9] (reference values 2.58, 2.61, 2.64).
Outcome criterion1() {
    const auto& d = eoc_data();
    if (!d.ok) return {false, "convergence runs failed: " + d.error};
    Outcome out;
    std::ostringstream ss;
    for (double h : {0.4, 0.3, 0.2}) {
        const EocResult r = eoc_three_grid(d.grids.at(h), d.snaps.at(h), d.grids.at(h / 2),
                                           d.snaps.at(h / 2), d.grids.at(h / 4),
                                           d.snaps.at(h / 4));
        ss << " p(" << fmt(h, 2) << ")=" << fmt(r.p_paper) << " (t_max=" << fmt(r.t_max) << ")";
        if (!r.valid || r.p_paper < 2.3 || r.p_paper > 2.9) out.pass = false;
    }
    if (!out.pass) ss << " (published orders not reproduced, see README)";
    out.detail = ss.str();
    return out;
}

// Criterion 2: fine-grid estimator against h* = 1/80 at the final time;
// p(0.2) in [1.7, 2.4], p(0.1) in [2.2, 2.9].
Outcome criterion2() {
    const auto& d = eoc_data();
    if (!d.ok) return {false, "convergence runs failed: " + d.error};
    const Grid& fine = d.grids.at(1.0 / 80.0);
    const auto& sfine = d.snaps.at(1.0 / 80.0).states.back();
    const auto p_of = [&](double h) {
        return eoc_fine_grid(d.grids.at(h), d.snaps.at(h).states.back(), d.grids.at(h / 2),
                             d.snaps.at(h / 2).states.back(), fine, sfine, 25.0);
    };
    const EocResult p02 = p_of(0.2);
    const EocResult p01 = p_of(0.1);
    Outcome out;
    out.pass = p02.valid && p01.valid && p02.p_classical >= 1.7 && p02.p_classical <= 2.4 &&
               p01.p_classical >= 2.2 && p01.p_classical <= 2.9;
    out.detail = " p(0.2)=" + fmt(p02.p_classical) + " p(0.1)=" + fmt(p01.p_classical) +
                 (out.pass ? "" : " (published orders not reproduced, see README)");
    return out;
}

// Criterion 3: 100 randomized Euler runs at dt = cfl_bound: no negative cell
// and no sup-norm growth over 200 steps, exactly.
Outcome criterion3() {
    std::mt19937_64 rng(20260826);
    std::uniform_real_distribution<double> ug(1.0, 2.0), ur(2.0, 8.0), uv(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> um(4, 32);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = um(rng);
        const double R = ur(rng);
        const Grid grid = uniform_grid(R, R / static_cast<double>(m));
        const KernelSpec spec(ug(rng));
        EnergyState state;
        state.g.resize(m);
        for (auto& v : state.g) v = uv(rng);
        const double norm0 = linf_norm(state.g);
        const double dt = cfl_bound(grid, spec, state).dt_bound;
        for (int n = 0; n < 200; ++n) {
            state = step_euler(grid, spec, state, dt);
            for (double v : state.g)
                if (v < 0.0)
                    return {false, " negative cell in trial " + std::to_string(trial) +
                                       " at step " + std::to_string(n)};
            if (linf_norm(state.g) > norm0)
                return {false, " sup-norm growth in trial " + std::to_string(trial) +
                                   " at step " + std::to_string(n)};
        }
    }
    return {true, " 100 trials x 200 Euler steps, exact"};
}

// Criterion 4: optimized flux path vs reference path, 200 random instances,
// relative deviation <= 1e-13.
Outcome criterion4() {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ug(1.0, 2.0), uv(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> um(2, 128);
    std::uniform_int_distribution<int> coin(0, 1);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = um(rng);
        const Grid grid = coin(rng) ? uniform_grid(static_cast<double>(m) * 0.25, 0.25)
                                    : docex::random_nonuniform_grid(rng, m, 8.0);
        const KernelSpec spec(ug(rng));
        EnergyState state;
        state.g.resize(m);
        for (auto& v : state.g) v = uv(rng);
        const FluxVector a = composite_flux(grid, spec, state);
        const FluxVector b = composite_flux_fast(grid, spec, state);
        double scale = 1e-300, dev = 0.0;
        for (double q : a.q) scale = std::max(scale, std::abs(q));
        for (std::size_t e = 0; e < a.q.size(); ++e)
            dev = std::max(dev, std::abs(a.q[e] - b.q[e]));
        worst = std::max(worst, dev / scale);
    }
    return {worst <= 1e-13, " max relative deviation " + fmt(worst, 3)};
}

// Criterion 5: (a) flux-difference rate vs the direct per-cell oracle,
// <= 1e-11 relative; (b) weak-form cross-check with compactly supported data:
// the literal weak form vs the flux partial sum q(c) - q(0) at every edge
// cutoff <= R/2, <= 1e-10 relative. Part (b) is transcribed verbatim and is
// mathematically unattainable: the two-term flux identity drops the
// cutoff-dependent gain crossing term (see README, "Known limitations").
Outcome criterion5() {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ug(1.0, 2.0), uv(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> um(2, 64);
    std::uniform_int_distribution<int> coin(0, 1);
    double worst_a = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t m = um(rng);
        const Grid grid = coin(rng) ? uniform_grid(static_cast<double>(m) * 0.5, 0.5)
                                    : docex::random_nonuniform_grid(rng, m, 10.0);
        const KernelSpec spec(ug(rng));
        EnergyState state;
        state.g.resize(m);
        for (auto& v : state.g) v = uv(rng);
        const auto a = collision_rate(grid, spec, state);
        const auto b = direct_collision_oracle(grid, spec, state);
        double scale = 1e-300, dev = 0.0;
        for (double r : a) scale = std::max(scale, std::abs(r));
        for (std::size_t i = 0; i < m; ++i) dev = std::max(dev, std::abs(a[i] - b[i]));
        worst_a = std::max(worst_a, dev / scale);
    }

    double worst_b = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const Grid grid = uniform_grid(16.0, 0.25);
        const KernelSpec spec(uv(rng) + 1.0);
        const std::size_t m = grid.num_cells();
        EnergyState state;
        state.g.assign(m, 0.0);
        std::vector<double> f(m, 0.0);
        for (std::size_t i = 0; i < m; ++i)
            if (grid.pivot(i) < grid.truncation() / 4.0) {
                state.g[i] = uv(rng);
                f[i] = state.g[i] / grid.pivot(i);
            }
        const FluxVector fv = composite_flux_fast(grid, spec, state);
        double scale = 1e-300;
        for (std::size_t e = 0; e <= m; ++e)
            if (grid.edge(e) <= grid.truncation() / 2.0)
                scale = std::max(scale, std::abs(fv.q[e] - fv.q[0]));
        for (std::size_t e = 0; e <= m; ++e) {
            const double c = grid.edge(e);
            if (c > grid.truncation() / 2.0) continue;
            const double weak = oracle::weak_form_rhs(grid, spec, f, c);
            worst_b = std::max(worst_b, std::abs(weak - (fv.q[e] - fv.q[0])) / scale);
        }
    }

    Outcome out;
    out.pass = worst_a <= 1e-11 && worst_b <= 1e-10;
    out.detail = " rate-vs-oracle " + fmt(worst_a, 3) + " (tol 1e-11); weak-form cross-check " +
                 fmt(worst_b, 3) + " (tol 1e-10" +
                 (worst_b > 1e-10 ? "; fails by the dropped gain crossing term, see README)"
                                  : ")");
    return out;
}

// Criterion 6: telescoping conservation per Euler step: the partial sums
// sum_{i<I} (h_i/k_i) dg_i equal dt*(q[I] - q[0]) at every edge I.
Outcome criterion6() {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> ug(1.0, 2.0), uv(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> um(2, 64);
    std::uniform_int_distribution<int> coin(0, 1);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t m = um(rng);
        const Grid grid = coin(rng) ? uniform_grid(static_cast<double>(m) * 0.5, 0.5)
                                    : docex::random_nonuniform_grid(rng, m, 8.0);
        const KernelSpec spec(ug(rng));
        EnergyState state;
        state.g.resize(m);
        for (auto& v : state.g) v = uv(rng);
        const double dt = cfl_bound(grid, spec, state).dt_bound;
        const FluxVector fv = composite_flux_fast(grid, spec, state);
        const EnergyState next = step_euler(grid, spec, state, dt);
        double scale = 1e-300;
        for (double q : fv.q) scale = std::max(scale, dt * std::abs(q - fv.q[0]));
        scale = std::max(scale, 1e-30);
        double partial = 0.0;
        for (std::size_t I = 0; I <= m; ++I) {
            worst = std::max(worst, std::abs(partial - dt * (fv.q[I] - fv.q[0])) / scale);
            if (I < m)
                partial += grid.width(I) / grid.pivot(I) * (next.g[I] - state.g[I]);
        }
    }
    return {worst <= 1e-12, " max deviation " + fmt(worst, 3) + " x scale (tol 1e-12)"};
}

// Scaled cascade run used by criteria 7 and 8.
RunArtifacts cascade_run(double R) {
    SimulationConfig cfg = preset("test1", R, 2.0);
    cfg.integrator.dt = 0.05;
    cfg.integrator.t_end = 2000.0;
    cfg.integrator.cfl_mode = CflMode::off;
    cfg.cadence = 4;  // diagnostics every 0.2 time units
    return run(cfg);
}

double cascade_slope(const RunArtifacts& art) {
    std::vector<std::pair<double, double>> series;
    for (const auto& r : art.diagnostics) series.emplace_back(r.t, r.m0);
    return decay_slope(series, 200.0, 2000.0);
}

const RunArtifacts& cascade_r50() {
    static const RunArtifacts art = cascade_run(50.0);
    return art;
}

// Criterion 7: scaled spike-data cascade at R = 50 (RK2, dt = 0.05,
// T = 2000): early conservation, majority decay, and a fitted decay exponent
// in [0.4, 1.2] over t in [200, 2000].
Outcome criterion7() {
    const RunArtifacts& art = cascade_r50();
    if (art.aborted) return {false, " run aborted"};
    const double m00 = art.diagnostics.front().m0;
    bool early_ok = true;
    for (const auto& r : art.diagnostics)
        if (r.t <= 0.5 + 1e-9 && std::abs(r.m0 - m00) > 0.01 * m00) early_ok = false;
    const double m0T = art.diagnostics.back().m0;
    const double s = cascade_slope(art);
    Outcome out;
    out.pass = early_ok && m0T < 0.5 * m00 && s >= 0.4 && s <= 1.2;
    out.detail = " M0(0)=" + fmt(m00) + " M0(T)=" + fmt(m0T) + " slope=" + fmt(s) +
                 (early_ok ? "" : " (early drift > 1%, see README)");
    return out;
}

// Criterion 8: the same cascade at R = 100 gives a decay exponent within 0.1
// of the R = 50 run (truncation independence).
Outcome criterion8() {
    const RunArtifacts& a50 = cascade_r50();
    const RunArtifacts a100 = cascade_run(100.0);
    if (a50.aborted || a100.aborted) return {false, " run aborted"};
    const double s50 = cascade_slope(a50);
    const double s100 = cascade_slope(a100);
    Outcome out;
    out.pass = std::abs(s50 - s100) <= 0.1;
    out.detail = " slope(R=50)=" + fmt(s50) + " slope(R=100)=" + fmt(s100) + " diff=" +
                 fmt(std::abs(s50 - s100));
    return out;
}

// Criterion 9: scaled Gaussian-data run at R = 100 (dt = 0.005, T = 1000):
// the sup-norm peak moves strictly left.
Outcome criterion9() {
    SimulationConfig cfg = preset("test2", 100.0, 2.0);
    cfg.integrator.t_end = 1000.0;
    cfg.integrator.cfl_mode = CflMode::off;
    cfg.cadence = 10000;
    const RunArtifacts art = run(cfg);
    if (art.aborted) return {false, " run aborted"};
    const double k0 = art.diagnostics.front().argmax_k;
    const double kT = art.diagnostics.back().argmax_k;
    return {kT < k0, " argmax " + fmt(k0) + " -> " + fmt(kT)};
}

// Criterion 10: the full catalog of documented unit examples, derived values
// recomputed by the independent oracles. Three entries are transcribed
// verbatim from the documentation and are known unattainable; they run and
// fail honestly (see README, "Known limitations").
Outcome criterion10() {
    std::size_t failed = 0, total = 0;
    std::ostringstream ss;
    for (const auto& ex : docex::catalog()) {
        ++total;
        try {
            ex.fn();
        } catch (const std::exception& e) {
            ++failed;
            ss << "\n    example '" << ex.name << "': " << e.what()
               << (ex.known_failing ? "  [documented-as-stated; known unattainable]" : "");
        }
    }
    Outcome out;
    out.pass = failed == 0;
    out.detail = " " + std::to_string(total - failed) + "/" + std::to_string(total) +
                 " examples pass" + ss.str();
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* desc;
        Outcome (*fn)();
    };
    const Criterion criteria[] = {
        {1, "three-grid convergence order, h in {0.4, 0.3, 0.2}", criterion1},
        {2, "fine-grid convergence order against h* = 1/80", criterion2},
        {3, "positivity and sup-norm stability at the CFL bound", criterion3},
        {4, "optimized flux path matches the reference path", criterion4},
        {5, "rate oracle equivalence and weak-form cross-check", criterion5},
        {6, "telescoping conservation identity per Euler step", criterion6},
        {7, "scaled spike-data cascade: conservation, decay, exponent", criterion7},
        {8, "decay exponent independent of truncation (R=50 vs R=100)", criterion8},
        {9, "scaled Gaussian-data run: peak moves strictly left", criterion9},
        {10, "documented unit examples (oracle-recomputed)", criterion10},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        Outcome out;
        try {
            out = c.fn();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string(" unexpected exception: ") + e.what();
        }
        if (!out.pass) ++failures;
        std::printf("%s criterion %2d: %s —%s\n", out.pass ? "PASS" : "FAIL", c.id, c.desc,
                    out.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/10 criteria passed\n", 10 - failures);
    return failures;
}
