// wavekin: command-line driver for the energy-form 3-wave finite volume
// solver. Subcommands: run, eoc, sweep, presets.
//
// Exit codes: 0 success, 2 config error, 3 instability abort, 4 I/O error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wavekin/wavekin.hpp"

namespace fs = std::filesystem;
using namespace wavekin;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitInstability = 3;
constexpr int kExitIo = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SimulationConfig load_config(const std::string& path, const std::vector<std::string>& sets) {
    std::string text = read_file(path);
    for (const auto& s : sets) text += "\n" + s + "\n";
    return parse_config(text);
}

// Writes moments.csv, snapshots.csv and report.txt under dir; returns the
// exit code (0 or 3 on instability abort).
int write_run_outputs(const SimulationConfig& cfg, const RunArtifacts& art, const fs::path& dir) {
    write_text_atomic(dir / "moments.csv", render_moments_csv(art.diagnostics));
    write_text_atomic(dir / "snapshots.csv", render_snapshots_csv(cfg.make_grid(), art.snapshots));
    write_text_atomic(dir / "report.txt", render_report(cfg, art));
    if (art.aborted) {
        std::cerr << "wavekin: instability abort at step " << art.abort_step
                  << " (see " << (dir / "report.txt").string() << ")\n";
        return kExitInstability;
    }
    return kExitOk;
}

int cmd_run(const std::string& config_path, const std::vector<std::string>& sets) {
    const SimulationConfig cfg = load_config(config_path, sets);
    const RunArtifacts art = run(cfg);
    const fs::path dir = fs::path(cfg.out_dir) / cfg.label;
    const int rc = write_run_outputs(cfg, art, dir);
    std::cout << "run '" << cfg.label << "': " << art.steps << " steps, t_final="
              << art.diagnostics.back().t << ", outputs in " << dir.string() << "\n";
    return rc;
}

int cmd_eoc(const std::string& config_path, const std::vector<std::string>& sets,
            std::vector<double> h_list, double h_star, double snap_dt) {
    SimulationConfig base = load_config(config_path, sets);
    base.edges.clear();

    // Distinct grids needed: each h with its h/2, h/4 companions, plus h*.
    // Cell counts are rounded once per coarse h and doubled down the family,
    // so the three grids stay nested even when R/h is not integral.
    std::map<double, RunArtifacts> runs;
    std::map<double, Grid> grids;
    const auto ensure = [&](double h, std::size_t cells) {
        if (runs.count(h)) return;
        SimulationConfig cfg = base;
        cfg.h = h;
        grids.emplace(h, uniform_grid_cells(cells, h));
        cfg.edges = grids.at(h).edges();
        runs.emplace(h, run_with_snapshot_cadence(cfg, snap_dt));
        std::cout << "  grid h=" << h << " (" << cells << " cells): done ("
                  << runs.at(h).steps << " steps)\n";
    };
    const auto cells_for = [&](double h) {
        return static_cast<std::size_t>(std::llround(base.R / h));
    };

    ensure(h_star, cells_for(h_star));
    std::vector<EocRow> rows;
    for (double h : h_list) {
        const std::size_t m = cells_for(h);
        ensure(h, m);
        ensure(h / 2, 2 * m);
        ensure(h / 4, 4 * m);
        EocRow row;
        row.h = h;
        row.result = eoc_three_grid(grids.at(h), runs.at(h).snapshots, grids.at(h / 2),
                                    runs.at(h / 2).snapshots, grids.at(h / 4),
                                    runs.at(h / 4).snapshots);
        const auto& fine = grids.at(h_star);
        row.l1_h_hstar = l1_diff(
            fine,
            interpolate_monotone_cubic(grids.at(h), runs.at(h).snapshots.states.back(),
                                       fine.pivots()),
            runs.at(h_star).snapshots.states.back());
        rows.push_back(row);
    }
    for (const auto& [h, art] : runs)
        if (art.aborted) {
            std::cerr << "wavekin: instability abort in grid h=" << h << "\n";
            return kExitInstability;
        }

    const fs::path dir = fs::path(base.out_dir) / base.label;
    write_text_atomic(dir / "eoc.csv", render_eoc_csv(rows));
    std::cout << "eoc: wrote " << (dir / "eoc.csv").string() << "\n";
    return kExitOk;
}

int cmd_sweep(const std::string& config_path, const std::vector<std::string>& sets,
              const std::string& axis, std::vector<double> values) {
    const SimulationConfig base = load_config(config_path, sets);
    if (axis != "R" && axis != "gamma") throw ConfigError("sweep: axis must be R or gamma");

    std::ostringstream csv;
    csv << "axis,value,decay_slope,t_lo,t_hi\n";
    int rc = kExitOk;
    for (double v : values) {
        SimulationConfig cfg = base;
        if (axis == "R") cfg.R = v;
        else cfg.gamma = v;
        std::ostringstream lab;
        lab << base.label << "_" << axis << "_" << v;
        cfg.label = lab.str();
        const RunArtifacts art = run(cfg);
        const fs::path dir = fs::path(cfg.out_dir) / cfg.label;
        const int sub = write_run_outputs(cfg, art, dir);
        if (sub != kExitOk) rc = sub;

        // Fit over the last decade of simulated time by default.
        const double T = cfg.integrator.t_end;
        std::vector<std::pair<double, double>> series;
        for (const auto& r : art.diagnostics) series.emplace_back(r.t, r.m0);
        double slope = std::numeric_limits<double>::quiet_NaN();
        try {
            slope = decay_slope(series, T / 10.0, T);
        } catch (const std::invalid_argument& e) {
            std::cerr << "wavekin: sweep " << cfg.label << ": " << e.what() << "\n";
        }
        csv << axis << ',' << detail::csv_number(v) << ',' << detail::csv_number(slope) << ','
            << detail::csv_number(T / 10.0) << ',' << detail::csv_number(T) << '\n';
        std::cout << "  " << axis << "=" << v << ": slope=" << slope << "\n";
    }
    const fs::path dir = fs::path(base.out_dir) / base.label;
    write_text_atomic(dir / "decay_rates.csv", csv.str());
    std::cout << "sweep: wrote " << (dir / "decay_rates.csv").string() << "\n";
    return rc;
}

int cmd_presets() {
    const struct {
        const char* name;
        const char* desc;
    } tests[] = {
        {"test1", "spike IC 1.26157*exp(-50(k-1.5)^2); h=0.5, dt=0.05, T=10000; R in {50,100,200}"},
        {"test2", "gauss IC (5*pi)^(-1/2)*exp(-(k-50/3)^2/2.5); h=0.5, dt=0.005, T=10000; R in {50,100,200}"},
        {"test3", "square-wave IC on [0, 8*pi]; h=0.1, T=100; dt=0.0004 (R in {25,50}) or 0.00025 (R=80)"},
        {"test4", "sawtooth IC on [0, 8*pi]; h=0.1, T=100; dt=0.0004 (R in {25,50}) or 0.00025 (R=80)"},
    };
    std::cout << "available presets (gamma in {1.5, 1.8, 2.0}):\n";
    for (const auto& t : tests) std::cout << "  " << t.name << ": " << t.desc << "\n";
    std::cout << "bare initial-condition presets: spike, gauss, square, saw\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite volume solver for the isotropic 3-wave kinetic equation (energy form)"};
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> sets;
    std::vector<double> h_list;
    double h_star = 0.0125;
    double snap_dt = 0.25;
    std::string axis = "R";
    std::vector<double> values;

    auto* run_cmd = app.add_subcommand("run", "Execute one simulation");
    run_cmd->add_option("-c,--config", config_path, "Config file (key = value)")->required();
    run_cmd->add_option("--set", sets, "Override a config key (key=value), repeatable");

    auto* eoc_cmd = app.add_subcommand("eoc", "Grid-refinement convergence study");
    eoc_cmd->add_option("-c,--config", config_path, "Base config file")->required();
    eoc_cmd->add_option("--set", sets, "Override a config key (key=value), repeatable");
    eoc_cmd->add_option("--coarse", h_list, "Coarse grid steps (companion h/2, h/4 runs added)")
        ->required()
        ->delimiter(',');
    eoc_cmd->add_option("--hstar", h_star, "Fine reference grid step (default 1/80)");
    eoc_cmd->add_option("--snap-dt", snap_dt, "Snapshot cadence in time units (default 0.25)");

    auto* sweep_cmd = app.add_subcommand("sweep", "Parameter sweep with decay-rate fits");
    sweep_cmd->add_option("-c,--config", config_path, "Base config file")->required();
    sweep_cmd->add_option("--set", sets, "Override a config key (key=value), repeatable");
    sweep_cmd->add_option("--axis", axis, "Swept parameter: R or gamma")->required();
    sweep_cmd->add_option("--values", values, "Values for the swept parameter")
        ->required()
        ->delimiter(',');

    auto* presets_cmd = app.add_subcommand("presets", "List Test 1-4 parameters");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run_cmd) return cmd_run(config_path, sets);
        if (*eoc_cmd) return cmd_eoc(config_path, sets, h_list, h_star, snap_dt);
        if (*sweep_cmd) return cmd_sweep(config_path, sets, axis, values);
        if (*presets_cmd) return cmd_presets();
    } catch (const ConfigError& e) {
        std::cerr << "wavekin: " << e.what() << "\n";
        return kExitConfig;
    } catch (const IoError& e) {
        std::cerr << "wavekin: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "wavekin: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "wavekin: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitOk;
}
