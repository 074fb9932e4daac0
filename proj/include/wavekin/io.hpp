#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wavekin/diagnostics.hpp"
#include "wavekin/simulation.hpp"

namespace wavekin {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string csv_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace detail

/// Write `content` to `path` atomically: write a sibling temp file, then
/// rename over the destination. Re-running a label overwrites cleanly.
inline void write_text_atomic(const std::filesystem::path& path, const std::string& content) {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path(), ec);
        if (ec) throw IoError("io: cannot create directory " + path.parent_path().string());
    }
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("io: cannot open " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw IoError("io: write failed for " + tmp.string());
    }
    fs::rename(tmp, path, ec);
    if (ec) throw IoError("io: rename failed for " + path.string());
}

inline std::string render_moments_csv(const std::vector<DiagnosticRecord>& recs) {
    std::ostringstream out;
    out << "t,m0,m1,m2,m3,linf,argmax_k,neg_count,min_val\n";
    for (const auto& r : recs) {
        using detail::csv_number;
        out << csv_number(r.t) << ',' << csv_number(r.m0) << ',' << csv_number(r.m1) << ','
            << csv_number(r.m2) << ',' << csv_number(r.m3) << ',' << csv_number(r.linf) << ','
            << csv_number(r.argmax_k) << ',' << r.neg_count << ',' << csv_number(r.min_val)
            << '\n';
    }
    return out.str();
}

/// snapshots.csv rows are (t, k_i, g_i, f_i = g_i / k_i), one block per time.
inline std::string render_snapshots_csv(const Grid& grid, const SnapshotSeries& series) {
    std::ostringstream out;
    out << "t,k,g,f\n";
    using detail::csv_number;
    for (std::size_t s = 0; s < series.times.size(); ++s) {
        const auto& g = series.states[s];
        for (std::size_t i = 0; i < grid.num_cells(); ++i) {
            const double k = grid.pivot(i);
            out << csv_number(series.times[s]) << ',' << csv_number(k) << ','
                << csv_number(g[i]) << ',' << csv_number(g[i] / k) << '\n';
        }
    }
    return out.str();
}

struct EocRow {
    double h = 0.0;
    EocResult result;           // three-grid estimates at h, h/2, h/4
    double l1_h_hstar = 0.0;    // |g_h - g_{h*}|_L1 at T_EOC, for the fine-grid ratio
};

inline std::string render_eoc_csv(const std::vector<EocRow>& rows) {
    std::ostringstream out;
    out << "h,p_paper_formula,p_classical,t_max,l1_h_hstar\n";
    using detail::csv_number;
    for (const auto& r : rows)
        out << csv_number(r.h) << ',' << csv_number(r.result.p_paper) << ','
            << csv_number(r.result.p_classical) << ',' << csv_number(r.result.t_max) << ','
            << csv_number(r.l1_h_hstar) << '\n';
    return out.str();
}

/// Human-readable run summary (report.txt).
inline std::string render_report(const SimulationConfig& cfg, const RunArtifacts& art) {
    std::ostringstream out;
    using detail::csv_number;
    out << "label: " << cfg.label << "\n";
    out << "gamma: " << csv_number(cfg.gamma) << "\n";
    out << "dt_used: " << csv_number(art.dt_used) << "\n";
    out << "steps: " << art.steps << "\n";
    out << "cfl_dt_bound: " << csv_number(art.cfl.dt_bound) << "\n";
    out << "cfl_satisfied: " << (art.cfl.satisfied ? "yes" : "no") << "\n";
    out << "aborted: " << (art.aborted ? "yes" : "no") << "\n";
    if (art.aborted) out << "abort_step: " << art.abort_step << "\n";
    if (!art.diagnostics.empty()) {
        const auto& first = art.diagnostics.front();
        const auto& last = art.diagnostics.back();
        out << "t_final: " << csv_number(last.t) << "\n";
        out << "m1_initial: " << csv_number(first.m1) << "\n";
        out << "m1_final: " << csv_number(last.m1) << "\n";
        out << "linf_final: " << csv_number(last.linf) << "\n";
        out << "neg_count_final: " << last.neg_count << "\n";
        out << "min_val_final: " << csv_number(last.min_val) << "\n";
    }
    std::size_t neg_events = 0;
    for (const auto& r : art.diagnostics)
        if (r.neg_count > 0) ++neg_events;
    out << "negativity_events: " << neg_events << "\n";
    out << "wall_seconds: " << csv_number(art.wall_seconds) << "\n";
    out << "\n";
    out << "# gnuplot column guide\n";
    out << "# moments.csv: 1=t 2=m0 3=m1 4=m2 5=m3 6=linf 7=argmax_k 8=neg_count 9=min_val\n";
    out << "#   e.g. plot 'moments.csv' using 1:2 with lines title 'M0(t)'\n";
    out << "# snapshots.csv: 1=t 2=k 3=g 4=f  (f = g/k; filter by t per snapshot)\n";
    out << "#   e.g. plot '< awk -F, \"$1==0\" snapshots.csv' using 2:3 with lines\n";
    return out.str();
}

}  // namespace wavekin
