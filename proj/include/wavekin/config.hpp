#pragma once

#include <cmath>
#include <cstddef>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wavekin/cases.hpp"

namespace wavekin {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline double parse_number(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "': not a number: '" + v + "'");
    }
}

inline std::vector<double> parse_number_list(const std::string& key, const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(parse_number(key, item));
    }
    if (out.empty()) throw ConfigError("config: key '" + key + "': empty list");
    return out;
}

inline std::string format_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace detail

inline const char* ic_kind_name(IcKind k) {
    switch (k) {
        case IcKind::spike: return "spike";
        case IcKind::gauss: return "gauss";
        case IcKind::square: return "square";
        case IcKind::saw: return "saw";
        case IcKind::custom: return "custom";
    }
    return "?";
}

/// Parse flat key=value configuration text. Lines are `key = value`; '#'
/// starts a comment; unknown keys are errors (fail-closed).
///
/// ic.preset accepts the experiment names test1..test4 (which also fill in
/// the published defaults for grid.h, time.dt and time.T, given grid.R and
/// kernel.gamma) or a bare initial-condition kind (spike|gauss|square|saw).
inline SimulationConfig parse_config(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::stringstream ss(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: line " + std::to_string(lineno) + ": expected key=value");
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string val = detail::trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            throw ConfigError("config: line " + std::to_string(lineno) + ": empty key or value");
        if (kv.count(key)) throw ConfigError("config: duplicate key '" + key + "'");
        kv[key] = val;
    }

    static const std::vector<std::string> known = {
        "grid.R",   "grid.h",  "grid.edges",  "kernel.gamma", "ic.preset",
        "ic.table", "time.dt", "time.T",      "time.method",  "time.cfl",
        "out.cadence", "out.snapshots", "out.dir", "label"};
    for (const auto& [k, v] : kv) {
        bool ok = false;
        for (const auto& kn : known) ok = ok || (k == kn);
        if (!ok) throw ConfigError("config: unknown key '" + k + "'");
    }
    const auto has = [&](const char* k) { return kv.count(k) != 0; };
    const auto num = [&](const char* k) { return detail::parse_number(k, kv.at(k)); };

    SimulationConfig cfg;
    if (!has("kernel.gamma")) throw ConfigError("config: missing required key 'kernel.gamma'");
    cfg.gamma = num("kernel.gamma");
    if (!has("grid.R") && !has("grid.edges"))
        throw ConfigError("config: need grid.R or grid.edges");

    bool preset_defaults = false;
    if (has("ic.preset")) {
        const std::string p = kv.at("ic.preset");
        if (p == "test1" || p == "test2" || p == "test3" || p == "test4") {
            if (!has("grid.R")) throw ConfigError("config: preset '" + p + "' needs grid.R");
            cfg = preset(p, num("grid.R"), cfg.gamma);
            preset_defaults = true;
        } else if (p == "spike") {
            cfg.ic.kind = IcKind::spike;
        } else if (p == "gauss") {
            cfg.ic.kind = IcKind::gauss;
        } else if (p == "square") {
            cfg.ic.kind = IcKind::square;
        } else if (p == "saw") {
            cfg.ic.kind = IcKind::saw;
        } else {
            throw ConfigError("config: unknown preset '" + p + "'");
        }
    } else if (has("ic.table")) {
        cfg.ic.kind = IcKind::custom;
        std::stringstream ts(kv.at("ic.table"));
        std::string pair;
        while (std::getline(ts, pair, ',')) {
            const auto colon = pair.find(':');
            if (colon == std::string::npos)
                throw ConfigError("config: ic.table entries must be k:g pairs");
            cfg.ic.table.emplace_back(
                detail::parse_number("ic.table", detail::trim(pair.substr(0, colon))),
                detail::parse_number("ic.table", detail::trim(pair.substr(colon + 1))));
        }
        if (cfg.ic.table.size() < 2) throw ConfigError("config: ic.table needs >= 2 pairs");
    } else {
        throw ConfigError("config: need ic.preset or ic.table");
    }

    if (has("grid.edges")) {
        cfg.edges = detail::parse_number_list("grid.edges", kv.at("grid.edges"));
    } else {
        cfg.R = num("grid.R");
        if (has("grid.h")) cfg.h = num("grid.h");
        else if (!preset_defaults) throw ConfigError("config: missing grid.h");
    }
    if (has("time.dt")) cfg.integrator.dt = num("time.dt");
    else if (!preset_defaults) throw ConfigError("config: missing time.dt");
    if (has("time.T")) cfg.integrator.t_end = num("time.T");
    else if (!preset_defaults) throw ConfigError("config: missing time.T");
    if (has("time.method")) {
        const std::string m = kv.at("time.method");
        if (m == "euler") cfg.integrator.method = Method::euler;
        else if (m == "rk2") cfg.integrator.method = Method::rk2;
        else throw ConfigError("config: time.method must be euler or rk2");
    }
    if (has("time.cfl")) {
        const std::string m = kv.at("time.cfl");
        if (m == "enforce") cfg.integrator.cfl_mode = CflMode::enforce;
        else if (m == "warn") cfg.integrator.cfl_mode = CflMode::warn;
        else if (m == "off") cfg.integrator.cfl_mode = CflMode::off;
        else throw ConfigError("config: time.cfl must be enforce, warn or off");
    }
    if (has("out.cadence")) {
        const double c = num("out.cadence");
        if (!(c >= 1.0) || c != std::floor(c))
            throw ConfigError("config: out.cadence must be an integer >= 1");
        cfg.cadence = static_cast<std::size_t>(c);
    }
    if (has("out.snapshots"))
        cfg.snapshot_times = detail::parse_number_list("out.snapshots", kv.at("out.snapshots"));
    if (has("out.dir")) cfg.out_dir = kv.at("out.dir");
    if (has("label")) cfg.label = kv.at("label");

    if (!(cfg.integrator.dt > 0.0)) throw ConfigError("config: time.dt must be positive");
    if (!(cfg.integrator.t_end >= 0.0)) throw ConfigError("config: time.T must be >= 0");
    return cfg;
}

/// Render a config back to the flat key=value format; parse(render(c)) == c.
inline std::string render_config(const SimulationConfig& cfg) {
    std::ostringstream out;
    using detail::format_number;
    if (!cfg.edges.empty()) {
        out << "grid.edges = ";
        for (std::size_t i = 0; i < cfg.edges.size(); ++i)
            out << (i ? "," : "") << format_number(cfg.edges[i]);
        out << "\n";
    } else {
        out << "grid.R = " << format_number(cfg.R) << "\n";
        out << "grid.h = " << format_number(cfg.h) << "\n";
    }
    out << "kernel.gamma = " << format_number(cfg.gamma) << "\n";
    if (cfg.ic.kind == IcKind::custom) {
        out << "ic.table = ";
        for (std::size_t i = 0; i < cfg.ic.table.size(); ++i)
            out << (i ? "," : "") << format_number(cfg.ic.table[i].first) << ":"
                << format_number(cfg.ic.table[i].second);
        out << "\n";
    } else {
        out << "ic.preset = " << ic_kind_name(cfg.ic.kind) << "\n";
    }
    out << "time.dt = " << format_number(cfg.integrator.dt) << "\n";
    out << "time.T = " << format_number(cfg.integrator.t_end) << "\n";
    out << "time.method = " << (cfg.integrator.method == Method::euler ? "euler" : "rk2") << "\n";
    out << "time.cfl = "
        << (cfg.integrator.cfl_mode == CflMode::enforce
                ? "enforce"
                : cfg.integrator.cfl_mode == CflMode::warn ? "warn" : "off")
        << "\n";
    out << "out.cadence = " << cfg.cadence << "\n";
    if (!cfg.snapshot_times.empty()) {
        out << "out.snapshots = ";
        for (std::size_t i = 0; i < cfg.snapshot_times.size(); ++i)
            out << (i ? "," : "") << format_number(cfg.snapshot_times[i]);
        out << "\n";
    }
    out << "out.dir = " << cfg.out_dir << "\n";
    out << "label = " << cfg.label << "\n";
    return out.str();
}

}  // namespace wavekin
