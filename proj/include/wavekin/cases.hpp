#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wavekin/integrate.hpp"

namespace wavekin {

enum class IcKind { spike, gauss, square, saw, custom };

/// Initial conditions of the four experiments plus a tabulated custom kind.
///
/// square defaults to the plain 2*pi-periodic wave (1 on [2n*pi, (2n+1)*pi]);
/// the literal skip-list variant (n = 0, 1, 3, 5, ...) is kept behind
/// square_skip_list for comparison.
struct InitialCondition {
    IcKind kind = IcKind::spike;
    bool square_skip_list = false;
    std::vector<std::pair<double, double>> table;  // custom: sorted (k, g) pairs

    double eval(double k) const {
        if (!(k >= 0.0)) throw std::invalid_argument("ic_eval: negative frequency");
        constexpr double two_pi = 2.0 * std::numbers::pi;
        switch (kind) {
            case IcKind::spike:
                return 1.26157 * std::exp(-50.0 * (k - 1.5) * (k - 1.5));
            case IcKind::gauss:
                return std::pow(5.0 * std::numbers::pi, -0.5) *
                       std::exp(-(k - 50.0 / 3.0) * (k - 50.0 / 3.0) / 2.5);
            case IcKind::square: {
                const double n = std::floor(k / two_pi);
                if (square_skip_list) {
                    const auto ni = static_cast<long long>(n);
                    if (ni != 0 && ni % 2 == 0) return 0.0;  // unlisted n
                }
                return (k - n * two_pi <= std::numbers::pi) ? 1.0 : 0.0;
            }
            case IcKind::saw: {
                const double n = std::floor(k / two_pi);
                return (k - n * two_pi) / two_pi;
            }
            case IcKind::custom: {
                if (table.size() < 2) throw std::invalid_argument("custom ic: need >= 2 points");
                if (k <= table.front().first || k >= table.back().first) {
                    if (k == table.front().first) return table.front().second;
                    if (k == table.back().first) return table.back().second;
                    return 0.0;
                }
                auto it = std::upper_bound(table.begin(), table.end(), k,
                                           [](double v, const auto& p) { return v < p.first; });
                const auto& [x1, y1] = *it;
                const auto& [x0, y0] = *(it - 1);
                return y0 + (y1 - y0) * (k - x0) / (x1 - x0);
            }
        }
        return 0.0;
    }
};

/// Midpoint projection g0_i = g0(k_i), matching the scheme's own quadrature.
inline EnergyState project_ic(const InitialCondition& ic, const Grid& grid) {
    EnergyState state;
    state.g.resize(grid.num_cells());
    for (std::size_t i = 0; i < grid.num_cells(); ++i) state.g[i] = ic.eval(grid.pivot(i));
    state.t = 0.0;
    return state;
}

/// Full description of one run.
struct SimulationConfig {
    double R = 50.0;
    double h = 0.5;
    std::vector<double> edges;  // nonempty: overrides (R, h)
    double gamma = 2.0;
    InitialCondition ic;
    IntegratorConfig integrator;
    std::size_t cadence = 1;  // diagnostics every N steps
    std::vector<double> snapshot_times;
    std::string out_dir = ".";
    std::string label = "run";

    Grid make_grid() const {
        return edges.empty() ? uniform_grid(R, h) : custom_grid(edges);
    }
};

/// Named experiment configurations: grid step, time step, horizon and initial
/// condition per test, for the tested (R, gamma) combinations.
inline SimulationConfig preset(const std::string& name, double R, double gamma) {
    const auto in = [](double x, std::initializer_list<double> set) {
        for (double v : set)
            if (x == v) return true;
        return false;
    };
    if (!in(gamma, {1.5, 1.8, 2.0}))
        throw std::invalid_argument("preset: gamma must be one of 3/2, 9/5, 2");
    SimulationConfig cfg;
    cfg.R = R;
    cfg.gamma = gamma;
    cfg.integrator.method = Method::rk2;
    cfg.label = name;
    if (name == "test1" || name == "test2") {
        if (!in(R, {50.0, 100.0, 200.0}))
            throw std::invalid_argument(name + ": R must be one of 50, 100, 200");
        cfg.h = 0.5;
        cfg.integrator.t_end = 10000.0;
        cfg.integrator.dt = (name == "test1") ? 0.05 : 0.005;
        cfg.ic.kind = (name == "test1") ? IcKind::spike : IcKind::gauss;
    } else if (name == "test3" || name == "test4") {
        if (!in(R, {25.0, 50.0, 80.0}))
            throw std::invalid_argument(name + ": R must be one of 25, 50, 80");
        cfg.h = 0.1;
        cfg.integrator.t_end = 100.0;
        cfg.integrator.dt = (R == 80.0) ? 0.00025 : 0.0004;
        cfg.ic.kind = (name == "test3") ? IcKind::square : IcKind::saw;
    } else {
        throw std::invalid_argument("unknown preset: " + name);
    }
    return cfg;
}

}  // namespace wavekin
