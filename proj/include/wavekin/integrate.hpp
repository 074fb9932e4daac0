#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "wavekin/collision.hpp"

namespace wavekin {

enum class Method { euler, rk2 };
enum class CflMode { enforce, warn, off };

struct IntegratorConfig {
    Method method = Method::rk2;
    double dt = 0.0;
    double t_end = 0.0;
    CflMode cfl_mode = CflMode::warn;
};

/// Sufficient positivity/stability bound on the time step:
///   dt * R^(gamma+1) * |g0|_inf <= (gamma/16) * min_i h_i.
struct CflReport {
    double dt_bound = std::numeric_limits<double>::infinity();
    bool satisfied = true;
    double c_gamma = 1.0;  // L-inf contraction constant (17 - gamma)/16
};

inline double linf_norm(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

inline CflReport cfl_bound(const Grid& grid, const KernelSpec& spec, const EnergyState& g0,
                           double dt = 0.0) {
    CflReport rep;
    rep.c_gamma = (17.0 - spec.gamma) / 16.0;
    const double norm = linf_norm(g0.g);
    if (norm > 0.0) {
        const double R = grid.truncation();
        rep.dt_bound = (spec.gamma / 16.0) * grid.min_width() /
                       (std::pow(R, spec.gamma + 1.0) * norm);
    }
    rep.satisfied = !(dt > rep.dt_bound);
    return rep;
}

/// Thrown when a step produces a non-finite value. The run is aborted rather
/// than clipped; clipping would silently alter the measured cascade rates.
struct InstabilityError : std::runtime_error {
    std::size_t step;
    explicit InstabilityError(std::size_t n)
        : std::runtime_error("non-finite state at step " + std::to_string(n)), step(n) {}
};

inline void check_finite(const std::vector<double>& v, std::size_t step) {
    for (double x : v)
        if (!std::isfinite(x)) throw InstabilityError(step);
}

/// Forward Euler step of the scheme: g_i <- g_i + dt * rate_i.
inline EnergyState step_euler(const Grid& grid, const KernelSpec& spec, const EnergyState& state,
                              double dt, std::size_t step_index = 0) {
    if (!(dt > 0.0)) throw std::invalid_argument("step_euler: dt must be positive");
    const auto rate = collision_rate(grid, spec, state);
    EnergyState next;
    next.g.resize(state.g.size());
    for (std::size_t i = 0; i < state.g.size(); ++i) next.g[i] = state.g[i] + dt * rate[i];
    next.t = state.t + dt;
    check_finite(next.g, step_index);
    return next;
}

/// Heun's method (explicit trapezoidal RK2):
///   k1 = rate(g), k2 = rate(g + dt*k1), g <- g + dt/2 * (k1 + k2).
inline EnergyState step_rk2(const Grid& grid, const KernelSpec& spec, const EnergyState& state,
                            double dt, std::size_t step_index = 0) {
    if (!(dt > 0.0)) throw std::invalid_argument("step_rk2: dt must be positive");
    const auto k1 = collision_rate(grid, spec, state);
    EnergyState stage;
    stage.g.resize(state.g.size());
    for (std::size_t i = 0; i < state.g.size(); ++i) stage.g[i] = state.g[i] + dt * k1[i];
    check_finite(stage.g, step_index);
    const auto k2 = collision_rate(grid, spec, stage);
    EnergyState next;
    next.g.resize(state.g.size());
    for (std::size_t i = 0; i < state.g.size(); ++i)
        next.g[i] = state.g[i] + 0.5 * dt * (k1[i] + k2[i]);
    next.t = state.t + dt;
    check_finite(next.g, step_index);
    return next;
}

inline EnergyState step(const Grid& grid, const KernelSpec& spec, const EnergyState& state,
                        const IntegratorConfig& cfg, double dt, std::size_t step_index) {
    return cfg.method == Method::euler ? step_euler(grid, spec, state, dt, step_index)
                                       : step_rk2(grid, spec, state, dt, step_index);
}

}  // namespace wavekin
