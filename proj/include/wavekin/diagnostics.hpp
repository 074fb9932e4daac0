#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wavekin/collision.hpp"

namespace wavekin {

/// Per-output-time summary of a state.
struct DiagnosticRecord {
    double t = 0.0;
    double m0 = 0.0, m1 = 0.0, m2 = 0.0, m3 = 0.0;
    double linf = 0.0;
    double argmax_k = 0.0;
    std::size_t neg_count = 0;
    double min_val = 0.0;
};

/// ell-th moment: sum_i h_i g_i k_i^ell, ascending summation order.
inline double moment(const Grid& grid, const EnergyState& state, unsigned ell) {
    if (ell > 8) throw std::invalid_argument("moment: ell must be <= 8");
    check_state(grid, state);
    double acc = 0.0;
    for (std::size_t i = 0; i < grid.num_cells(); ++i) {
        double kp = 1.0;
        for (unsigned p = 0; p < ell; ++p) kp *= grid.pivot(i);
        acc += grid.width(i) * state.g[i] * kp;
    }
    return acc;
}

inline DiagnosticRecord diagnose(const Grid& grid, const EnergyState& state) {
    DiagnosticRecord rec;
    rec.t = state.t;
    rec.m0 = moment(grid, state, 0);
    rec.m1 = moment(grid, state, 1);
    rec.m2 = moment(grid, state, 2);
    rec.m3 = moment(grid, state, 3);
    rec.min_val = state.g.empty() ? 0.0 : state.g[0];
    std::size_t imax = 0;
    for (std::size_t i = 0; i < state.g.size(); ++i) {
        if (std::abs(state.g[i]) > rec.linf) {
            rec.linf = std::abs(state.g[i]);
            imax = i;
        }
        if (state.g[i] < 0.0) ++rec.neg_count;
        rec.min_val = std::min(rec.min_val, state.g[i]);
    }
    rec.argmax_k = state.g.empty() ? 0.0 : grid.pivot(imax);
    return rec;
}

/// L1 difference of two states on the same (fine) grid: sum_i h_i |a_i - b_i|.
inline double l1_diff(const Grid& grid, const std::vector<double>& a,
                      const std::vector<double>& b) {
    if (a.size() != grid.num_cells() || b.size() != grid.num_cells())
        throw std::invalid_argument("l1_diff: length mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < grid.num_cells(); ++i)
        acc += grid.width(i) * std::abs(a[i] - b[i]);
    return acc;
}

/// Shape-preserving piecewise cubic Hermite interpolation with
/// Fritsch-Carlson monotone slope limiting. Reproduces node data exactly and
/// introduces no new local extrema between nodes. Queries outside the node
/// range clamp to the end values.
class PchipInterpolant {
public:
    PchipInterpolant(std::vector<double> x, std::vector<double> y)
        : x_(std::move(x)), y_(std::move(y)) {
        const std::size_t n = x_.size();
        if (n < 2 || y_.size() != n)
            throw std::invalid_argument("pchip: need >= 2 nodes and matching lengths");
        d_.resize(n);
        std::vector<double> h(n - 1), delta(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            h[i] = x_[i + 1] - x_[i];
            if (!(h[i] > 0.0)) throw std::invalid_argument("pchip: nodes must increase");
            delta[i] = (y_[i + 1] - y_[i]) / h[i];
        }
        if (n == 2) {
            d_[0] = d_[1] = delta[0];
            return;
        }
        for (std::size_t i = 1; i + 1 < n; ++i) {
            if (delta[i - 1] * delta[i] <= 0.0) {
                d_[i] = 0.0;
            } else {
                // weighted harmonic mean of neighboring secants
                const double w1 = 2.0 * h[i] + h[i - 1];
                const double w2 = h[i] + 2.0 * h[i - 1];
                d_[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
            }
        }
        d_[0] = edge_slope(h[0], h[1], delta[0], delta[1]);
        d_[n - 1] = edge_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
    }

    double operator()(double q) const {
        if (q <= x_.front()) return y_.front();
        if (q >= x_.back()) return y_.back();
        const auto it = std::upper_bound(x_.begin(), x_.end(), q);
        const std::size_t i = static_cast<std::size_t>(it - x_.begin()) - 1;
        const double h = x_[i + 1] - x_[i];
        const double s = (q - x_[i]) / h;
        const double s2 = s * s, s3 = s2 * s;
        return y_[i] * (2 * s3 - 3 * s2 + 1) + h * d_[i] * (s3 - 2 * s2 + s) +
               y_[i + 1] * (-2 * s3 + 3 * s2) + h * d_[i + 1] * (s3 - s2);
    }

    std::vector<double> eval(const std::vector<double>& qs) const {
        std::vector<double> out(qs.size());
        for (std::size_t i = 0; i < qs.size(); ++i) out[i] = (*this)(qs[i]);
        return out;
    }

private:
    // non-centered three-point end slope, limited to keep shape
    static double edge_slope(double h0, double h1, double del0, double del1) {
        double d = ((2.0 * h0 + h1) * del0 - h0 * del1) / (h0 + h1);
        if (d * del0 <= 0.0)
            d = 0.0;
        else if (del0 * del1 < 0.0 && std::abs(d) > 3.0 * std::abs(del0))
            d = 3.0 * del0;
        return d;
    }

    std::vector<double> x_, y_, d_;
};

/// Interpolate a coarse-grid state onto query points (typically fine pivots).
inline std::vector<double> interpolate_monotone_cubic(const Grid& coarse,
                                                      const std::vector<double>& values,
                                                      const std::vector<double>& query) {
    if (values.size() != coarse.num_cells())
        throw std::invalid_argument("interpolate: state length mismatch");
    return PchipInterpolant(coarse.pivots(), values).eval(query);
}

struct EocResult {
    double p_paper = 0.0;      // log2(ratio - 1), the formula as printed
    double p_classical = 0.0;  // log2(ratio), the classical estimator
    double t_max = 0.0;        // argmax over output times of |g_h - g_fine|_L1
    double num = 0.0;          // |g_h - g_fine|_L1 at t_max
    double den = 0.0;          // |g_{h/2} - g_fine|_L1 at t_max
    bool valid = true;         // false when log arguments are non-positive
};

/// Snapshot series from one run, for convergence studies: states at matched
/// output times on one grid.
struct SnapshotSeries {
    std::vector<double> times;
    std::vector<std::vector<double>> states;
};

/// Three-grid estimator: runs at h, h/2, h/4 (same dt, same output times),
/// coarse solutions interpolated to the finest grid first. Evaluated at
/// t_max = argmax_t |g_h - g_{h/4}|_L1 over the snapshot cadence.
inline EocResult eoc_three_grid(const Grid& gh, const SnapshotSeries& sh, const Grid& gh2,
                                const SnapshotSeries& sh2, const Grid& gh4,
                                const SnapshotSeries& sh4) {
    if (sh.times.size() != sh4.times.size() || sh2.times.size() != sh4.times.size())
        throw std::invalid_argument("eoc_three_grid: snapshot series mismatch");
    EocResult res;
    const auto& qs = gh4.pivots();
    std::size_t best = 0;
    double best_num = -1.0;
    std::vector<double> nums(sh.times.size()), dens(sh.times.size());
    for (std::size_t s = 0; s < sh.times.size(); ++s) {
        const auto a = interpolate_monotone_cubic(gh, sh.states[s], qs);
        const auto b = interpolate_monotone_cubic(gh2, sh2.states[s], qs);
        nums[s] = l1_diff(gh4, a, sh4.states[s]);
        dens[s] = l1_diff(gh4, b, sh4.states[s]);
        if (nums[s] > best_num) {
            best_num = nums[s];
            best = s;
        }
    }
    res.t_max = sh.times[best];
    res.num = nums[best];
    res.den = dens[best];
    if (!(res.den > 0.0) || !(res.num / res.den > 1.0)) {
        res.valid = false;
        return res;
    }
    res.p_paper = std::log2(res.num / res.den - 1.0);
    res.p_classical = std::log2(res.num / res.den);
    return res;
}

/// Fine-grid estimator: p = log2(|g_h - g_h*| / |g_{h/2} - g_h*|) at the
/// final time, with both coarse solutions interpolated to the h* grid.
inline EocResult eoc_fine_grid(const Grid& gh, const std::vector<double>& sh, const Grid& gh2,
                               const std::vector<double>& sh2, const Grid& gstar,
                               const std::vector<double>& sstar, double t_eoc) {
    EocResult res;
    const auto& qs = gstar.pivots();
    res.num = l1_diff(gstar, interpolate_monotone_cubic(gh, sh, qs), sstar);
    res.den = l1_diff(gstar, interpolate_monotone_cubic(gh2, sh2, qs), sstar);
    res.t_max = t_eoc;
    if (!(res.den > 0.0) || !(res.num > 0.0)) {
        res.valid = false;
        return res;
    }
    res.p_classical = std::log2(res.num / res.den);
    res.p_paper = res.p_classical;  // the fine-grid formula has no "-1"
    return res;
}

/// Unweighted least-squares slope of y against x.
inline double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const auto n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double den = n * sxx - sx * sx;
    if (den == 0.0) throw std::invalid_argument("ls_slope: degenerate abscissae");
    return (n * sxy - sx * sy) / den;
}

/// Decay exponent s of a moment series M(t) ~ c/t^s over [t_lo, t_hi]:
/// s = -(least-squares slope of log M vs log t).
inline double decay_slope(const std::vector<std::pair<double, double>>& series, double t_lo,
                          double t_hi) {
    if (!(t_lo > 0.0)) throw std::invalid_argument("decay_slope: window must start at t > 0");
    std::vector<double> lx, ly;
    for (const auto& [t, m] : series) {
        if (t < t_lo || t > t_hi) continue;
        if (!(m > 0.0)) throw std::invalid_argument("decay_slope: non-positive moment in window");
        lx.push_back(std::log(t));
        ly.push_back(std::log(m));
    }
    if (lx.size() < 8) throw std::invalid_argument("decay_slope: need >= 8 samples in window");
    return -ls_slope(lx, ly);
}

/// Transient-spectrum exponent a of f = g/k ~ C k^-a over pivots in
/// [k_lo, k_hi], reported positive for decaying spectra.
inline double spectrum_slope(const Grid& grid, const EnergyState& state, double k_lo,
                             double k_hi) {
    check_state(grid, state);
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < grid.num_cells(); ++i) {
        const double k = grid.pivot(i);
        if (k < k_lo || k > k_hi) continue;
        const double f = state.g[i] / k;
        if (!(f > 0.0))
            throw std::invalid_argument("spectrum_slope: non-positive density in window");
        lx.push_back(std::log(k));
        ly.push_back(std::log(f));
    }
    if (lx.size() < 2) throw std::invalid_argument("spectrum_slope: window too small");
    return -ls_slope(lx, ly);
}

}  // namespace wavekin
