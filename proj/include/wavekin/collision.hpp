#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "wavekin/grid.hpp"
#include "wavekin/kernel.hpp"

namespace wavekin {

/// Cell-averaged energy values g(k_i) at one time level.
struct EnergyState {
    std::vector<double> g;
    double t = 0.0;
};

/// Composite flux -2*Q1 + Q2 at every cell edge; q[i] sits at edge k_{i+1/2}
/// (0-based: q has M+1 entries, q[0] at k = 0, q[M] at k = R).
struct FluxVector {
    std::vector<double> q;
};

inline void check_state(const Grid& grid, const EnergyState& state) {
    if (state.g.size() != grid.num_cells())
        throw std::invalid_argument("EnergyState length does not match grid");
}

/// Per-cell flux weights w_i = h_i * g_i * k_i^(gamma/2 - 1). Every double sum
/// in the scheme is a sum of products w_m * w_j over index pairs.
inline std::vector<double> flux_weights(const Grid& grid, const KernelSpec& spec,
                                        const std::vector<double>& g) {
    const std::size_t m = grid.num_cells();
    std::vector<double> w(m);
    for (std::size_t i = 0; i < m; ++i)
        w[i] = grid.width(i) * g[i] * spec.weight(grid.pivot(i));
    return w;
}

/// Q1 at edge index i: both sums run over the cells below the edge.
/// Reference quadratic-cost evaluator; summation order is ascending j inside
/// ascending m, fixed for reproducibility.
inline double flux_Q1(const Grid& grid, const KernelSpec& spec, const EnergyState& state,
                      std::size_t edge_index) {
    check_state(grid, state);
    if (edge_index > grid.num_cells())
        throw std::invalid_argument("flux_Q1: edge index out of range");
    const auto w = flux_weights(grid, spec, state.g);
    const auto& piv = grid.pivots();
    const double c = grid.edge(edge_index);
    double acc = 0.0;
    for (std::size_t m = 0; m < edge_index; ++m) {
        double inner = 0.0;
        for (std::size_t j = 0; j < edge_index; ++j)
            if (piv[m] + piv[j] > c) inner += w[j];
        acc += w[m] * inner;
    }
    return acc;
}

/// Q2 at edge index i: both sums run over the full truncated domain. This is
/// the single term of the scheme carrying the truncation at R.
inline double flux_Q2(const Grid& grid, const KernelSpec& spec, const EnergyState& state,
                      std::size_t edge_index) {
    check_state(grid, state);
    if (edge_index > grid.num_cells())
        throw std::invalid_argument("flux_Q2: edge index out of range");
    const auto w = flux_weights(grid, spec, state.g);
    const auto& piv = grid.pivots();
    const std::size_t M = grid.num_cells();
    const double c = grid.edge(edge_index);
    double acc = 0.0;
    for (std::size_t m = 0; m < M; ++m) {
        double inner = 0.0;
        for (std::size_t j = 0; j < M; ++j)
            if (piv[m] + piv[j] > c) inner += w[j];
        acc += w[m] * inner;
    }
    return acc;
}

/// Composite flux q[i] = -2*Q1(i) + Q2(i) at every edge, via the reference
/// evaluators. O(M^3) total; test / small-grid use only.
inline FluxVector composite_flux(const Grid& grid, const KernelSpec& spec,
                                 const EnergyState& state) {
    check_state(grid, state);
    FluxVector out;
    out.q.resize(grid.num_cells() + 1);
    for (std::size_t i = 0; i <= grid.num_cells(); ++i)
        out.q[i] = -2.0 * flux_Q1(grid, spec, state, i) + flux_Q2(grid, spec, state, i);
    return out;
}

/// Optimized composite flux: O(M^2) for all M+1 edges.
///
/// Precomputes prefix sums P of the weights; for each edge c the inner sum
/// over {j : k_m + k_j > c} is a prefix-sum difference, with the cut index
/// found by a two-pointer sweep (pivots ascend, so the cut is monotone in m).
/// The cut predicate is evaluated exactly as in the reference path
/// (piv[m] + piv[j] > c), so tie handling is bit-identical.
inline FluxVector composite_flux_fast(const Grid& grid, const KernelSpec& spec,
                                      const EnergyState& state) {
    check_state(grid, state);
    const std::size_t M = grid.num_cells();
    const auto w = flux_weights(grid, spec, state.g);
    const auto& piv = grid.pivots();
    const auto& edges = grid.edges();

    // Compensated prefix sums: P[t] = sum of w[0..t-1].
    std::vector<double> P(M + 1, 0.0);
    {
        double s = 0.0, comp = 0.0;
        for (std::size_t j = 0; j < M; ++j) {
            const double y = w[j] - comp;
            const double t = s + y;
            comp = (t - s) - y;
            s = t;
            P[j + 1] = s;
        }
    }

    FluxVector out;
    out.q.resize(M + 1);
    for (std::size_t e = 0; e <= M; ++e) {
        const double c = edges[e];
        long double q1 = 0.0L, q2 = 0.0L;
        // jcut = first index j with piv[m] + piv[j] > c; nonincreasing in m.
        std::size_t jcut = M;
        for (std::size_t m = 0; m < M; ++m) {
            while (jcut > 0 && piv[m] + piv[jcut - 1] > c) --jcut;
            q2 += static_cast<long double>(w[m]) * (P[M] - P[jcut]);
            if (m < e && jcut < e) q1 += static_cast<long double>(w[m]) * (P[e] - P[jcut]);
        }
        out.q[e] = static_cast<double>(-2.0L * q1 + q2);
    }
    return out;
}

/// Semi-discrete collision rate: rate[i] = (k_i/h_i) * (q[i+1] - q[i]),
/// using the fast flux path. This is the right side of the scheme before
/// time discretization.
inline std::vector<double> collision_rate(const Grid& grid, const KernelSpec& spec,
                                          const EnergyState& state) {
    const FluxVector fv = composite_flux_fast(grid, spec, state);
    const std::size_t M = grid.num_cells();
    std::vector<double> rate(M);
    for (std::size_t i = 0; i < M; ++i)
        rate[i] = grid.pivot(i) / grid.width(i) * (fv.q[i + 1] - fv.q[i]);
    return rate;
}

/// Independent evaluation of the same semi-discrete rate without flux
/// differencing, transcribing the per-cell decomposition of [Q_i]^-+:
///
///   [Q_i]^-+ = -2*A + B + 4*C1 + 2*C2,   rate_i = -(k_i/h_i) * [Q_i]^-+,
///
/// with A the strip {el < k_m + k_j <= eu} restricted to pairs below the
/// lower edge, B the same strip over the full square, and C1, C2 the
/// boundary-cell pieces carrying w_i. O(M^3) total; small grids only.
inline std::vector<double> direct_collision_oracle(const Grid& grid, const KernelSpec& spec,
                                                   const EnergyState& state) {
    check_state(grid, state);
    const std::size_t M = grid.num_cells();
    const auto w = flux_weights(grid, spec, state.g);
    const auto& piv = grid.pivots();
    std::vector<double> rate(M);
    for (std::size_t i = 0; i < M; ++i) {
        const double el = grid.edge(i);
        const double eu = grid.edge(i + 1);
        const auto in_strip = [&](double s) { return s > el && !(s > eu); };
        double A = 0.0, B = 0.0, C1 = 0.0;
        for (std::size_t m = 0; m < M; ++m) {
            double innerA = 0.0, innerB = 0.0;
            for (std::size_t j = 0; j < M; ++j) {
                if (in_strip(piv[m] + piv[j])) {
                    innerB += w[j];
                    if (m < i && j < i) innerA += w[j];
                }
            }
            A += w[m] * innerA;
            B += w[m] * innerB;
        }
        for (std::size_t j = 0; j < i; ++j)
            if (piv[i] + piv[j] > eu) C1 += w[j];
        C1 *= w[i];
        const double C2 = (piv[i] + piv[i] > eu) ? w[i] * w[i] : 0.0;
        const double neg_flux = -2.0 * A + B + 4.0 * C1 + 2.0 * C2;
        rate[i] = -piv[i] / grid.width(i) * neg_flux;
    }
    return rate;
}

/// Midpoint-rule flux for the truncated Smoluchowski non-conservative form,
/// operating on number density f (mass flux; integrand weight k_m):
///   F_{i+1/2} = 2 * sum_{m<=i} sum_{j: k_j > c - k_m} h_m h_j a(k_m,k_j) f_m f_j k_m.
inline FluxVector smoluchowski_flux(const Grid& grid, const KernelSpec& spec,
                                    const std::vector<double>& f) {
    if (f.size() != grid.num_cells())
        throw std::invalid_argument("smoluchowski_flux: state length mismatch");
    const std::size_t M = grid.num_cells();
    const auto& piv = grid.pivots();
    FluxVector out;
    out.q.resize(M + 1);
    for (std::size_t e = 0; e <= M; ++e) {
        const double c = grid.edge(e);
        double acc = 0.0;
        for (std::size_t m = 0; m < e; ++m) {
            double inner = 0.0;
            for (std::size_t j = 0; j < M; ++j)
                if (piv[j] > c - piv[m])
                    inner += grid.width(j) * spec.eval(piv[m], piv[j]) * f[j];
            acc += grid.width(m) * f[m] * piv[m] * inner;
        }
        out.q[e] = 2.0 * acc;
    }
    return out;
}

}  // namespace wavekin
