#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "wavekin/collision.hpp"

namespace wavekin {
namespace oracle {

/// Midpoint-rule value of the weak-form right side over [0,R]^2 for the test
/// function chi_[0,c]:
///   sum_{i,j} h_i h_j a(k_i,k_j) f_i f_j K(c; k_i, k_j),
/// with K evaluated literally from the three characteristic functions.
/// Operates on number density f. Test-only; O(M^2) per cutoff.
inline double weak_form_rhs(const Grid& grid, const KernelSpec& spec,
                            const std::vector<double>& f, double c) {
    if (f.size() != grid.num_cells())
        throw std::invalid_argument("weak_form_rhs: state length mismatch");
    const std::size_t M = grid.num_cells();
    const auto& piv = grid.pivots();
    double acc = 0.0;
    for (std::size_t i = 0; i < M; ++i) {
        double inner = 0.0;
        for (std::size_t j = 0; j < M; ++j) {
            const int K = K_indicator(c, piv[i], piv[j]);
            if (K != 0)
                inner += grid.width(j) * spec.eval(piv[i], piv[j]) * f[j] * K;
        }
        acc += grid.width(i) * f[i] * inner;
    }
    return acc;
}

/// The cutoff-crossing gain mass sum_{i,j} w_i w_j chi{|k_i - k_j| <= c},
/// where w = h f k^(gamma/2). This is exactly the term by which the literal
/// weak form exceeds the two-term flux form q(c) - q(0): the flux scheme
/// treats the chi_[0,c](|k - k1|) gain as cutoff-independent.
inline double weak_form_flux_gap(const Grid& grid, const KernelSpec& spec,
                                 const std::vector<double>& f, double c) {
    const std::size_t M = grid.num_cells();
    const auto& piv = grid.pivots();
    double acc = 0.0;
    for (std::size_t i = 0; i < M; ++i) {
        double inner = 0.0;
        for (std::size_t j = 0; j < M; ++j)
            if (std::abs(piv[i] - piv[j]) <= c)
                inner += grid.width(j) * spec.eval(piv[i], piv[j]) * f[j];
        acc += grid.width(i) * f[i] * inner;
    }
    return acc;
}

/// Midpoint-rule evaluation of the six-term untransformed collision operator
/// at pivot k_i, inner infinite integral truncated at R. Uniform grids only:
/// the k - k1 and k + k1 pairings are realized as index convolutions.
inline double untransformed_Q(const Grid& grid, const KernelSpec& spec,
                              const std::vector<double>& f, std::size_t cell) {
    if (f.size() != grid.num_cells())
        throw std::invalid_argument("untransformed_Q: state length mismatch");
    if (!grid.is_uniform())
        throw std::invalid_argument("untransformed_Q: requires a uniform grid");
    const std::size_t M = grid.num_cells();
    const auto& piv = grid.pivots();
    const double h = grid.width(0);
    const std::size_t i = cell;

    // gain within [0, k]: the k1 -> k - k1 pairing becomes the index
    // convolution j -> i-1-j
    double t_gain = 0.0;
    for (std::size_t j = 0; j < i; ++j)
        t_gain += spec.eval(piv[j], piv[i - 1 - j]) * f[j] * f[i - 1 - j];
    // the two loss pieces of the first integral coincide under the pairing
    double t_loss1 = 0.0;
    for (std::size_t j = 0; j < i; ++j) t_loss1 += spec.eval(piv[i], piv[j]) * f[i] * f[j];
    // second integral: loss over the full truncated domain ...
    double t_loss2 = 0.0;
    for (std::size_t j = 0; j < M; ++j) t_loss2 += spec.eval(piv[i], piv[j]) * f[i] * f[j];
    // ... and the two gains from k + k1, paired as index i + j
    double t_gain2 = 0.0;
    for (std::size_t j = 0; i + j + 1 < M; ++j) {
        const std::size_t up = i + j + 1;
        t_gain2 += spec.eval(piv[up], piv[j]) * f[up] * f[j];
        t_gain2 += spec.eval(piv[up], piv[i]) * f[i] * f[up];
    }
    return h * (t_gain - 2.0 * t_loss1) - 2.0 * h * t_loss2 + 2.0 * h * t_gain2;
}

/// The published midpoint-simplified negative flux on a uniform grid (the form
/// its stability analysis manipulates):
///   [Q_i]^-+ ~= 2 w_i (P_{i+1} + P_i) - sum_{a+b=i-1} w_a w_b,
/// with w the flux weights and P their prefix sums. Cross-check only.
inline double uniform_neg_flux_convolution(const Grid& grid, const KernelSpec& spec,
                                           const EnergyState& state, std::size_t cell) {
    if (!grid.is_uniform())
        throw std::invalid_argument("uniform_neg_flux_convolution: requires a uniform grid");
    check_state(grid, state);
    const auto w = flux_weights(grid, spec, state.g);
    double prefix_incl = 0.0;
    for (std::size_t j = 0; j <= cell; ++j) prefix_incl += w[j];
    const double prefix_excl = prefix_incl - w[cell];
    double conv = 0.0;
    for (std::size_t a = 0; a < cell; ++a) conv += w[a] * w[cell - 1 - a];
    return 2.0 * w[cell] * (prefix_incl + prefix_excl) - conv;
}

/// The gain convolution term of the simplified negative flux alone, for
/// term-by-term comparison against untransformed_Q's gain.
inline double uniform_convolution_gain(const Grid& grid, const KernelSpec& spec,
                                       const EnergyState& state, std::size_t cell) {
    if (!grid.is_uniform())
        throw std::invalid_argument("uniform_convolution_gain: requires a uniform grid");
    check_state(grid, state);
    const auto w = flux_weights(grid, spec, state.g);
    double conv = 0.0;
    if (cell >= 1)
        for (std::size_t a = 0; a <= cell - 1; ++a) conv += w[a] * w[cell - 1 - a];
    return conv;
}

}  // namespace oracle
}  // namespace wavekin
