#pragma once

#include <cmath>
#include <stdexcept>

namespace wavekin {

/// Product power-law collision kernel a(k1,k2) = (k1*k2)^(gamma/2).
///
/// gamma > 1 is the finite-capacity regime the experiments target; smaller
/// values are accepted but flagged as outside the validated regime.
struct KernelSpec {
    double gamma = 2.0;

    explicit KernelSpec(double g) : gamma(g) {
        if (!(g >= 0.0)) throw std::invalid_argument("KernelSpec: gamma must be >= 0");
    }

    bool finite_capacity() const { return gamma > 1.0; }

    /// a(k1,k2) = (k1*k2)^(gamma/2). Symmetric by construction.
    double eval(double k1, double k2) const {
        if (!(k1 > 0.0) || !(k2 > 0.0))
            throw std::invalid_argument("kernel: frequencies must be positive");
        return std::pow(k1 * k2, 0.5 * gamma);
    }

    /// Factorized weight k^(gamma/2 - 1), so that
    /// a(k1,k2)/(k1*k2) = weight(k1)*weight(k2).
    double weight(double k) const {
        if (!(k > 0.0)) throw std::invalid_argument("kernel: frequency must be positive");
        return std::pow(k, 0.5 * gamma - 1.0);
    }
};

/// K(k,k1) = chi_[0,c](k+k1) + chi_[0,c](|k-k1|) - 2*chi_[0,c](max{k,k1}),
/// evaluated directly from the three characteristic functions (closed
/// interval: chi(x) = 1 iff x <= c). Values are always in {-1, 0, +1}.
inline int K_indicator(double c, double k, double k1) {
    if (!(c >= 0.0) || !(k > 0.0) || !(k1 > 0.0))
        throw std::invalid_argument("K_indicator: require c >= 0, k > 0, k1 > 0");
    const auto chi = [c](double x) { return x <= c ? 1 : 0; };
    return chi(k + k1) + chi(std::abs(k - k1)) - 2 * chi(std::max(k, k1));
}

}  // namespace wavekin
