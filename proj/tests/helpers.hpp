#pragma once
// Shared test utilities: an independent radix-2 FFT (wavenumber-density
// oracle), analytic Gaussian entropy, deterministic probe points, and
// relative-L2 comparison.

#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include "dsirr/config.hpp"

namespace testutil {

// in-place iterative radix-2 FFT, X_m = sum_j a_j exp(-2 pi i j m / N)
inline void fft_radix2(std::vector<std::complex<double>>& a) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("fft: 2^k");
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * M_PI / static_cast<double>(len);
        const std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

inline double gaussian_differential_entropy(double sigma) {
    return std::log(sigma * std::sqrt(2.0 * M_PI * std::exp(1.0)));
}

// deterministic probe points: fixed seed so reruns test identical inputs
inline std::vector<double> probe_points(double lo, double hi, int n,
                                        unsigned seed = 20250817u) {
    std::mt19937 gen(seed);
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> pts(static_cast<std::size_t>(n));
    for (auto& p : pts) p = dist(gen);
    return pts;
}

inline double rel_l2(const std::vector<std::complex<double>>& got,
                     const std::vector<std::complex<double>>& want) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i) {
        num += std::norm(got[i] - want[i]);
        den += std::norm(want[i]);
    }
    return std::sqrt(num / den);
}

inline double rel_l2(const std::vector<double>& got,
                     const std::vector<double>& want) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i) {
        num += (got[i] - want[i]) * (got[i] - want[i]);
        den += want[i] * want[i];
    }
    return std::sqrt(num / den);
}

inline dsirr::ExperimentConfig neutron_gamma(double gamma) {
    dsirr::ExperimentConfig cfg = dsirr::ExperimentConfig::neutron();
    cfg.gamma = gamma;
    return cfg;
}

}  // namespace testutil
