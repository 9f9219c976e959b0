#pragma once
// Coarse-grained probability distributions over aligned bins, Shannon entropy,
// and the position/wavenumber irrealism with its resolution rescaling.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "dsirr/config.hpp"
#include "dsirr/parallel.hpp"
#include "dsirr/quadrature.hpp"
#include "dsirr/screen.hpp"

namespace dsirr {

struct BinningError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// apparatus resolutions, reduced units (lengths in sigma0, wavenumbers in
// 1/sigma0); dq/dk must not exceed the reference widths dq_ref/dk_ref
struct Resolution {
    double dq;
    double dk;
    double dq_ref;
    double dk_ref;

    static Resolution from_si(const ExperimentConfig& cfg, double dq_m,
                              double dk_per_m, double dq_ref_m,
                              double dk_ref_per_m);
    // the two apparatus presets the extrema tables are quoted at
    static Resolution coarse_apparatus(const ExperimentConfig& cfg);
    static Resolution fine_apparatus(const ExperimentConfig& cfg);

    void validate() const;
};

enum class Axis { Q, P };

enum class BinMethod {
    automatic,  // midpoint when bins are far below every structure scale
    adaptive,   // per-bin adaptive quadrature, absolute tolerance 1e-14
    midpoint    // p_m = rho(m dq) dq
};

// probabilities over bins [(m-1/2)w, (m+1/2)w], m in [-n_max, n_max];
// bin 0 is centered on the symmetry point x = 0
struct BinnedDistribution {
    double bin_width = 0.0;
    int n_max = 0;
    std::vector<double> probs;  // index m + n_max
    double tail_mass = 0.0;

    double prob(int m) const { return probs[static_cast<size_t>(m + n_max)]; }
};

namespace detail {
// midpoint is safe only when bins sit far inside the smallest density
// structure (hump width or fringe half-period); factor validated to keep the
// entropy within 1e-3 nats of per-bin quadrature well before 1/50
inline bool midpoint_ok(double bin_width, double smooth_scale) {
    return smooth_scale > 0.0 && 200.0 * bin_width <= smooth_scale;
}
}  // namespace detail

// Bin a normalized density. extent_hint is the half-window that must contain
// all but < 1e-12 of the mass; a larger tail is reported as an error.
// smooth_scale feeds the automatic method choice (0 forces quadrature).
template <typename Density>
BinnedDistribution bin_distribution(Density&& rho, double bin_width,
                                    double extent_hint,
                                    BinMethod method = BinMethod::automatic,
                                    double smooth_scale = 0.0) {
    if (!(bin_width > 0.0))
        throw BinningError("bin_distribution: bin_width must be > 0");
    if (!(extent_hint > 0.0))
        throw BinningError("bin_distribution: extent_hint must be > 0");

    const double W = extent_hint;
    const int n_max = std::max(0, static_cast<int>(std::ceil(W / bin_width - 0.5)));
    const std::size_t count = 2 * static_cast<std::size_t>(n_max) + 1;

    BinnedDistribution dist;
    dist.bin_width = bin_width;
    dist.n_max = n_max;
    dist.probs.assign(count, 0.0);

    const bool use_midpoint =
        method == BinMethod::midpoint ||
        (method == BinMethod::automatic &&
         detail::midpoint_ok(bin_width, smooth_scale));

    if (use_midpoint) {
        parallel_for(count, [&](std::size_t i) {
            const double x =
                (static_cast<double>(static_cast<int>(i) - n_max)) * bin_width;
            dist.probs[i] = rho(x) * bin_width;
        });
    } else {
        parallel_for(count, [&](std::size_t i) {
            const int m = static_cast<int>(i) - n_max;
            // clip the outermost bins to the support window so a bin much
            // wider than the density never integrates over dead space
            const double lo = std::max((m - 0.5) * bin_width, -W);
            const double hi = std::min((m + 0.5) * bin_width, W);
            if (lo >= hi) return;
            const QuadResult q = integrate(rho, lo, hi, 1e-14, 0.0, 24);
            // never throw from a worker: flag failures for the check below
            dist.probs[i] = q.converged ? q.value
                                        : std::numeric_limits<double>::quiet_NaN();
        });
    }

    double sum = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        double& p = dist.probs[i];
        if (std::isnan(p))
            throw BinningError(
                "bin_distribution: per-bin quadrature did not converge");
        if (p < 0.0) {
            if (p < -1e-12)
                throw BinningError("bin_distribution: negative bin probability");
            p = 0.0;
        }
        sum += p;
    }
    const double deficit = 1.0 - sum;
    if (deficit > 1e-12)
        throw BinningError(
            "bin_distribution: extent_hint leaves tail mass above target");
    dist.tail_mass = std::max(0.0, deficit);
    return dist;
}

// H = -sum p ln p in nats, 0 ln 0 := 0. Entropy below the truncation noise
// floor of the tail target snaps to exactly 0 (single-bin regime).
double shannon_entropy(const BinnedDistribution& dist);

double irrealism_Q(const ScreenState& s, const Resolution& res,
                   BinMethod method = BinMethod::automatic);
double irrealism_P(const ScreenState& s, const Resolution& res,
                   BinMethod method = BinMethod::automatic);

// raw irrealism minus ln(ref/width) on the given axis
double rescaled_irrealism(double raw, const Resolution& res, Axis axis);

}  // namespace dsirr
