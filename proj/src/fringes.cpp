#include "dsirr/fringes.hpp"

#include <cmath>
#include <stdexcept>

namespace dsirr {

namespace {
// derivative numerator of the relative intensity; maxima live at + -> - sign
// changes (the positive cosh^2 denominator never flips the sign)
inline double relative_slope_num(const PacketParams& p, double x) {
    const double B2 = p.B * p.B;
    const double xi = p.D / B2;
    return -2.0 * p.Delta * std::sin(2.0 * p.Delta * x) * std::cosh(xi * x) -
           xi * std::sinh(xi * x) * std::cos(2.0 * p.Delta * x);
}
}  // namespace

double envelope(const PacketParams& p, double x) {
    const double B2 = p.B * p.B;
    return 2.0 / (p.B * std::sqrt(M_PI)) *
           std::exp(-(x * x + p.D * p.D / 4.0) / B2) *
           std::cosh(p.D * x / B2);
}

double relative_intensity(const PacketParams& p, double x) {
    const double B2 = p.B * p.B;
    return 1.0 + std::cos(2.0 * p.Delta * x) / std::cosh(p.D * x / B2);
}

double intensity(const PacketParams& p, double x) {
    return envelope(p, x) * relative_intensity(p, x);
}

double visibility(const PacketParams& p, double x) {
    return 1.0 / std::cosh(p.D * x / (p.B * p.B));
}

double predictability(const PacketParams& p, double x) {
    return std::abs(std::tanh(p.D * x / (p.B * p.B)));
}

PatternSample pattern_sample(const PacketParams& p, double x) {
    PatternSample s;
    s.x = x;
    s.envelope = envelope(p, x);
    s.relative = relative_intensity(p, x);
    s.intensity = s.envelope * s.relative;
    s.visibility = visibility(p, x);
    s.predictability = predictability(p, x);
    return s;
}

int count_fringes(const PacketParams& p, double relative_threshold) {
    if (!(relative_threshold > 0.0) || !(relative_threshold < 1.0))
        throw std::invalid_argument(
            "count_fringes: threshold must lie in (0, 1)");
    if (p.Delta == 0.0) return 0;  // flat modulation, no side maxima

    const int n = 10000;
    const double hi = 12.0 * p.B;
    const double h = hi / n;
    int count = 0;
    double prev = relative_slope_num(p, h);
    for (int i = 2; i <= n; ++i) {
        const double x = i * h;
        const double cur = relative_slope_num(p, x);
        if (prev > 0.0 && cur <= 0.0) {
            // bisect the bracket to the maximum
            double lo = (i - 1) * h, up = x;
            for (int it = 0; it < 60; ++it) {
                const double mid = 0.5 * (lo + up);
                if (relative_slope_num(p, mid) > 0.0)
                    lo = mid;
                else
                    up = mid;
            }
            const double xmax = 0.5 * (lo + up);
            if (visibility(p, xmax) > relative_threshold) ++count;
        }
        prev = cur;
    }
    return count;
}

}  // namespace dsirr
