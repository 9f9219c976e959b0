#include "dsirr/packet.hpp"

#include <cmath>
#include <stdexcept>

namespace dsirr {

FreeParams free_params(double gamma, double t) {
    if (t < 0.0) throw std::invalid_argument("free_params: t must be >= 0");
    const double rad = t * t + 1.0 + 2.0 * t * gamma + t * t * gamma * gamma;
    FreeParams f;
    f.b = std::sqrt(rad);
    const double den = t * (1.0 + gamma * gamma) + gamma;
    f.inv_r = den / rad;
    f.r = rad / den;  // IEEE +/-inf at the focal crossing den = 0
    return f;
}

FreeParams free_params(const ExperimentConfig& cfg, double t) {
    return free_params(cfg.gamma, t);
}

PacketParams slit_params(double gamma, double beta, double d, double t,
                         double tau) {
    if (t < 0.0) throw std::invalid_argument("slit_params: t must be >= 0");
    if (!(tau > 0.0)) throw std::invalid_argument("slit_params: tau must be > 0");

    PacketParams p;
    p.gamma = gamma;
    p.beta = beta;
    p.d = d;
    p.t = t;
    p.tau = tau;

    const FreeParams f = free_params(gamma, t);
    p.b = f.b;
    p.r = f.r;
    p.inv_r = f.inv_r;

    const double rad = f.b * f.b;
    const double ib2 = 1.0 / (beta * beta);  // aperture curvature
    const double wsum = ib2 + 1.0 / rad;     // combined inverse width^2
    const double g2 = wsum * wsum + (1.0 / tau + f.inv_r) * (1.0 / tau + f.inv_r);

    p.B = std::sqrt(g2 * tau * tau / wsum);

    const double C = 1.0 + t / tau + gamma * gamma + gamma / tau +
                     t * gamma * gamma / tau + 2.0 * ib2;
    p.inv_R = (ib2 * ib2 + C / rad) / (tau * g2);
    p.R = 1.0 / p.inv_R;

    const double B2 = p.B * p.B;
    p.Delta = tau * d * ib2 / (2.0 * B2);
    p.D = d * (1.0 + tau * f.inv_r) / (1.0 + beta * beta / rad);
    p.theta = d * d * (1.0 / tau + f.inv_r) * ib2 * ib2 / (8.0 * g2);

    // phase anomaly: two-argument arctangent continued across the
    // denominator zero (the trajectory enters the third quadrant only from
    // the second, so a +2pi shift there keeps mu continuous in t)
    const double num = t + tau * (1.0 + ib2 + t * gamma * ib2);
    const double den = (1.0 - t * tau * ib2) + gamma * (t + tau);
    double ang = std::atan2(num, den);
    if (num < 0.0 && den < 0.0) ang += 2.0 * M_PI;
    p.mu = -0.5 * ang;

    return p;
}

PacketParams slit_params(const ExperimentConfig& cfg, double t, double tau) {
    return slit_params(cfg.gamma, cfg.beta_hat(), cfg.d_hat(), t, tau);
}

std::complex<double> branch_amplitude(const PacketParams& p, Slit slit,
                                      double x) {
    const double sgn = (slit == Slit::upper) ? 1.0 : -1.0;
    const double B2 = p.B * p.B;
    const double dx = x - sgn * p.D / 2.0;
    const double mod = std::pow(p.B * std::sqrt(M_PI), -0.5) *
                       std::exp(-dx * dx / (2.0 * B2));
    const double phase =
        x * x * p.inv_R / 2.0 - sgn * p.Delta * x + p.theta + p.mu;
    return std::polar(mod, phase);
}

}  // namespace dsirr
