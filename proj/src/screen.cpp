#include "dsirr/screen.hpp"

#include <cmath>

namespace dsirr {

namespace {
using cplx = std::complex<double>;
constexpr cplx kI{0.0, 1.0};
}  // namespace

ScreenState::ScreenState(const PacketParams& p) : p_(p) {
    const double B2 = p_.B * p_.B;
    E_ = std::exp(-p_.D * p_.D / (4.0 * B2) - p_.Delta * p_.Delta * B2);
    norm2_ = 2.0 + 2.0 * E_;
    norm_ = std::sqrt(norm2_);

    a_ = cplx(1.0 / (2.0 * B2), -p_.inv_R / 2.0);
    c_up_ = cplx(p_.D / (2.0 * B2), -p_.Delta);

    const cplx w = 1.0 / (4.0 * a_);
    w_r_ = w.real();
    w_i_ = w.imag();
    c_r_ = c_up_.real();
    c_i_ = c_up_.imag();
    // |(2a)^(-1/2)|^2 * (B sqrt(pi))^(-1) * exp(-D^2/4B^2) / N^2
    k_base_ = std::exp(-p_.D * p_.D / (4.0 * B2)) /
              (2.0 * std::abs(a_) * p_.B * std::sqrt(M_PI) * norm2_);

    k_sigma_ = std::sqrt(1.0 / (2.0 * B2) +
                         p_.inv_R * p_.inv_R * B2 / 2.0);
    k_slope_ = 4.0 * (w_i_ * c_i_ - w_r_ * c_r_);
}

ScreenState ScreenState::create(const PacketParams& params) {
    return ScreenState(params);
}

ScreenState ScreenState::create(const ExperimentConfig& cfg, double t,
                                double tau) {
    return ScreenState(slit_params(cfg, t, tau));
}

std::complex<double> ScreenState::amplitude(double x) const {
    return (branch_amplitude(p_, Slit::upper, x) +
            branch_amplitude(p_, Slit::lower, x)) /
           norm_;
}

std::complex<double> ScreenState::amplitude_derivative(double x) const {
    const cplx up = branch_amplitude(p_, Slit::upper, x);
    const cplx dn = branch_amplitude(p_, Slit::lower, x);
    return ((-2.0 * a_ * x + c_up_) * up + (-2.0 * a_ * x - c_up_) * dn) /
           norm_;
}

double ScreenState::density(double x) const {
    const double B2 = p_.B * p_.B;
    const double pref = 1.0 / (p_.B * std::sqrt(M_PI));
    const double gp =
        pref * std::exp(-(x - p_.D / 2.0) * (x - p_.D / 2.0) / B2);
    const double gm =
        pref * std::exp(-(x + p_.D / 2.0) * (x + p_.D / 2.0) / B2);
    return (gp + gm +
            2.0 * std::sqrt(gp * gm) * std::cos(2.0 * p_.Delta * x)) /
           norm2_;
}

std::complex<double> ScreenState::momentum_amplitude(double k) const {
    const double B2 = p_.B * p_.B;
    const cplx pref = std::pow(p_.B * std::sqrt(M_PI), -0.5) *
                      std::exp(-p_.D * p_.D / (8.0 * B2)) *
                      std::polar(1.0, p_.theta + p_.mu) *
                      std::sqrt(1.0 / (2.0 * a_));
    const cplx up = std::exp((c_up_ - kI * k) * (c_up_ - kI * k) / (4.0 * a_));
    const cplx dn =
        std::exp((-c_up_ - kI * k) * (-c_up_ - kI * k) / (4.0 * a_));
    return pref * (up + dn) / norm_;
}

double ScreenState::momentum_density(double k) const {
    // Phi_+- = (c_+- - ik)^2 / (4a) expanded into real parts
    const double u = c_i_ - k;   // upper branch
    const double v = -c_i_ - k;  // lower branch
    const double cr2 = c_r_ * c_r_;
    const double re_p = w_r_ * (cr2 - u * u) - 2.0 * w_i_ * c_r_ * u;
    const double im_p = w_i_ * (cr2 - u * u) + 2.0 * w_r_ * c_r_ * u;
    const double re_m = w_r_ * (cr2 - v * v) + 2.0 * w_i_ * c_r_ * v;
    const double im_m = w_i_ * (cr2 - v * v) - 2.0 * w_r_ * c_r_ * v;
    const double ep = std::exp(2.0 * re_p);
    const double em = std::exp(2.0 * re_m);
    return k_base_ *
           (ep + em + 2.0 * std::sqrt(ep * em) * std::cos(im_p - im_m));
}

double ScreenState::q_extent() const {
    return std::abs(p_.D) / 2.0 + 14.0 * p_.B;
}

double ScreenState::k_extent() const {
    const double k0 = std::abs(p_.inv_R * p_.D / 2.0 - p_.Delta) +
                      std::abs(p_.Delta);
    return k0 + 14.0 * k_sigma_;
}

double ScreenState::q_domain() const {
    return 12.0 * std::max(p_.B, std::abs(p_.D));
}

double ScreenState::q_smooth_scale() const {
    const double hump = p_.B / std::sqrt(2.0);
    if (p_.Delta == 0.0) return hump;
    return std::min(hump, M_PI / (2.0 * std::abs(p_.Delta)));
}

double ScreenState::k_smooth_scale() const {
    if (k_slope_ == 0.0) return k_sigma_;
    return std::min(k_sigma_, M_PI / std::abs(k_slope_));
}

ScreenState superposition(const ExperimentConfig& cfg, double t, double tau) {
    return ScreenState::create(cfg, t, tau);
}

double position_density(const ScreenState& s, double x) { return s.density(x); }

std::complex<double> momentum_amplitude(const ScreenState& s, double k) {
    return s.momentum_amplitude(k);
}

double momentum_density(const ScreenState& s, double k) {
    return s.momentum_density(k);
}

}  // namespace dsirr
