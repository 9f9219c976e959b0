#pragma once
// Normalized two-branch superposition at the detection screen, with position
// and wavenumber densities. Reduced units; immutable after construction.

#include <complex>

#include "dsirr/config.hpp"
#include "dsirr/packet.hpp"

namespace dsirr {

class ScreenState {
  public:
    static ScreenState create(const ExperimentConfig& cfg, double t,
                              double tau);
    static ScreenState create(const PacketParams& params);

    const PacketParams& params() const { return p_; }
    double overlap() const { return E_; }      // exp(-D^2/4B^2 - Delta^2 B^2)
    double norm2() const { return norm2_; }    // N^2 = 2 + 2 overlap
    double norm() const { return norm_; }

    // psi(x) = [psi_+(x) + psi_-(x)] / N and its x-derivative
    std::complex<double> amplitude(double x) const;
    std::complex<double> amplitude_derivative(double x) const;
    double density(double x) const;  // |psi|^2, via real exponentials

    // symmetric-convention transform psitilde(k) = (2pi)^(-1/2) Int psi e^(-ikx) dx
    std::complex<double> momentum_amplitude(double k) const;
    double momentum_density(double k) const;

    // support reach used for quadrature/binning windows (tails < 1e-30)
    double q_extent() const;
    double k_extent() const;
    // normalization-check domain: +/- 12 max(B, |D|)
    double q_domain() const;

    double k_sigma() const { return k_sigma_; }  // single-branch k spread
    // finest structure scale along each axis (hump width vs fringe half-period);
    // drives the midpoint-vs-quadrature binning choice
    double q_smooth_scale() const;
    double k_smooth_scale() const;

  private:
    explicit ScreenState(const PacketParams& p);

    PacketParams p_;
    double E_, norm2_, norm_;
    // branch quadratic decomposition psi_+- = exp(-a x^2 + c_+- x + g)
    std::complex<double> a_, c_up_;
    // momentum fast path: w = 1/(4a), c = c_up, shared real prefactor
    double w_r_, w_i_, c_r_, c_i_, k_base_;
    double k_sigma_, k_slope_;  // fringe phase slope in k
};

// operation-style wrappers
ScreenState superposition(const ExperimentConfig& cfg, double t, double tau);
double position_density(const ScreenState& s, double x);
std::complex<double> momentum_amplitude(const ScreenState& s, double k);
double momentum_density(const ScreenState& s, double k);

}  // namespace dsirr
