#pragma once
// Physical configuration (SI at the boundary) and derived scales.
// Everything downstream works in reduced units hbar = m = sigma0 = 1, where
// the intrinsic time unit is tau0 = m*sigma0^2/hbar; lengths are in sigma0,
// wavenumbers in 1/sigma0.

#include <stdexcept>

namespace dsirr {

struct ExperimentConfig {
    double mass;    // kg
    double sigma0;  // m, initial packet width parameter
    double beta;    // m, slit aperture width
    double d;       // m, slit separation
    double lambda;  // m, de Broglie wavelength (sets the longitudinal speed)
    double gamma;   // dimensionless initial position-momentum correlation
    double hbar;    // J s

    // cold-neutron interferometry preset
    static ExperimentConfig neutron();

    void validate() const;  // throws std::invalid_argument naming the field

    double tau0() const { return mass * sigma0 * sigma0 / hbar; }
    double v_z() const;

    // reduced slit geometry
    double beta_hat() const { return beta / sigma0; }
    double d_hat() const { return d / sigma0; }
};

struct Scales {
    double tau0;  // s
    double v_z;   // m/s
};

Scales derived_scales(const ExperimentConfig& cfg);

// second moments of the initial correlated Gaussian, SI units
struct InitialMoments {
    double sxx;  // m
    double spp;  // kg m/s
    double sxp;  // J s
};

InitialMoments initial_moments(const ExperimentConfig& cfg);

}  // namespace dsirr
