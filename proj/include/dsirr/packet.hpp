#pragma once
// Closed-form single-branch wavepacket parameters and branch amplitudes for
// the double-slit geometry: free flight t, Gaussian aperture at +/- d/2, free
// flight tau to the screen. Reduced units throughout (hbar = m = sigma0 = 1,
// times in tau0, lengths in sigma0).

#include <complex>

#include "dsirr/config.hpp"

namespace dsirr {

enum class Slit { upper, lower };

struct FreeParams {
    double b;      // free-propagation width
    double r;      // wavefront curvature; +/-inf at the focal crossing
    double inv_r;  // 1/r, finite and smooth everywhere (the primitive)
};

struct PacketParams {
    // geometry the parameters were built from
    double gamma;
    double beta;  // aperture width, sigma0 units
    double d;     // slit separation, sigma0 units
    double t;     // flight time before the slits, tau0 units
    double tau;   // flight time slits -> screen, tau0 units

    double b, r, inv_r;  // pre-slit free packet
    double B, inv_R, R;  // screen branch width and curvature (1/R primitive)
    double Delta;        // fringe wavenumber
    double D;            // branch separation; negative before the focus when
                         // the converging phase still dominates (gamma < 0)
    double mu;           // propagation phase anomaly, continuous in t
    double theta;        // slit-width phase
};

// free evolution of the correlated Gaussian; t >= 0, reduced units
FreeParams free_params(double gamma, double t);
FreeParams free_params(const ExperimentConfig& cfg, double t);

// full parameter set at the screen; t >= 0, tau > 0, reduced units
PacketParams slit_params(double gamma, double beta, double d, double t,
                         double tau);
PacketParams slit_params(const ExperimentConfig& cfg, double t, double tau);

// unit-norm branch amplitude at screen position x (sigma0 units):
// (B sqrt(pi))^(-1/2) exp[-(x -/+ D/2)^2/(2B^2)]
//                     exp[i(x^2/(2R) -/+ Delta x + theta + mu)]
std::complex<double> branch_amplitude(const PacketParams& p, Slit slit,
                                      double x);

}  // namespace dsirr
