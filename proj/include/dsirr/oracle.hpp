#pragma once
// Independent evaluation of a slit branch straight from its propagator
// integral: free kernel over t, Gaussian aperture, free kernel over tau.
// The inner (pre-slit) integral is a closed complex-Gaussian form; only the
// slit-plane integral is done numerically. Used to pin the closed-form branch.

#include <complex>

#include "dsirr/config.hpp"
#include "dsirr/packet.hpp"
#include "dsirr/quadrature.hpp"

namespace dsirr {

struct OracleAmplitude {
    std::complex<double> value;  // unit-norm branch amplitude at x
    double error;                // quadrature error estimate (outer integral)
    bool converged;
};

// complex-Gaussian state psi(x) = A exp(-a x^2 + c x)
struct GaussianState {
    std::complex<double> A, a, c;
};

// initial correlated packet and its exact free propagation / aperture passage
GaussianState initial_state(double gamma);
GaussianState propagate_free(const GaussianState& s, double T);
GaussianState apply_aperture(const GaussianState& s, double beta,
                             double center);

// wave just after the aperture at slit-plane position xj (closed inner form)
std::complex<double> slit_plane_wave(double gamma, double beta, double d,
                                     double t, Slit slit, double xj);

// same, with the pre-slit integral done by quadrature (identity-check oracle)
QuadResultC slit_plane_wave_numeric(double gamma, double beta, double d,
                                    double t, Slit slit, double xj);

// raw (un-normalized) branch at screen position x
QuadResultC oracle_branch_raw(const ExperimentConfig& cfg, double t,
                              double tau, Slit slit, double x);

// L2 norm of the raw branch, by quadrature
double oracle_branch_norm(const ExperimentConfig& cfg, double t, double tau,
                          Slit slit);

// unit-norm branch amplitude, directly comparable to branch_amplitude;
// caller may pass a precomputed norm to amortize it over an x-grid
OracleAmplitude oracle_branch_amplitude(const ExperimentConfig& cfg, double t,
                                        double tau, Slit slit, double x,
                                        double norm_hint = 0.0);

}  // namespace dsirr
