#pragma once
// Screen-state second moments: closed forms (with the sign-audited momentum
// variance), the quadrature moment oracle, the covariance determinant, and
// squeezing ratios. Reduced units unless stated.

#include "dsirr/config.hpp"
#include "dsirr/packet.hpp"
#include "dsirr/screen.hpp"

namespace dsirr {

struct CovarianceTriple {
    double sxx2;  // position variance
    double spp2;  // wavenumber variance (momentum with hbar = 1)
    double sxp;   // symmetrized correlation
    double dC;    // sxx2*spp2 - sxp^2, bounded below by 1/4
};

// Two algebraic variants of the spp2 closed form: `audited` is the one that
// matches the numeric moment oracle to machine precision; `verbatim` keeps the
// transcribed sign pattern, which deviates in strong-overlap regimes (kept
// available and regression-tested, never used by default).
enum class SppForm { audited, verbatim };

CovarianceTriple covariance_closed_form(const PacketParams& p,
                                        SppForm form = SppForm::audited);

struct NumericCovariance {
    CovarianceTriple cov;
    double mean_x;  // quadrature first moments; symmetry puts both at 0
    double mean_k;
    bool converged;
};

NumericCovariance covariance_numeric(const ScreenState& s);

struct SqueezingRatios {
    double rx;  // sigma_xx(gamma) / sigma_xx(0) at equal (t, tau)
    double rp;
};

SqueezingRatios squeezing_ratios(const ExperimentConfig& cfg, double t,
                                 double tau);

}  // namespace dsirr
