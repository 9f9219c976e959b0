#include "dsirr/moments.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "dsirr/quadrature.hpp"

namespace dsirr {

CovarianceTriple covariance_closed_form(const PacketParams& p, SppForm form) {
    const double B2 = p.B * p.B;
    const double D = p.D;
    const double Dl = p.Delta;
    const double al = p.inv_R / 2.0;
    const double E = std::exp(-D * D / (4.0 * B2) - Dl * Dl * B2);

    CovarianceTriple c;
    c.sxx2 = B2 / 2.0 +
             (D * D - 4.0 * Dl * Dl * B2 * B2 * E) / (4.0 + 4.0 * E);

    if (form == SppForm::audited) {
        const double A = 1.0 / (2.0 * B2) + 2.0 * al * al * B2;
        const double X = (al * D - Dl) * (al * D - Dl);
        const double Y = -(D * D / (4.0 * B2 * B2) +
                           4.0 * al * al * Dl * Dl * B2 * B2 +
                           2.0 * al * Dl * D);
        c.spp2 = A + (X + E * Y) / (1.0 + E);
    } else {
        // transcribed variant: third term with exp(-D^2/4B^2 + Delta^2 B^2)
        const double e3 = std::exp(-D * D / (4.0 * B2) + Dl * Dl * B2);
        c.spp2 = (1.0 / (2.0 * B2) + B2 * p.inv_R * p.inv_R / 2.0) +
                 (D * p.inv_R - 2.0 * Dl) * (D * p.inv_R - 2.0 * Dl) /
                     (4.0 + 4.0 * E) -
                 (D * D / (B2 * B2) + 2.0 * Dl * (Dl + D * p.inv_R)) /
                     (1.0 + e3);
    }

    c.sxp = al * B2 - Dl * D / 2.0 + al * D * D / (2.0 * (1.0 + E)) -
            2.0 * al * Dl * Dl * B2 * B2 * E / (1.0 + E);
    c.dC = c.sxx2 * c.spp2 - c.sxp * c.sxp;
    return c;
}

NumericCovariance covariance_numeric(const ScreenState& s) {
    const double Wq = s.q_extent();
    const double Wk = s.k_extent();

    auto rho = [&](double x) { return s.density(x); };
    auto xrho = [&](double x) { return x * s.density(x); };
    auto xxrho = [&](double x) { return x * x * s.density(x); };
    auto krho = [&](double k) { return k * s.momentum_density(k); };
    auto kkrho = [&](double k) { return k * k * s.momentum_density(k); };
    auto xp = [&](double x) {
        const std::complex<double> psi = s.amplitude(x);
        const std::complex<double> dpsi = s.amplitude_derivative(x);
        return x * std::imag(std::conj(psi) * dpsi);
    };

    const QuadResult n = integrate(rho, -Wq, Wq, 1e-12, 1e-11);
    const QuadResult mx = integrate(xrho, -Wq, Wq, 1e-12, 0.0);
    const QuadResult xx = integrate(xxrho, -Wq, Wq, 0.0, 1e-10);
    const QuadResult mk = integrate(krho, -Wk, Wk, 1e-12, 0.0);
    const QuadResult kk = integrate(kkrho, -Wk, Wk, 0.0, 1e-10);
    const QuadResult sxp = integrate(xp, -Wq, Wq, 1e-12, 1e-10);

    NumericCovariance out;
    out.converged = n.converged && xx.converged && kk.converged &&
                    sxp.converged && mx.converged && mk.converged;
    if (!out.converged)
        throw std::runtime_error(
            "covariance_numeric: quadrature did not converge");
    out.mean_x = mx.value / n.value;
    out.mean_k = mk.value / n.value;
    out.cov.sxx2 = xx.value / n.value;
    out.cov.spp2 = kk.value / n.value;
    out.cov.sxp = sxp.value / n.value;
    out.cov.dC = out.cov.sxx2 * out.cov.spp2 - out.cov.sxp * out.cov.sxp;
    return out;
}

SqueezingRatios squeezing_ratios(const ExperimentConfig& cfg, double t,
                                 double tau) {
    const CovarianceTriple with_corr =
        covariance_closed_form(slit_params(cfg, t, tau));
    ExperimentConfig ref = cfg;
    ref.gamma = 0.0;
    const CovarianceTriple plain =
        covariance_closed_form(slit_params(ref, t, tau));
    SqueezingRatios r;
    r.rx = std::sqrt(with_corr.sxx2 / plain.sxx2);
    r.rp = std::sqrt(with_corr.spp2 / plain.spp2);
    return r;
}

}  // namespace dsirr
