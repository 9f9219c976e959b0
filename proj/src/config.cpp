#include "dsirr/config.hpp"

#include <cmath>
#include <string>

namespace dsirr {

ExperimentConfig ExperimentConfig::neutron() {
    ExperimentConfig c;
    c.mass = 1.67e-27;
    c.sigma0 = 7.8e-6;
    c.beta = 7.8e-6;
    c.d = 125e-6;
    c.lambda = 2e-9;
    c.gamma = -1.0;
    c.hbar = 1.0546e-34;
    return c;
}

void ExperimentConfig::validate() const {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::invalid_argument(std::string(name) +
                                        " must be strictly positive");
    };
    positive(mass, "mass");
    positive(sigma0, "sigma0");
    positive(beta, "beta");
    positive(d, "d");
    positive(lambda, "lambda");
    positive(hbar, "hbar");
    if (!std::isfinite(gamma))
        throw std::invalid_argument("gamma must be finite");
}

double ExperimentConfig::v_z() const {
    return 2.0 * M_PI * hbar / (mass * lambda);
}

Scales derived_scales(const ExperimentConfig& cfg) {
    cfg.validate();
    return {cfg.tau0(), cfg.v_z()};
}

InitialMoments initial_moments(const ExperimentConfig& cfg) {
    cfg.validate();
    InitialMoments m;
    m.sxx = cfg.sigma0 / std::sqrt(2.0);
    m.spp = std::sqrt(1.0 + cfg.gamma * cfg.gamma) * cfg.hbar /
            (std::sqrt(2.0) * cfg.sigma0);
    m.sxp = cfg.hbar * cfg.gamma / 2.0;
    return m;
}

}  // namespace dsirr
