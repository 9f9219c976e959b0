#include "dsirr/irrealism.hpp"

#include <cmath>

namespace dsirr {

Resolution Resolution::from_si(const ExperimentConfig& cfg, double dq_m,
                               double dk_per_m, double dq_ref_m,
                               double dk_ref_per_m) {
    Resolution r;
    r.dq = dq_m / cfg.sigma0;
    r.dk = dk_per_m * cfg.sigma0;
    r.dq_ref = dq_ref_m / cfg.sigma0;
    r.dk_ref = dk_ref_per_m * cfg.sigma0;
    r.validate();
    return r;
}

Resolution Resolution::coarse_apparatus(const ExperimentConfig& cfg) {
    return from_si(cfg, 2.5e-6, 1400.0, 0.17e-3, 1.58e5);
}

Resolution Resolution::fine_apparatus(const ExperimentConfig& cfg) {
    return from_si(cfg, 2.5e-9, 1.4, 0.17e-3, 1.58e5);
}

void Resolution::validate() const {
    if (!(dq > 0.0) || !(dk > 0.0) || !(dq_ref > 0.0) || !(dk_ref > 0.0))
        throw std::invalid_argument("Resolution: widths must be > 0");
    if (dq > dq_ref)
        throw std::invalid_argument("Resolution: dq must not exceed dq_ref");
    if (dk > dk_ref)
        throw std::invalid_argument("Resolution: dk must not exceed dk_ref");
}

double shannon_entropy(const BinnedDistribution& dist) {
    double h = 0.0;
    for (double p : dist.probs) {
        if (p > 0.0) h -= p * std::log(p);
    }
    // truncation noise floor: with tail mass tm the surviving-bin entropy of a
    // one-bin distribution is O(tm (1 - ln tm)); anything below that scale is
    // numeric residue of the cutoff, not structure
    const double tm = std::max(dist.tail_mass, 1e-15);
    const double floor = 100.0 * tm * (1.0 - std::log(tm));
    if (std::abs(h) < floor) return 0.0;
    return std::max(h, 0.0);
}

double irrealism_Q(const ScreenState& s, const Resolution& res,
                   BinMethod method) {
    res.validate();
    auto rho = [&s](double x) { return s.density(x); };
    const BinnedDistribution dist = bin_distribution(
        rho, res.dq, s.q_extent(), method, s.q_smooth_scale());
    return shannon_entropy(dist);
}

double irrealism_P(const ScreenState& s, const Resolution& res,
                   BinMethod method) {
    res.validate();
    auto rho = [&s](double k) { return s.momentum_density(k); };
    const BinnedDistribution dist = bin_distribution(
        rho, res.dk, s.k_extent(), method, s.k_smooth_scale());
    return shannon_entropy(dist);
}

double rescaled_irrealism(double raw, const Resolution& res, Axis axis) {
    res.validate();
    const double width = (axis == Axis::Q) ? res.dq : res.dk;
    const double ref = (axis == Axis::Q) ? res.dq_ref : res.dk_ref;
    return raw - std::log(ref / width);
}

}  // namespace dsirr
