#pragma once
// Run configuration: experiment constants in SI units plus sweep controls.
// Serialized as a flat JSON object with a fixed key set; unknown keys are
// rejected so typos fail loudly instead of silently using a default.

#include <stdexcept>
#include <string>
#include <vector>

#include "dsirr/config.hpp"
#include "dsirr/irrealism.hpp"

namespace dsirr {

struct RunConfig {
    ExperimentConfig experiment = ExperimentConfig::neutron();
    double tau_over_tau0 = 18.0;  // slit-to-screen flight time, units of tau0

    // detector resolutions (SI) and the reference scales used for rescaling
    double dq_m = 2.5e-6;
    double dk_per_m = 1400.0;
    double dq_ref_m = 0.17e-3;
    double dk_ref_per_m = 1.58e5;

    // sweep grid in units of tau0
    double t_lo = 0.0;
    double t_hi = 3.0;
    int t_steps = 121;

    Resolution resolution() const;
    std::vector<double> t_grid() const;
    void validate() const;  // throws std::invalid_argument
};

// Parse a JSON object ("" and "{}" mean: all defaults). Unknown or non-numeric
// keys throw std::invalid_argument naming the offending key.
RunConfig parse_run_config(const std::string& json_text);

// Read and parse a config file; throws std::invalid_argument if unreadable.
RunConfig load_run_config(const std::string& path);

// One-line JSON with a stable key order; parses back to an identical config.
std::string run_config_json(const RunConfig& rc);

}  // namespace dsirr
