#include "dsirr/run_config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace dsirr {

namespace {
using ordered_json = nlohmann::ordered_json;

constexpr const char* kKeys[] = {
    "mass_kg",      "sigma0_m",  "beta_m",       "d_m",
    "lambda_m",     "gamma",     "hbar_Js",      "tau_over_tau0",
    "dq_m",         "dk_per_m",  "dq_ref_m",     "dk_ref_per_m",
    "t_lo",         "t_hi",      "t_steps",
};

bool known_key(const std::string& k) {
    for (const char* key : kKeys)
        if (k == key) return true;
    return false;
}

double get_number(const ordered_json& j, const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    const auto& v = j.at(key);
    if (!v.is_number())
        throw std::invalid_argument(std::string("config key \"") + key +
                                    "\" must be a number");
    return v.get<double>();
}
}  // namespace

Resolution RunConfig::resolution() const {
    return Resolution::from_si(experiment, dq_m, dk_per_m, dq_ref_m,
                               dk_ref_per_m);
}

std::vector<double> RunConfig::t_grid() const {
    std::vector<double> grid(static_cast<std::size_t>(t_steps));
    if (t_steps == 1) {
        grid[0] = t_lo;
        return grid;
    }
    for (int i = 0; i < t_steps; ++i)
        grid[static_cast<std::size_t>(i)] =
            t_lo + (t_hi - t_lo) * i / (t_steps - 1);
    return grid;
}

void RunConfig::validate() const {
    experiment.validate();
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::invalid_argument(std::string(name) +
                                        " must be positive and finite");
    };
    positive(tau_over_tau0, "tau_over_tau0");
    positive(dq_m, "dq_m");
    positive(dk_per_m, "dk_per_m");
    positive(dq_ref_m, "dq_ref_m");
    positive(dk_ref_per_m, "dk_ref_per_m");
    if (!std::isfinite(t_lo) || t_lo < 0.0)
        throw std::invalid_argument("t_lo must be finite and >= 0");
    if (!std::isfinite(t_hi) || t_hi < t_lo)
        throw std::invalid_argument("t_hi must be finite and >= t_lo");
    if (t_steps < 1)
        throw std::invalid_argument("t_steps must be >= 1");
    if (t_steps > 1 && !(t_hi > t_lo))
        throw std::invalid_argument("t_steps > 1 requires t_hi > t_lo");
    resolution().validate();
}

RunConfig parse_run_config(const std::string& json_text) {
    RunConfig rc;
    std::string trimmed;
    for (char c : json_text)
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
    if (trimmed.empty()) {
        rc.validate();
        return rc;
    }

    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("config is not valid JSON: ") +
                                    e.what());
    }
    if (!j.is_object())
        throw std::invalid_argument("config must be a JSON object");

    for (const auto& item : j.items())
        if (!known_key(item.key()))
            throw std::invalid_argument("unknown config key \"" + item.key() +
                                        "\"");

    rc.experiment.mass = get_number(j, "mass_kg", rc.experiment.mass);
    rc.experiment.sigma0 = get_number(j, "sigma0_m", rc.experiment.sigma0);
    rc.experiment.beta = get_number(j, "beta_m", rc.experiment.beta);
    rc.experiment.d = get_number(j, "d_m", rc.experiment.d);
    rc.experiment.lambda = get_number(j, "lambda_m", rc.experiment.lambda);
    rc.experiment.gamma = get_number(j, "gamma", rc.experiment.gamma);
    rc.experiment.hbar = get_number(j, "hbar_Js", rc.experiment.hbar);
    rc.tau_over_tau0 = get_number(j, "tau_over_tau0", rc.tau_over_tau0);
    rc.dq_m = get_number(j, "dq_m", rc.dq_m);
    rc.dk_per_m = get_number(j, "dk_per_m", rc.dk_per_m);
    rc.dq_ref_m = get_number(j, "dq_ref_m", rc.dq_ref_m);
    rc.dk_ref_per_m = get_number(j, "dk_ref_per_m", rc.dk_ref_per_m);
    rc.t_lo = get_number(j, "t_lo", rc.t_lo);
    rc.t_hi = get_number(j, "t_hi", rc.t_hi);
    if (j.contains("t_steps")) {
        const auto& v = j.at("t_steps");
        if (!v.is_number_integer())
            throw std::invalid_argument("config key \"t_steps\" must be an "
                                        "integer");
        rc.t_steps = v.get<int>();
    }

    rc.validate();
    return rc;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_run_config(buf.str());
}

std::string run_config_json(const RunConfig& rc) {
    ordered_json j;
    j["mass_kg"] = rc.experiment.mass;
    j["sigma0_m"] = rc.experiment.sigma0;
    j["beta_m"] = rc.experiment.beta;
    j["d_m"] = rc.experiment.d;
    j["lambda_m"] = rc.experiment.lambda;
    j["gamma"] = rc.experiment.gamma;
    j["hbar_Js"] = rc.experiment.hbar;
    j["tau_over_tau0"] = rc.tau_over_tau0;
    j["dq_m"] = rc.dq_m;
    j["dk_per_m"] = rc.dk_per_m;
    j["dq_ref_m"] = rc.dq_ref_m;
    j["dk_ref_per_m"] = rc.dk_ref_per_m;
    j["t_lo"] = rc.t_lo;
    j["t_hi"] = rc.t_hi;
    j["t_steps"] = rc.t_steps;
    return j.dump();
}

}  // namespace dsirr
