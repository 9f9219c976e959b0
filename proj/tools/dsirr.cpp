// dsirr: double-slit studies with an initially contractive Gaussian packet.
// Subcommands write deterministic CSV (and optional SVG) into --out.

#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "dsirr/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "double-slit matter-wave study: second moments, coarse-grained "
        "irrealism, interference observables"};
    app.fallthrough();
    app.require_subcommand(1);

    std::string config_path;
    dsirr::OutputOptions out;
    double gamma = 0.0, tau = 0.0, dq = 0.0, dk = 0.0;
    double t_lo = 0.0, t_hi = 0.0;
    int t_steps = 0;

    app.add_option("--config", config_path,
                   "JSON config file (defaults: cold-neutron preset)");
    app.add_option("--gamma", gamma,
                   "override initial position-momentum correlation");
    app.add_option("--tau", tau, "override slit-to-screen time, tau0 units");
    app.add_option("--dq", dq, "override position resolution, meters");
    app.add_option("--dk", dk, "override wavenumber resolution, 1/meters");
    app.add_option("--t-lo", t_lo, "override sweep start, tau0 units");
    app.add_option("--t-hi", t_hi, "override sweep end, tau0 units");
    app.add_option("--t-steps", t_steps, "override sweep resolution");
    app.add_option("--out", out.out_dir, "output directory (default: .)");
    app.add_flag("--plots", out.plots, "also write SVG charts");

    auto* c_unc = app.add_subcommand(
        "uncertainties", "second moments and covariance determinant vs t");
    auto* c_irr = app.add_subcommand(
        "irrealism", "raw and rescaled irrealism on both axes vs t");
    auto* c_pat = app.add_subcommand(
        "pattern", "screen pattern snapshot with a fringe census");
    c_pat->add_option("--t", out.t, "snapshot time, tau0 units (default 0.49)");
    c_pat->add_option("--threshold", out.threshold,
                      "fringe visibility threshold in (0,1), default 0.1");
    auto* c_ext = app.add_subcommand(
        "extrema", "argmin/argmax table for every study quantity");
    auto* c_fit = app.add_subcommand(
        "fit", "irrealism-vs-visibility line fit on t in [0.3, 0.7] tau0");
    auto* c_swp = app.add_subcommand(
        "sweep", "one named quantity over the t grid");
    c_swp->add_option("--quantity", out.quantity,
                      "sxx2|spp2|sxp|dC|irrQ|irrP|irrQ_rescaled|"
                      "irrP_rescaled (default irrQ_rescaled)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        dsirr::RunConfig rc;
        if (!config_path.empty()) rc = dsirr::load_run_config(config_path);
        if (app.count("--gamma")) rc.experiment.gamma = gamma;
        if (app.count("--tau")) rc.tau_over_tau0 = tau;
        if (app.count("--dq")) rc.dq_m = dq;
        if (app.count("--dk")) rc.dk_per_m = dk;
        if (app.count("--t-lo")) rc.t_lo = t_lo;
        if (app.count("--t-hi")) rc.t_hi = t_hi;
        if (app.count("--t-steps")) rc.t_steps = t_steps;
        rc.validate();

        if (c_unc->parsed()) return dsirr::cmd_uncertainties(rc, out);
        if (c_irr->parsed()) return dsirr::cmd_irrealism(rc, out);
        if (c_pat->parsed()) return dsirr::cmd_pattern(rc, out);
        if (c_ext->parsed()) return dsirr::cmd_extrema(rc, out);
        if (c_fit->parsed()) return dsirr::cmd_fit(rc, out);
        if (c_swp->parsed()) return dsirr::cmd_sweep(rc, out);
        std::cerr << "error: no subcommand\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 2;
    }
}
