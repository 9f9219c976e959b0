#include "dsirr/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>

#include "dsirr/analysis.hpp"
#include "dsirr/csv.hpp"
#include "dsirr/fringes.hpp"
#include "dsirr/moments.hpp"
#include "dsirr/parallel.hpp"
#include "dsirr/svg.hpp"

namespace dsirr {

namespace {

namespace fs = std::filesystem;

std::string out_path(const OutputOptions& out, const std::string& name) {
    fs::path dir(out.out_dir.empty() ? "." : out.out_dir);
    fs::create_directories(dir);
    return (dir / name).string();
}

CsvWriter make_writer(const RunConfig& rc) {
    CsvWriter w;
    w.comment("config", run_config_json(rc));
    w.comment("units", "reduced: hbar = m = sigma0 = 1, t in units of tau0");
    return w;
}

void maybe_plot(const OutputOptions& out, const std::string& name,
                const std::vector<SvgSeries>& series, SvgOptions opt) {
    if (!out.plots) return;
    const std::string path = out_path(out, name);
    write_line_chart(path, series, opt);
    std::cout << "wrote " << path << "\n";
}

std::optional<Quantity> quantity_from_name(const std::string& name) {
    for (Quantity q : {Quantity::sxx2, Quantity::spp2, Quantity::sxp,
                       Quantity::dC, Quantity::irrQ, Quantity::irrP,
                       Quantity::irrQ_rescaled, Quantity::irrP_rescaled})
        if (name == quantity_name(q)) return q;
    return std::nullopt;
}

}  // namespace

int cmd_uncertainties(const RunConfig& rc, const OutputOptions& out) {
    rc.validate();
    const auto grid = rc.t_grid();

    std::vector<CovarianceTriple> cov(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        cov[i] = covariance_closed_form(
            slit_params(rc.experiment, grid[i], rc.tau_over_tau0));
    });

    CsvWriter w = make_writer(rc);
    w.header({"t_over_tau0", "sxx2", "spp2", "sxp", "dC"});
    for (std::size_t i = 0; i < grid.size(); ++i)
        w.row({grid[i], cov[i].sxx2, cov[i].spp2, cov[i].sxp, cov[i].dC});
    const std::string path = out_path(out, "uncertainties.csv");
    w.write_file(path);
    std::cout << "wrote " << path << " (" << grid.size() << " rows)\n";

    if (out.plots) {
        SvgSeries sx{"sxx2", grid, {}}, sp{"spp2", grid, {}},
            xp{"sxp", grid, {}}, dc{"dC", grid, {}};
        for (const auto& c : cov) {
            sx.y.push_back(c.sxx2);
            sp.y.push_back(c.spp2);
            xp.y.push_back(c.sxp);
            dc.y.push_back(c.dC);
        }
        SvgOptions opt;
        opt.title = "second moments vs time";
        opt.x_label = "t / tau0";
        opt.y_label = "reduced units";
        maybe_plot(out, "uncertainties.svg", {sx, sp, xp, dc}, opt);
    }
    return 0;
}

int cmd_irrealism(const RunConfig& rc, const OutputOptions& out) {
    rc.validate();
    const auto grid = rc.t_grid();
    const Resolution res = rc.resolution();

    struct Row {
        double irr_q, irr_p;
    };
    std::vector<Row> rows(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        const ScreenState s =
            ScreenState::create(rc.experiment, grid[i], rc.tau_over_tau0);
        rows[i] = {irrealism_Q(s, res), irrealism_P(s, res)};
    });

    CsvWriter w = make_writer(rc);
    w.header({"t_over_tau0", "irr_q", "irr_p", "irr_q_rescaled",
              "irr_p_rescaled"});
    for (std::size_t i = 0; i < grid.size(); ++i)
        w.row({grid[i], rows[i].irr_q, rows[i].irr_p,
               rescaled_irrealism(rows[i].irr_q, res, Axis::Q),
               rescaled_irrealism(rows[i].irr_p, res, Axis::P)});
    const std::string path = out_path(out, "irrealism.csv");
    w.write_file(path);
    std::cout << "wrote " << path << " (" << grid.size() << " rows)\n";

    if (out.plots) {
        SvgSeries q{"irr_q_rescaled", grid, {}}, p{"irr_p_rescaled", grid, {}};
        for (const auto& r : rows) {
            q.y.push_back(rescaled_irrealism(r.irr_q, res, Axis::Q));
            p.y.push_back(rescaled_irrealism(r.irr_p, res, Axis::P));
        }
        SvgOptions opt;
        opt.title = "rescaled irrealism vs time";
        opt.x_label = "t / tau0";
        opt.y_label = "nats";
        maybe_plot(out, "irrealism.svg", {q, p}, opt);
    }
    return 0;
}

int cmd_pattern(const RunConfig& rc, const OutputOptions& out) {
    rc.validate();
    double t = out.t;
    if (t < 1e-6) {
        std::cerr << "pattern: t clamped to 1e-6 tau0 (screen pattern needs "
                     "a positive flight time)\n";
        t = 1e-6;
    }
    if (!(out.threshold > 0.0 && out.threshold < 1.0))
        throw std::invalid_argument(
            "pattern: threshold must lie strictly between 0 and 1");

    const PacketParams p = slit_params(rc.experiment, t, rc.tau_over_tau0);
    const int fringes = count_fringes(p, out.threshold);

    const int n = 1001;
    const double half = 0.5 * std::abs(p.D) + 5.0 * p.B;
    CsvWriter w = make_writer(rc);
    w.comment("t_over_tau0", format_number(t));
    w.comment("visibility_threshold", format_number(out.threshold));
    w.comment("fringes_above_threshold", format_int(fringes));
    w.header({"x_over_sigma0", "intensity", "envelope", "relative",
              "visibility", "predictability"});
    std::vector<PatternSample> samples(n);
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
        const double x = -half + 2.0 * half * static_cast<double>(i) /
                                     static_cast<double>(n - 1);
        samples[i] = pattern_sample(p, x);
    });
    for (const auto& s : samples)
        w.row({s.x, s.intensity, s.envelope, s.relative, s.visibility,
               s.predictability});
    const std::string path = out_path(out, "pattern.csv");
    w.write_file(path);
    std::cout << "wrote " << path << " (" << n << " rows, " << fringes
              << " fringes above visibility " << format_number(out.threshold)
              << ")\n";

    if (out.plots) {
        SvgSeries in{"intensity", {}, {}}, en{"envelope", {}, {}};
        for (const auto& s : samples) {
            in.x.push_back(s.x);
            in.y.push_back(s.intensity);
            en.x.push_back(s.x);
            en.y.push_back(s.envelope);
        }
        SvgOptions opt;
        opt.title = "screen pattern at t = " + format_number(t) + " tau0";
        opt.x_label = "x / sigma0";
        opt.y_label = "intensity";
        maybe_plot(out, "pattern.svg", {in, en}, opt);
    }
    return 0;
}

int cmd_extrema(const RunConfig& rc, const OutputOptions& out) {
    rc.validate();
    const Resolution res = rc.resolution();

    const double min_lo = std::max(rc.t_lo, 0.1);
    const double min_hi = std::min(rc.t_hi, 1.0);
    const double max_hi = std::min(rc.t_hi, 3.0);
    if (!(min_hi > min_lo))
        throw std::invalid_argument(
            "extrema: the configured t window is too narrow for a minimum "
            "search");

    const Quantity quantities[] = {Quantity::sxx2,          Quantity::spp2,
                                   Quantity::sxp,           Quantity::dC,
                                   Quantity::irrQ_rescaled, Quantity::irrP_rescaled};

    CsvWriter w = make_writer(rc);
    w.header({"quantity", "kind", "t_star_over_tau0", "value", "bracket_lo",
              "bracket_hi"});

    int written = 0;
    for (Quantity q : quantities) {
        const Curve curve =
            make_curve(q, rc.experiment, rc.tau_over_tau0, res);

        std::optional<ExtremumReport> min_rep;
        try {
            min_rep = find_extremum(curve, ExtremumKind::minimum, min_lo,
                                    min_hi, 1e-4, q);
        } catch (const AnalysisError& e) {
            std::cerr << "extrema: minimum of " << quantity_name(q)
                      << " skipped: " << e.what() << "\n";
        }
        if (min_rep) {
            w.row_mixed({quantity_name(q), "min",
                         format_number(min_rep->t_star),
                         format_number(min_rep->value),
                         format_number(min_rep->bracket_lo),
                         format_number(min_rep->bracket_hi)});
            ++written;
        }

        // the covariance determinant grows without a turning point after the
        // focus, so a maximum row is not part of the table
        if (q == Quantity::dC) continue;

        if (!min_rep) {
            std::cerr << "extrema: maximum of " << quantity_name(q)
                      << " skipped: no minimum to anchor the bracket\n";
            continue;
        }
        try {
            const ExtremumReport rep = find_extremum(
                curve, ExtremumKind::maximum, min_rep->t_star, max_hi, 1e-4, q);
            w.row_mixed({quantity_name(q), "max", format_number(rep.t_star),
                         format_number(rep.value),
                         format_number(rep.bracket_lo),
                         format_number(rep.bracket_hi)});
            ++written;
        } catch (const AnalysisError& e) {
            std::cerr << "extrema: maximum of " << quantity_name(q)
                      << " skipped: " << e.what() << "\n";
        }
    }

    const std::string path = out_path(out, "extrema.csv");
    w.write_file(path);
    std::cout << "wrote " << path << " (" << written << " rows)\n";
    return 0;
}

int cmd_fit(const RunConfig& rc, const OutputOptions& out) {
    rc.validate();
    const Resolution res = rc.resolution();
    const FitResult fit = visibility_fit(rc.experiment, rc.tau_over_tau0,
                                         0.3, 0.7, 21, res);

    std::vector<std::pair<double, double>> pairs;
    pairs.reserve(fit.samples.size());
    for (const auto& s : fit.samples)
        pairs.emplace_back(s.visibility, s.irrealism);
    const MonotonicityReport mono = monotonicity_check(pairs);

    CsvWriter w = make_writer(rc);
    w.comment("fit_window_tau0", format_number(fit.window_lo) + " .. " +
                                     format_number(fit.window_hi));
    w.comment("c1", format_number(fit.c1));
    w.comment("c2", format_number(fit.c2));
    w.comment("residual_rms", format_number(fit.residual_rms));
    w.comment("monotonicity", verdict_name(mono.verdict));
    w.comment("rank_correlation", format_number(mono.rank_correlation));
    w.header({"t_over_tau0", "visibility", "irr_q_rescaled", "fitted",
              "residual"});
    for (const auto& s : fit.samples) {
        const double fitted = fit.c1 + fit.c2 * s.visibility;
        w.row({s.t, s.visibility, s.irrealism, fitted,
               s.irrealism - fitted});
    }
    const std::string path = out_path(out, "fit.csv");
    w.write_file(path);
    std::cout << "wrote " << path << "  irr_q ~ " << format_number(fit.c1)
              << " + " << format_number(fit.c2)
              << " V  (rms " << format_number(fit.residual_rms) << ", "
              << verdict_name(mono.verdict) << ")\n";

    if (out.plots) {
        std::vector<FitSample> by_v = fit.samples;
        std::sort(by_v.begin(), by_v.end(),
                  [](const FitSample& a, const FitSample& b) {
                      return a.visibility < b.visibility;
                  });
        SvgSeries data{"samples", {}, {}}, line{"fit", {}, {}};
        for (const auto& s : by_v) {
            data.x.push_back(s.visibility);
            data.y.push_back(s.irrealism);
            line.x.push_back(s.visibility);
            line.y.push_back(fit.c1 + fit.c2 * s.visibility);
        }
        SvgOptions opt;
        opt.title = "irrealism vs visibility";
        opt.x_label = "visibility at x = D";
        opt.y_label = "irr_q_rescaled (nats)";
        maybe_plot(out, "fit.svg", {data, line}, opt);
    }
    return 0;
}

int cmd_sweep(const RunConfig& rc, const OutputOptions& out) {
    rc.validate();
    const auto q = quantity_from_name(out.quantity);
    if (!q) {
        std::string valid;
        for (Quantity cand :
             {Quantity::sxx2, Quantity::spp2, Quantity::sxp, Quantity::dC,
              Quantity::irrQ, Quantity::irrP, Quantity::irrQ_rescaled,
              Quantity::irrP_rescaled}) {
            if (!valid.empty()) valid += ", ";
            valid += quantity_name(cand);
        }
        throw std::invalid_argument("sweep: unknown quantity \"" +
                                    out.quantity + "\" (valid: " + valid +
                                    ")");
    }

    const Curve curve =
        make_curve(*q, rc.experiment, rc.tau_over_tau0, rc.resolution());
    const auto rows = sweep(curve, rc.t_grid());

    CsvWriter w = make_writer(rc);
    w.comment("quantity", quantity_name(*q));
    w.header({"t_over_tau0", quantity_name(*q)});
    for (const auto& r : rows) w.row({r.t, r.value});
    const std::string name = std::string("sweep_") + quantity_name(*q);
    const std::string path = out_path(out, name + ".csv");
    w.write_file(path);
    std::cout << "wrote " << path << " (" << rows.size() << " rows)\n";

    if (out.plots) {
        SvgSeries s{quantity_name(*q), {}, {}};
        for (const auto& r : rows) {
            s.x.push_back(r.t);
            s.y.push_back(r.value);
        }
        SvgOptions opt;
        opt.title = std::string(quantity_name(*q)) + " vs time";
        opt.x_label = "t / tau0";
        opt.y_label = quantity_name(*q);
        maybe_plot(out, name + ".svg", {s}, opt);
    }
    return 0;
}

}  // namespace dsirr
