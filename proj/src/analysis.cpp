#include "dsirr/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dsirr/fringes.hpp"
#include "dsirr/moments.hpp"
#include "dsirr/parallel.hpp"

namespace dsirr {

const char* quantity_name(Quantity q) {
    switch (q) {
        case Quantity::sxx2: return "sxx2";
        case Quantity::spp2: return "spp2";
        case Quantity::sxp: return "sxp";
        case Quantity::dC: return "dC";
        case Quantity::irrQ: return "irrQ";
        case Quantity::irrP: return "irrP";
        case Quantity::irrQ_rescaled: return "irrQ_rescaled";
        case Quantity::irrP_rescaled: return "irrP_rescaled";
    }
    return "?";
}

const char* verdict_name(MonotonicityVerdict v) {
    switch (v) {
        case MonotonicityVerdict::monotone_decreasing:
            return "monotone_decreasing";
        case MonotonicityVerdict::monotone_increasing:
            return "monotone_increasing";
        case MonotonicityVerdict::non_monotone: return "non_monotone";
    }
    return "?";
}

Curve make_curve(Quantity q, const ExperimentConfig& cfg, double tau,
                 const Resolution& res, BinMethod method) {
    switch (q) {
        case Quantity::sxx2:
            return [cfg, tau](double t) {
                return covariance_closed_form(slit_params(cfg, t, tau)).sxx2;
            };
        case Quantity::spp2:
            return [cfg, tau](double t) {
                return covariance_closed_form(slit_params(cfg, t, tau)).spp2;
            };
        case Quantity::sxp:
            return [cfg, tau](double t) {
                return covariance_closed_form(slit_params(cfg, t, tau)).sxp;
            };
        case Quantity::dC:
            return [cfg, tau](double t) {
                return covariance_closed_form(slit_params(cfg, t, tau)).dC;
            };
        case Quantity::irrQ:
            return [cfg, tau, res, method](double t) {
                return irrealism_Q(ScreenState::create(cfg, t, tau), res,
                                   method);
            };
        case Quantity::irrP:
            return [cfg, tau, res, method](double t) {
                return irrealism_P(ScreenState::create(cfg, t, tau), res,
                                   method);
            };
        case Quantity::irrQ_rescaled:
            return [cfg, tau, res, method](double t) {
                return rescaled_irrealism(
                    irrealism_Q(ScreenState::create(cfg, t, tau), res, method),
                    res, Axis::Q);
            };
        case Quantity::irrP_rescaled:
            return [cfg, tau, res, method](double t) {
                return rescaled_irrealism(
                    irrealism_P(ScreenState::create(cfg, t, tau), res, method),
                    res, Axis::P);
            };
    }
    throw AnalysisError("make_curve: unknown quantity");
}

namespace {

// bounded Brent minimizer (golden section with parabolic steps)
double brent_min(const Curve& f, double a, double b, double tol) {
    const double gold = 0.5 * (3.0 - std::sqrt(5.0));
    double x = a + gold * (b - a);
    double w = x, v = x;
    double fx = f(x), fw = fx, fv = fx;
    double d = 0.0, e = 0.0;
    for (int it = 0; it < 200; ++it) {
        const double m = 0.5 * (a + b);
        const double tol1 = tol;  // absolute step tolerance
        const double tol2 = 2.0 * tol1;
        if (std::abs(x - m) <= tol2 - 0.5 * (b - a)) break;
        bool golden = true;
        if (std::abs(e) > tol1) {
            // parabolic fit through x, v, w
            const double r = (x - w) * (fx - fv);
            double q = (x - v) * (fx - fw);
            double p = (x - v) * q - (x - w) * r;
            q = 2.0 * (q - r);
            if (q > 0.0) p = -p;
            q = std::abs(q);
            const double etmp = e;
            e = d;
            if (std::abs(p) < std::abs(0.5 * q * etmp) && p > q * (a - x) &&
                p < q * (b - x)) {
                d = p / q;
                const double u = x + d;
                if (u - a < tol2 || b - u < tol2)
                    d = (m > x) ? tol1 : -tol1;
                golden = false;
            }
        }
        if (golden) {
            e = (x < m) ? b - x : a - x;
            d = gold * e;
        }
        const double u = (std::abs(d) >= tol1)
                             ? x + d
                             : x + ((d > 0.0) ? tol1 : -tol1);
        const double fu = f(u);
        if (fu <= fx) {
            if (u < x) b = x; else a = x;
            v = w; fv = fw;
            w = x; fw = fx;
            x = u; fx = fu;
        } else {
            if (u < x) a = u; else b = u;
            if (fu <= fw || w == x) {
                v = w; fv = fw;
                w = u; fw = fu;
            } else if (fu <= fv || v == x || v == w) {
                v = u; fv = fu;
            }
        }
    }
    return x;
}

}  // namespace

ExtremumReport find_extremum(const Curve& curve, ExtremumKind kind,
                             double t_lo, double t_hi, double tol,
                             Quantity label, int prescan_points) {
    if (!(t_hi > t_lo)) throw AnalysisError("find_extremum: empty bracket");
    if (prescan_points < 8)
        throw AnalysisError("find_extremum: pre-scan too small");

    const double sign = (kind == ExtremumKind::minimum) ? 1.0 : -1.0;
    const int n = prescan_points;
    std::vector<double> ts(n), vs(n);
    for (int i = 0; i < n; ++i)
        ts[i] = t_lo + (t_hi - t_lo) * i / (n - 1);
    parallel_for(static_cast<std::size_t>(n),
                 [&](std::size_t i) { vs[i] = sign * curve(ts[i]); });

    // interior strict local minima of the signed curve
    std::vector<int> interior;
    for (int i = 1; i + 1 < n; ++i)
        if (vs[i] < vs[i - 1] && vs[i] < vs[i + 1]) interior.push_back(i);

    if (interior.size() >= 2)
        throw AnalysisError(std::string("find_extremum: bracket for ") +
                            quantity_name(label) +
                            " is not unimodal (multiple interior extrema)");
    if (interior.empty())
        throw AnalysisError(std::string("find_extremum: ") +
                            quantity_name(label) +
                            " is extremal at a bracket endpoint");

    const int i = interior.front();
    auto signed_curve = [&](double t) { return sign * curve(t); };
    const double t_star = brent_min(signed_curve, ts[i - 1], ts[i + 1], tol);

    ExtremumReport rep;
    rep.quantity = label;
    rep.kind = kind;
    rep.t_star = t_star;
    rep.value = curve(t_star);  // re-evaluated, bit-identical to the curve
    rep.bracket_lo = t_lo;
    rep.bracket_hi = t_hi;
    rep.tol = tol;
    return rep;
}

std::vector<SweepRow> sweep(const Curve& curve,
                            const std::vector<double>& t_grid) {
    for (std::size_t i = 1; i < t_grid.size(); ++i)
        if (!(t_grid[i] > t_grid[i - 1]))
            throw AnalysisError("sweep: t_grid must be strictly ascending");
    std::vector<SweepRow> rows(t_grid.size());
    parallel_for(t_grid.size(), [&](std::size_t i) {
        rows[i] = {t_grid[i], curve(t_grid[i])};
    });
    return rows;
}

FitResult fit_line(const std::vector<FitSample>& samples) {
    const std::size_t n = samples.size();
    if (n < 2) throw AnalysisError("fit_line: need at least 2 samples");
    double sv = 0.0, sy = 0.0;
    for (const auto& s : samples) {
        sv += s.visibility;
        sy += s.irrealism;
    }
    const double vbar = sv / static_cast<double>(n);
    const double ybar = sy / static_cast<double>(n);
    double svv = 0.0, svy = 0.0, sv2 = 0.0;
    for (const auto& s : samples) {
        svv += (s.visibility - vbar) * (s.visibility - vbar);
        svy += (s.visibility - vbar) * (s.irrealism - ybar);
        sv2 += s.visibility * s.visibility;
    }
    // guard against centering dust when every visibility is the same value
    if (!(svv > 1e-20 * sv2))
        throw AnalysisError(
            "fit_line: degenerate design matrix (all visibilities equal)");
    FitResult r;
    r.c2 = svy / svv;
    r.c1 = ybar - r.c2 * vbar;
    double ss = 0.0;
    for (const auto& s : samples) {
        const double res = s.irrealism - (r.c1 + r.c2 * s.visibility);
        ss += res * res;
    }
    r.residual_rms = std::sqrt(ss / static_cast<double>(n));
    r.samples = samples;
    return r;
}

FitResult visibility_fit(const ExperimentConfig& cfg, double tau,
                         double window_lo, double window_hi, int n_samples,
                         const Resolution& res, bool rescaled,
                         BinMethod method) {
    if (!(window_hi > window_lo))
        throw AnalysisError("visibility_fit: empty window");
    if (n_samples < 5)
        throw AnalysisError("visibility_fit: need at least 5 samples");

    std::vector<FitSample> samples(static_cast<std::size_t>(n_samples));
    parallel_for(samples.size(), [&](std::size_t i) {
        const double t =
            window_lo + (window_hi - window_lo) * static_cast<double>(i) /
                            static_cast<double>(n_samples - 1);
        const PacketParams p = slit_params(cfg, t, tau);
        const ScreenState state = ScreenState::create(p);
        double irr = irrealism_Q(state, res, method);
        if (rescaled) irr = rescaled_irrealism(irr, res, Axis::Q);
        samples[i] = {t, visibility(p, p.D), irr};
    });

    FitResult r = fit_line(samples);
    r.window_lo = window_lo;
    r.window_hi = window_hi;
    return r;
}

namespace {
// average ranks (ties share the mean rank)
std::vector<double> average_ranks(const std::vector<double>& v) {
    const std::size_t n = v.size();
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return v[a] < v[b]; });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && v[idx[j + 1]] == v[idx[i]]) ++j;
        const double r = 0.5 * (static_cast<double>(i) +
                                static_cast<double>(j)) + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[idx[k]] = r;
        i = j + 1;
    }
    return ranks;
}

double pearson(const std::vector<double>& a, const std::vector<double>& b) {
    const std::size_t n = a.size();
    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= static_cast<double>(n);
    mb /= static_cast<double>(n);
    double saa = 0.0, sbb = 0.0, sab = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        saa += (a[i] - ma) * (a[i] - ma);
        sbb += (b[i] - mb) * (b[i] - mb);
        sab += (a[i] - ma) * (b[i] - mb);
    }
    if (saa <= 0.0 || sbb <= 0.0) return 0.0;
    return sab / std::sqrt(saa * sbb);
}
}  // namespace

MonotonicityReport monotonicity_check(
    const std::vector<std::pair<double, double>>& samples) {
    const std::size_t n = samples.size();
    if (n < 3) throw AnalysisError("monotonicity_check: need >= 3 samples");

    std::vector<double> vis(n), irr(n);
    for (std::size_t i = 0; i < n; ++i) {
        vis[i] = samples[i].first;
        irr[i] = samples[i].second;
    }

    MonotonicityReport rep;
    rep.rank_correlation = pearson(average_ranks(vis), average_ranks(irr));

    // order by visibility, stable in original index
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return vis[a] < vis[b]; });

    bool any_up = false, any_down = false, strict = true;
    for (std::size_t i = 1; i < n; ++i) {
        const int a = idx[i - 1], b = idx[i];
        if (vis[a] == vis[b]) {
            if (irr[a] != irr[b]) rep.offending.emplace_back(a, b);
            strict = false;
            continue;
        }
        if (irr[b] > irr[a]) any_up = true;
        else if (irr[b] < irr[a]) any_down = true;
        else strict = false;  // tied irrealism across distinct visibilities
    }

    if (!rep.offending.empty() || !strict || (any_up && any_down))
        rep.verdict = MonotonicityVerdict::non_monotone;
    else if (any_down && !any_up)
        rep.verdict = MonotonicityVerdict::monotone_decreasing;
    else if (any_up && !any_down)
        rep.verdict = MonotonicityVerdict::monotone_increasing;
    else
        rep.verdict = MonotonicityVerdict::non_monotone;
    return rep;
}

}  // namespace dsirr
