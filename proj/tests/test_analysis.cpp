#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"

#include "dsirr/analysis.hpp"
#include "helpers.hpp"

using namespace dsirr;

TEST_CASE("extremum search on analytic curves") {
    SUBCASE("parabola minimum recovered to the requested tolerance") {
        const Curve f = [](double t) { return (t - 0.3) * (t - 0.3) + 2.0; };
        const ExtremumReport r =
            find_extremum(f, ExtremumKind::minimum, 0.1, 1.0, 1e-4);
        CHECK(std::abs(r.t_star - 0.3) < 1e-4);
        CHECK(r.value == doctest::Approx(2.0).epsilon(1e-8));
        CHECK(r.bracket_lo == 0.1);
        CHECK(r.bracket_hi == 1.0);
    }
    SUBCASE("maximum via the same machinery") {
        const Curve f = [](double t) { return -(t - 0.7) * (t - 0.7); };
        const ExtremumReport r =
            find_extremum(f, ExtremumKind::maximum, 0.0, 2.0, 1e-5);
        CHECK(std::abs(r.t_star - 0.7) < 1e-5);
    }
    SUBCASE("several interior extrema are refused") {
        const Curve f = [](double t) { return std::sin(10.0 * t); };
        CHECK_THROWS_AS((void)find_extremum(f, ExtremumKind::minimum, 0.0,
                                            2.0, 1e-4),
                        AnalysisError);
    }
    SUBCASE("monotone curves are refused, not clamped to an endpoint") {
        const Curve f = [](double t) { return 3.0 * t; };
        CHECK_THROWS_AS((void)find_extremum(f, ExtremumKind::minimum, 0.1,
                                            1.0, 1e-4),
                        AnalysisError);
        CHECK_THROWS_AS((void)find_extremum(f, ExtremumKind::maximum, 0.1,
                                            1.0, 1e-4),
                        AnalysisError);
    }
    SUBCASE("reported value re-evaluates the curve at the reported time") {
        const Curve f = [](double t) {
            return std::cos(t) + 0.1 * t * t;
        };
        const ExtremumReport r =
            find_extremum(f, ExtremumKind::minimum, 1.0, 5.0, 1e-6);
        CHECK(r.value == f(r.t_star));  // bit-identical by construction
    }
}

TEST_CASE("model-curve extrema are bracket-stable") {
    const ExperimentConfig cfg = testutil::neutron_gamma(-1.0);
    const Curve spp = make_curve(Quantity::spp2, cfg, 18.0,
                                 Resolution::coarse_apparatus(cfg));
    const ExtremumReport a =
        find_extremum(spp, ExtremumKind::minimum, 0.1, 1.0, 1e-6);
    const ExtremumReport b =
        find_extremum(spp, ExtremumKind::minimum, 0.11, 0.9, 1e-6);
    CHECK(std::abs(a.t_star - 0.5) < 1e-5);
    CHECK(std::abs(a.t_star - b.t_star) < 1e-5);
}

TEST_CASE("curves without the requested turning point say so") {
    const ExperimentConfig cfg = testutil::neutron_gamma(-1.0);
    const Resolution res = Resolution::coarse_apparatus(cfg);
    // the determinant leaves its floor monotonically: no interior maximum
    const Curve dc = make_curve(Quantity::dC, cfg, 18.0, res);
    CHECK_THROWS_AS((void)find_extremum(dc, ExtremumKind::maximum, 0.6, 3.0,
                                        1e-4),
                    AnalysisError);
    // without initial correlation the position spread only grows
    const Curve sxx =
        make_curve(Quantity::sxx2, testutil::neutron_gamma(0.0), 18.0, res);
    CHECK_THROWS_AS((void)find_extremum(sxx, ExtremumKind::minimum, 0.1, 1.0,
                                        1e-4),
                    AnalysisError);
}

TEST_CASE("sweep evaluates exactly the requested grid") {
    const Curve f = [](double t) { return t * t; };
    const std::vector<double> grid{0.1, 0.2, 0.7, 1.0};
    const auto rows = sweep(f, grid);
    REQUIRE(rows.size() == 4);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].t == grid[i]);
        CHECK(rows[i].value == f(grid[i]));
    }
    CHECK(sweep(f, {0.3}).size() == 1);
    CHECK_THROWS_AS((void)sweep(f, {0.3, 0.2}), AnalysisError);
}

TEST_CASE("line fit on exact and noisy designs") {
    SUBCASE("an exact line is recovered exactly") {
        std::vector<FitSample> samples;
        for (int i = 0; i < 21; ++i) {
            const double v = 0.05 * i;
            samples.push_back({0.3 + 0.02 * i, v, 2.05 - 0.91 * v});
        }
        const FitResult r = fit_line(samples);
        CHECK(r.c1 == doctest::Approx(2.05).epsilon(1e-12));
        CHECK(r.c2 == doctest::Approx(-0.91).epsilon(1e-12));
        CHECK(r.residual_rms < 1e-12);
    }
    SUBCASE("sample order does not matter") {
        std::vector<FitSample> samples;
        for (int i = 0; i < 15; ++i) {
            const double v = 0.06 * i;
            samples.push_back(
                {0.0, v, 1.0 - 0.5 * v + 0.01 * std::sin(3.0 * i)});
        }
        const FitResult fwd = fit_line(samples);
        std::reverse(samples.begin(), samples.end());
        const FitResult rev = fit_line(samples);
        CHECK(fwd.c1 == doctest::Approx(rev.c1).epsilon(1e-12));
        CHECK(fwd.c2 == doctest::Approx(rev.c2).epsilon(1e-12));
        CHECK(fwd.residual_rms ==
              doctest::Approx(rev.residual_rms).epsilon(1e-12));
    }
    SUBCASE("the fitted line passes through the sample centroid") {
        std::vector<FitSample> samples;
        double vbar = 0.0, ybar = 0.0;
        for (int i = 0; i < 9; ++i) {
            const double v = 0.1 + 0.09 * i;
            const double y = 1.7 - 0.6 * v + 0.02 * ((i % 3) - 1);
            samples.push_back({0.0, v, y});
            vbar += v;
            ybar += y;
        }
        vbar /= 9.0;
        ybar /= 9.0;
        const FitResult r = fit_line(samples);
        CHECK(r.c1 + r.c2 * vbar == doctest::Approx(ybar).epsilon(1e-12));
    }
    SUBCASE("a vertical design has no line") {
        std::vector<FitSample> samples(6, FitSample{0.0, 0.4, 1.0});
        for (int i = 0; i < 6; ++i) samples[i].irrealism += 0.1 * i;
        CHECK_THROWS_AS((void)fit_line(samples), AnalysisError);
    }
    CHECK_THROWS_AS((void)fit_line({}), AnalysisError);
}

TEST_CASE("monotonicity verdicts") {
    using P = std::pair<double, double>;
    SUBCASE("strictly decreasing in visibility") {
        const MonotonicityReport r = monotonicity_check(
            {P{0.1, 2.0}, P{0.5, 1.5}, P{0.9, 1.1}, P{0.3, 1.7}});
        CHECK(r.verdict == MonotonicityVerdict::monotone_decreasing);
        CHECK(r.rank_correlation == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK(r.offending.empty());
    }
    SUBCASE("strictly increasing") {
        const MonotonicityReport r =
            monotonicity_check({P{0.1, 1.0}, P{0.4, 1.4}, P{0.8, 2.0}});
        CHECK(r.verdict == MonotonicityVerdict::monotone_increasing);
        CHECK(r.rank_correlation == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("a bump breaks monotonicity") {
        const MonotonicityReport r = monotonicity_check(
            {P{0.1, 1.0}, P{0.4, 2.0}, P{0.8, 1.5}});
        CHECK(r.verdict == MonotonicityVerdict::non_monotone);
        CHECK(std::abs(r.rank_correlation) < 1.0);
    }
    SUBCASE("equal visibilities with different irrealism are flagged") {
        const MonotonicityReport r = monotonicity_check(
            {P{0.2, 1.8}, P{0.5, 1.4}, P{0.5, 1.6}, P{0.9, 1.0}});
        CHECK(r.verdict == MonotonicityVerdict::non_monotone);
        REQUIRE(r.offending.size() == 1);
        CHECK(r.offending[0].first == 1);
        CHECK(r.offending[0].second == 2);
    }
}

TEST_CASE("full irrealism-visibility fit, pinned against the reference run") {
    const ExperimentConfig cfg = testutil::neutron_gamma(-1.0);
    const Resolution res = Resolution::coarse_apparatus(cfg);
    const FitResult fit = visibility_fit(cfg, 18.0, 0.3, 0.7, 21, res);
    REQUIRE(fit.samples.size() == 21);
    CHECK(fit.c1 == doctest::Approx(1.884280122063042).epsilon(1e-6));
    CHECK(fit.c2 == doctest::Approx(-0.7094350733422751).epsilon(1e-6));
    CHECK(fit.residual_rms < 0.05);

    // visibility endpoints of the window, straight from the closed form
    CHECK(fit.samples.front().visibility ==
          doctest::Approx(0.015725653438132193).epsilon(1e-9));
    CHECK(fit.samples.back().visibility ==
          doctest::Approx(0.0028208153715812783).epsilon(1e-9));

    std::vector<std::pair<double, double>> pairs;
    for (const auto& s : fit.samples)
        pairs.emplace_back(s.visibility, s.irrealism);
    const MonotonicityReport mono = monotonicity_check(pairs);
    CHECK(mono.verdict == MonotonicityVerdict::monotone_decreasing);
    CHECK(mono.rank_correlation == doctest::Approx(-1.0).epsilon(1e-12));
}
