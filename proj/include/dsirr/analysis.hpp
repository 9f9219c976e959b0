#pragma once
// Time-axis extremum search over the model curves, curve sweeps, the
// irrealism-visibility linear fit, and the monotonicity verdict.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dsirr/config.hpp"
#include "dsirr/irrealism.hpp"

namespace dsirr {

struct AnalysisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Quantity {
    sxx2,
    spp2,
    sxp,
    dC,
    irrQ,
    irrP,
    irrQ_rescaled,
    irrP_rescaled
};

const char* quantity_name(Quantity q);

enum class ExtremumKind { minimum, maximum };

struct ExtremumReport {
    Quantity quantity;
    ExtremumKind kind;
    double t_star;      // tau0 units
    double value;       // curve(t_star), re-evaluated
    double bracket_lo;  // the bracket the search was asked for
    double bracket_hi;
    double tol;
};

using Curve = std::function<double(double)>;

// curve for a named quantity at fixed (config, tau, resolution)
Curve make_curve(Quantity q, const ExperimentConfig& cfg, double tau,
                 const Resolution& res,
                 BinMethod method = BinMethod::automatic);

// Golden-section/parabolic scalar search preceded by a 64-point unimodality
// pre-scan. Errors when the pre-scan sees two or more interior extrema of the
// requested kind, or when the extremum sits on a bracket endpoint.
ExtremumReport find_extremum(const Curve& curve, ExtremumKind kind,
                             double t_lo, double t_hi, double tol = 1e-4,
                             Quantity label = Quantity::sxx2,
                             int prescan_points = 64);

struct SweepRow {
    double t;
    double value;
};

// pure map over an ascending grid; rows in grid order (grid evaluation may be
// concurrent, collection is ordered)
std::vector<SweepRow> sweep(const Curve& curve,
                            const std::vector<double>& t_grid);

struct FitSample {
    double t;           // tau0 units
    double visibility;  // V at x = D(t)
    double irrealism;   // rescaled position irrealism by default
};

struct FitResult {
    double c1 = 0.0;
    double c2 = 0.0;
    double residual_rms = 0.0;
    std::vector<FitSample> samples;
    double window_lo = 0.0;
    double window_hi = 0.0;
};

// closed-form two-parameter least squares irrealism ~ c1 + c2 * visibility
// over samples; throws AnalysisError on a degenerate design matrix
FitResult fit_line(const std::vector<FitSample>& samples);

// sample the window uniformly, take V(x = D(t)) and the (rescaled by default)
// position irrealism, and fit
FitResult visibility_fit(const ExperimentConfig& cfg, double tau,
                         double window_lo, double window_hi, int n_samples,
                         const Resolution& res, bool rescaled = true,
                         BinMethod method = BinMethod::automatic);

enum class MonotonicityVerdict {
    monotone_decreasing,
    monotone_increasing,
    non_monotone
};

const char* verdict_name(MonotonicityVerdict v);

struct MonotonicityReport {
    MonotonicityVerdict verdict;
    double rank_correlation;  // Spearman, average ranks
    // pairs of original sample indices sharing a visibility value but
    // disagreeing on irrealism (forces non_monotone)
    std::vector<std::pair<int, int>> offending;
};

// samples are (visibility, irrealism) pairs; needs >= 3
MonotonicityReport monotonicity_check(
    const std::vector<std::pair<double, double>>& samples);

}  // namespace dsirr
