#pragma once
// CLI command implementations. Each command computes one study, writes CSV
// (and optional SVG) into out_dir, and prints a short summary to stdout.
// Output files are deterministic: rerunning a command byte-reproduces them.

#include <string>

#include "dsirr/run_config.hpp"

namespace dsirr {

struct OutputOptions {
    std::string out_dir = ".";
    bool plots = false;
    double t = 0.49;        // pattern snapshot time, tau0 units
    double threshold = 0.1; // fringe visibility threshold, in (0, 1)
    std::string quantity = "irrQ_rescaled";  // sweep target
};

// second moments and the covariance determinant over the t grid
int cmd_uncertainties(const RunConfig& rc, const OutputOptions& out);

// raw and rescaled irrealism on both axes over the t grid
int cmd_irrealism(const RunConfig& rc, const OutputOptions& out);

// screen pattern snapshot at out.t with the fringe census in the header
int cmd_pattern(const RunConfig& rc, const OutputOptions& out);

// argmin/argmax table for every study quantity
int cmd_extrema(const RunConfig& rc, const OutputOptions& out);

// irrealism-vs-visibility linear fit over the contraction window
int cmd_fit(const RunConfig& rc, const OutputOptions& out);

// single-quantity sweep over the t grid (quantity chosen by name)
int cmd_sweep(const RunConfig& rc, const OutputOptions& out);

}  // namespace dsirr
