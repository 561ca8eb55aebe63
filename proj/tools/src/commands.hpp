// Subcommand implementations behind the `filmdecay` binary. The command
// cores are plain functions over parsed options so tests can drive them
// without a process boundary.
#pragma once

#include <string>
#include <vector>

#include "problem.hpp"

namespace filmdecay::cli {

struct SweepOptions {
    RateOptions fixed;
    std::string axis;  // z | H | T | omega | kz
    double start = 0.0;
    double stop = 0.0;
    int points = 0;
    std::string spacing = "linear";
    std::string out = "-";
};

struct Fig2Options {
    std::string format = "csv";
    std::string out = "-";
};

// Worker count for sweep evaluation: FILMDECAY_THREADS caps (and 0/unset
// defaults to) the hardware concurrency.
unsigned worker_count(std::size_t rows);

std::vector<double> sweep_grid(double start, double stop, int points, const std::string& spacing);

// Curve abscissa: {0}, 249 log-spaced points in [1e-3, 1), 250 linear in
// [1, 10] — 500 in total.
std::vector<double> fig2_grid();

struct Fig2Row {
    double kz;
    double ratio_mixed;  // orientation (0, 1/2, 1/2)
    double ratio_perp;   // orientation (0, 0, 1)
};
std::vector<Fig2Row> fig2_rows();

int run_rate(const RateOptions& opts);
int run_sweep(const SweepOptions& opts);
int run_fig2(const Fig2Options& opts);

} // namespace filmdecay::cli
