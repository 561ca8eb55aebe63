// Flag record -> validated problem statement -> evaluated output row.
// Shared by the rate and sweep subcommands; sweeps re-evaluate the problem
// with one axis substituted per row.
#pragma once

#include <optional>
#include <string>

#include <filmdecay/limits.hpp>
#include <filmdecay/rates.hpp>

#include "output.hpp"

namespace filmdecay::cli {

// Raw flag values; `set` mirrors CLI11's count() so medium-group exclusivity
// and mode checks can run after parsing.
struct RateOptions {
    std::string kind;
    double freq = 0.0;
    std::string orient = "0,0,1";
    double z = 0.0;
    std::string H = "inf";
    double temp = 0.0;
    double lambda_L = 0.0;
    std::string delta;
    double eps_re = 1.0;
    double eps_im = 0.0;
    bool perfect_conductor = false;
    std::string two_fluid;  // "T,Tc,lambdaL0,deltaC"
    bool dimensionless = false;
    double kz = 0.0;
    std::string kH = "inf";
    double k_lambda_L = 0.0;
    std::string k_delta;
    double nbar = 0.0;
    double rel_tol = 0.0;
    std::string format = "csv";

    struct Present {
        bool freq = false, z = false, H = false, temp = false;
        bool lambda_L = false, delta = false;
        bool eps_re = false, eps_im = false;
        bool two_fluid = false;
        bool kz = false, kH = false, k_lambda_L = false, k_delta = false;
        bool nbar = false, rel_tol = false;
    } set;
};

// Fully validated inputs for one evaluation.
struct Problem {
    bool dimensionless = false;
    TransitionKind kind = TransitionKind::Magnetic;
    OrientationWeights ori;
    QuadratureConfig cfg;

    // physical mode
    std::optional<TransitionSpec> spec;
    MediumModel model{PerfectConductor{}, std::nullopt};
    ThermalEnvironment env;
    double z = 0.0;
    double H = infinite_thickness;
    std::optional<TwoFluidState> tf_base;  // retained for T sweeps

    // dimensionless mode
    bool pc = false;
    complexd eps{1.0, 0.0};
    double kz = 0.0;
    double kH = infinite_thickness;
    double nbar = 0.0;
};

double parse_length_or_inf(const std::string& text, const char* flag);
OrientationWeights parse_orientation(const std::string& text);

Problem build_problem(const RateOptions& opts);

// Evaluate and flatten. `swept` is the row's leading column (the axis value
// during sweeps; kz or z for single rates).
OutputRow evaluate_row(const Problem& p, double swept);

} // namespace filmdecay::cli
