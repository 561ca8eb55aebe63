// Closed-form limiting results: ideal-mirror (perfect-conductor) magnetic and
// electric rates, their near-field asymptotics, and the thin-film expansion.
// These serve both as fast paths and as independent oracles for the
// quadrature path.
#pragma once

#include <string>
#include <vector>

#include "filmdecay/constants.hpp"
#include "filmdecay/core_model.hpp"
#include "filmdecay/types.hpp"

namespace filmdecay {

// Oscillatory distance functions of the mirror closed forms, argument kz
// (half the phase 2kz used internally):
//   f_perp(kz) = (2kz cos 2kz - sin 2kz) / (2kz)^3
//   f_par(kz)  = sin(2kz)/(2kz) + f_perp(kz)
// Evaluated by Taylor series for 2kz < 1/2 (the direct form loses ~10 digits
// to cancellation near zero); f_perp(0) = -1/3, f_par(0) = 2/3.
double f_parallel(double kz);
double f_perpendicular(double kz);

enum class OrientationClass { Parallel, Perpendicular };

struct RegimeCheck {
    std::string inequality;  // human-readable, e.g. "kH << kz"
    double lhs = 0.0;
    double rhs = 0.0;
    bool satisfied = false;
};

// Which limiting regime produced a value, and the inequality chain that
// justifies it - checked numerically with a margin factor, never silently
// assumed.
struct LimitRegime {
    enum class Kind { PerfectConductorClosedForm, NearField, SmallThickness };
    Kind kind = Kind::PerfectConductorClosedForm;
    double margin = 10.0;
    std::vector<RegimeCheck> checks;

    bool all_satisfied() const {
        for (const auto& c : checks)
            if (!c.satisfied) return false;
        return true;
    }
};

// Ideal-mirror rates, exact for all kz >= 0 (they are the lambda_L -> 0 limit
// of the film response). Magnetic:
//   total = gamma_bar (n + 1) [w_tot + (3/2) f_par w_par + 3 f_perp w_z]
// Electric: identical with the slab term negated. At kz = 0 the magnetic
// perpendicular (and electric parallel) rate vanishes.
RateResult pc_rate_magnetic(const TransitionSpec& spec, const OrientationWeights& ori,
                            double kz, const ThermalEnvironment& env,
                            const PhysicalConstants& pc = codata2018());
RateResult pc_rate_electric(const TransitionSpec& spec, const OrientationWeights& ori,
                            double kz, const ThermalEnvironment& env,
                            const PhysicalConstants& pc = codata2018());

// Dimensionless mirror ratio total / (gamma0 (n+1)) for arbitrary weights.
double pc_ratio(TransitionKind kind, const OrientationWeights& ori, double kz);

// Leading near-field (kz << 1) rate ratios at the mirror:
//   magnetic parallel -> 2,            magnetic perpendicular -> (2kz)^2/10,
//   electric parallel -> (2kz)^2/5,    electric perpendicular -> 2.
// kz < 0.05 is expected; outside it the value is still returned and the
// violation is recorded in *regime.
double near_field_ratio(TransitionKind kind, OrientationClass orientation_class,
                        double kz, LimitRegime* regime = nullptr);

// Thin lossy film at small thickness (magnetic transitions):
//   total = gamma_bar (n + 1) [w_tot + w_par c_par + w_z c_perp]
//   c_par  = (3/64) (1/(k delta)^2) (1/(k lambda_L)) (kH/kz)^2
//   c_perp = (3/64) (k lambda_L/(k delta)^2) (kH/(kz)^3)
// Validity requires H << delta^2/lambda_L, H << z and H << lambda_L, checked
// with `margin` and recorded in *regime; violations add a warning flag to the
// result but the value is still returned.
RateResult small_thickness_rate_magnetic(const TransitionSpec& spec,
                                         const OrientationWeights& ori,
                                         double k_delta, double k_lambdaL,
                                         double kH, double kz,
                                         const ThermalEnvironment& env,
                                         LimitRegime* regime = nullptr,
                                         double margin = 10.0,
                                         const PhysicalConstants& pc = codata2018());

} // namespace filmdecay
