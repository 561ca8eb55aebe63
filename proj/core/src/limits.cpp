#include "filmdecay/limits.hpp"

#include <cmath>
#include <stdexcept>

namespace filmdecay {

namespace {

// Largest 2kz still evaluated by series. Terms through (2kz)^10 leave a
// relative truncation error ~6e-14 here, while the direct form has already
// recovered to ~1e-15, so the two branches agree well inside 1e-12 at the
// switchover.
constexpr double series_cut = 0.5;

void require_kz(double kz) {
    if (!(kz >= 0.0))
        throw std::invalid_argument("limits: kz must be >= 0");
}

// Shared mirror bracket (3/2) f_par w_par + 3 f_perp w_z; the electric rate
// uses its exact negation, so the magnetic/electric pair cancels identically.
double pc_bracket(const OrientationWeights& ori, double kz) {
    return 1.5 * f_parallel(kz) * ori.parallel() + 3.0 * f_perpendicular(kz) * ori.wz;
}

RateResult assemble_pc(double gamma_bar, const OrientationWeights& ori, double kz,
                       double occupation, double sign) {
    RateResult r;
    r.gamma0 = gamma_bar * ori.total();
    const double bracket = sign * pc_bracket(ori, kz);
    r.slab_correction = gamma_bar * bracket;
    r.n_th = occupation;
    r.total = (r.gamma0 + r.slab_correction) * (occupation + 1.0);
    r.I_or_J_par = sign * 0.75 * f_parallel(kz);
    r.I_or_J_perp = sign * 1.5 * f_perpendicular(kz);
    r.quad_error = 0.0;
    r.converged = true;
    return r;
}

} // namespace

double f_perpendicular(double kz) {
    require_kz(kz);
    const double x = 2.0 * kz;
    if (x < series_cut) {
        const double x2 = x * x;
        return -1.0 / 3.0 +
               x2 * (1.0 / 30.0 +
                     x2 * (-1.0 / 840.0 +
                           x2 * (1.0 / 45360.0 +
                                 x2 * (-1.0 / 3991680.0 + x2 * (1.0 / 518918400.0)))));
    }
    return (x * std::cos(x) - std::sin(x)) / (x * x * x);
}

double f_parallel(double kz) {
    require_kz(kz);
    const double x = 2.0 * kz;
    if (x < series_cut) {
        const double x2 = x * x;
        return 2.0 / 3.0 +
               x2 * (-2.0 / 15.0 +
                     x2 * (1.0 / 140.0 +
                           x2 * (-1.0 / 5670.0 +
                                 x2 * (1.0 / 399168.0 + x2 * (-1.0 / 43243200.0)))));
    }
    return std::sin(x) / x + f_perpendicular(kz);
}

RateResult pc_rate_magnetic(const TransitionSpec& spec, const OrientationWeights& ori,
                            double kz, const ThermalEnvironment& env,
                            const PhysicalConstants& pc) {
    require_kz(kz);
    ori.validate();
    if (spec.kind != TransitionKind::Magnetic)
        throw std::invalid_argument("pc_rate_magnetic: transition kind is not magnetic");
    return assemble_pc(gamma_bar_magnetic(spec, pc), ori, kz,
                       planck_occupation(spec, env, pc), +1.0);
}

RateResult pc_rate_electric(const TransitionSpec& spec, const OrientationWeights& ori,
                            double kz, const ThermalEnvironment& env,
                            const PhysicalConstants& pc) {
    require_kz(kz);
    ori.validate();
    if (spec.kind != TransitionKind::Electric)
        throw std::invalid_argument("pc_rate_electric: transition kind is not electric");
    return assemble_pc(gamma_bar_electric(spec, pc), ori, kz,
                       planck_occupation(spec, env, pc), -1.0);
}

double pc_ratio(TransitionKind kind, const OrientationWeights& ori, double kz) {
    require_kz(kz);
    ori.validate();
    const double sign = kind == TransitionKind::Magnetic ? 1.0 : -1.0;
    return 1.0 + sign * pc_bracket(ori, kz) / ori.total();
}

double near_field_ratio(TransitionKind kind, OrientationClass orientation_class,
                        double kz, LimitRegime* regime) {
    require_kz(kz);
    if (regime) {
        regime->kind = LimitRegime::Kind::NearField;
        regime->margin = 1.0;  // hard threshold, no extra margin
        regime->checks = {{"kz < 0.05", kz, 0.05, kz < 0.05}};
    }
    const double x2 = 4.0 * kz * kz;  // (2kz)^2
    if (kind == TransitionKind::Magnetic)
        return orientation_class == OrientationClass::Parallel ? 2.0 : x2 / 10.0;
    return orientation_class == OrientationClass::Parallel ? x2 / 5.0 : 2.0;
}

RateResult small_thickness_rate_magnetic(const TransitionSpec& spec,
                                         const OrientationWeights& ori,
                                         double k_delta, double k_lambdaL,
                                         double kH, double kz,
                                         const ThermalEnvironment& env,
                                         LimitRegime* regime, double margin,
                                         const PhysicalConstants& pc) {
    ori.validate();
    if (spec.kind != TransitionKind::Magnetic)
        throw std::invalid_argument("small_thickness_rate_magnetic: transition kind is not magnetic");
    if (!(k_delta > 0) || !(k_lambdaL > 0) || !(kH > 0) || !(kz > 0))
        throw std::invalid_argument("small_thickness_rate_magnetic: k_delta, k_lambdaL, kH, kz must be positive");
    if (!(margin >= 1.0))
        throw std::invalid_argument("small_thickness_rate_magnetic: margin must be >= 1");

    LimitRegime local;
    LimitRegime& reg = regime ? *regime : local;
    reg.kind = LimitRegime::Kind::SmallThickness;
    reg.margin = margin;
    reg.checks = {
        {"kH << (k delta)^2 / (k lambda_L)", kH, k_delta * k_delta / k_lambdaL,
         kH * margin <= k_delta * k_delta / k_lambdaL},
        {"kH << kz", kH, kz, kH * margin <= kz},
        {"kH << k lambda_L", kH, k_lambdaL, kH * margin <= k_lambdaL},
    };

    const double inv_kd2 = 1.0 / (k_delta * k_delta);
    const double c_par = (3.0 / 64.0) * inv_kd2 * (1.0 / k_lambdaL) * (kH / kz) * (kH / kz);
    const double c_perp = (3.0 / 64.0) * (k_lambdaL * inv_kd2) * kH / (kz * kz * kz);

    RateResult r;
    const double gamma_bar = gamma_bar_magnetic(spec, pc);
    r.gamma0 = gamma_bar * ori.total();
    r.slab_correction = gamma_bar * (ori.parallel() * c_par + ori.wz * c_perp);
    r.n_th = planck_occupation(spec, env, pc);
    r.total = (r.gamma0 + r.slab_correction) * (r.n_th + 1.0);
    r.I_or_J_par = 0.5 * c_par;
    r.I_or_J_perp = 0.5 * c_perp;
    r.quad_error = 0.0;
    r.converged = true;
    for (const auto& c : reg.checks)
        if (!c.satisfied) r.regime_flags.push_back("validity-warning: " + c.inequality);
    return r;
}

} // namespace filmdecay
