#include "filmdecay/core_model.hpp"

#include <cmath>

namespace filmdecay {

double planck_occupation(const TransitionSpec& spec, const ThermalEnvironment& env,
                         const PhysicalConstants& pc) {
    spec.validate(pc);
    env.validate();
    if (env.T == 0.0) return 0.0;
    const double x = pc.hbar * spec.omega / (pc.kB * env.T);
    return 1.0 / std::expm1(x);  // expm1 overflows to inf for large x -> 0
}

double gamma_bar_magnetic(const TransitionSpec& spec, const PhysicalConstants& pc) {
    spec.validate(pc);
    const double m = pc.muB * pc.gS;
    return pc.mu0 * m * m * spec.k * spec.k * spec.k / (3.0 * std::numbers::pi * pc.hbar);
}

double gamma_bar_electric(const TransitionSpec& spec, const PhysicalConstants& pc) {
    spec.validate(pc);
    return pc.mu0 * pc.c * pc.c * spec.k * spec.k * spec.k /
           (3.0 * std::numbers::pi * pc.hbar);
}

double gamma0_magnetic(const TransitionSpec& spec, const OrientationWeights& ori,
                       const PhysicalConstants& pc) {
    if (spec.kind != TransitionKind::Magnetic)
        throw std::invalid_argument("gamma0_magnetic: transition kind is not Magnetic");
    ori.validate();
    return gamma_bar_magnetic(spec, pc) * ori.total();
}

double gamma0_electric(const TransitionSpec& spec, const OrientationWeights& ori,
                       const PhysicalConstants& pc) {
    if (spec.kind != TransitionKind::Electric)
        throw std::invalid_argument("gamma0_electric: transition kind is not Electric");
    ori.validate();
    return gamma_bar_electric(spec, pc) * ori.total();
}

} // namespace filmdecay
