#include "filmdecay/medium.hpp"

#include <cmath>
#include <limits>

namespace filmdecay {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

void check_passive(complexd eps) {
    if (std::isnan(eps.real()) || std::isnan(eps.imag()))
        throw std::invalid_argument("permittivity: NaN");
    if (eps.imag() < 0)
        throw std::invalid_argument("permittivity: Im(eps) < 0 describes a gain medium, not supported");
}

} // namespace

void MediumModel::validate() const {
    if (auto* tf = std::get_if<TwoFluid>(&variant)) {
        if (!(tf->lambda_L > 0) || !(tf->delta > 0))
            throw std::invalid_argument("TwoFluid: lambda_L and delta must be positive (delta may be inf)");
    } else if (auto* dr = std::get_if<Drude>(&variant)) {
        if (!(dr->delta > 0) || std::isinf(dr->delta))
            throw std::invalid_argument("Drude: delta must be positive and finite");
    } else if (auto* fx = std::get_if<FixedEpsilon>(&variant)) {
        check_passive(fx->eps);
    }
    if (gap_frequency && !(*gap_frequency > 0))
        throw std::invalid_argument("MediumModel: gap_frequency must be positive");
}

complexd permittivity(const MediumModel& model, const TransitionSpec& spec) {
    model.validate();
    spec.validate();
    const double k = spec.k;
    if (auto* tf = std::get_if<TwoFluid>(&model.variant)) {
        const double klam = k * tf->lambda_L;
        const double inductive = 1.0 / (klam * klam);
        double lossy = 0.0;
        if (!std::isinf(tf->delta)) {
            const double kdel = k * tf->delta;
            lossy = 2.0 / (kdel * kdel);
        }
        return {1.0 - inductive, lossy};
    }
    if (auto* dr = std::get_if<Drude>(&model.variant)) {
        const double kdel = k * dr->delta;
        return {1.0, 2.0 / (kdel * kdel)};
    }
    if (auto* fx = std::get_if<FixedEpsilon>(&model.variant))
        return fx->eps;
    throw std::invalid_argument(
        "permittivity: perfect conductor has no finite permittivity; use closed form");
}

MediumModel two_fluid_at_temperature(const TwoFluidState& state) {
    state.validate();
    MediumModel model;
    if (state.T >= state.Tc) {
        model.variant = Drude{state.delta_c};
        return model;
    }
    const double t4 = std::pow(state.T / state.Tc, 4);
    const double lambda_L = state.lambda_L0 / std::sqrt(1.0 - t4);
    const double delta =
        state.T == 0.0 ? inf : state.delta_c * (state.Tc / state.T) * (state.Tc / state.T);
    model.variant = TwoFluid{lambda_L, delta};
    return model;
}

std::vector<std::string> medium_warnings(const MediumModel& model,
                                         const TransitionSpec& spec) {
    std::vector<std::string> warnings;
    if (model.gap_frequency && spec.omega >= 0.1 * *model.gap_frequency)
        warnings.push_back("transition frequency within a decade of the gap frequency; "
                           "two-fluid permittivity unreliable");
    return warnings;
}

complexd sqrt_physical(complexd z) {
    complexd r = std::sqrt(z);
    // std::sqrt maps onto Re >= 0; that already satisfies Im >= 0 except on
    // the branch cut handling of -0 imaginary parts.
    if (r.imag() < 0) r = -r;
    if (r.imag() == 0 && r.real() < 0) r = -r;
    return r;
}

std::pair<complexd, complexd> fresnel(double q, complexd eps) {
    // A vacuum half-space reflects nothing; at q = 1 the generic formula is
    // 0/0 there, so return the continuous limit directly.
    if (eps == complexd(1.0, 0.0))
        return {complexd(0.0, 0.0), complexd(0.0, 0.0)};
    const complexd eta0 = sqrt_physical(complexd(1.0 - q * q, 0.0));
    const complexd eta = sqrt_physical(eps - complexd(q * q, 0.0));
    const complexd rs = (eta0 - eta) / (eta0 + eta);
    const complexd rp = (eps * eta0 - eta) / (eps * eta0 + eta);
    return {rs, rp};
}

std::pair<complexd, complexd> slab_coefficients(double q, complexd eps, double kH) {
    if (!(kH >= 0))
        throw std::invalid_argument("slab_coefficients: kH must be >= 0");
    if (kH == 0.0)
        return {complexd(0.0, 0.0), complexd(0.0, 0.0)};
    auto [rs, rp] = fresnel(q, eps);
    if (std::isinf(kH))
        return {rp, rs};
    const complexd eta = sqrt_physical(eps - complexd(q * q, 0.0));
    const complexd E = std::exp(complexd(0.0, 2.0 * kH) * eta);
    auto slab = [&](complexd r) {
        const complexd den = 1.0 - r * r * E;
        if (std::abs(den) < 1e-300)
            throw SingularSlabError("slab_coefficients: resonant denominator |1 - r^2 E| < 1e-300");
        return r * (1.0 - E) / den;
    };
    return {slab(rp), slab(rs)};
}

} // namespace filmdecay
