// Complex permittivity models and the planar scattering coefficients:
// single-interface Fresnel amplitudes and their two-interface slab
// generalizations with multiple internal reflections.
#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "filmdecay/types.hpp"

namespace filmdecay {

using complexd = std::complex<double>;

// Thrown when a slab denominator 1 - r^2 e^{i 2 eta kH} collapses below
// 1e-300, which requires a lossless unit-modulus reflection (guided-mode
// resonance) -- excluded media.
class SingularSlabError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// Superconductor in the two-fluid picture: inductive screening length
// lambda_L plus dissipative skin depth delta (delta = inf encodes a loss-free
// condensate, e.g. T = 0).
struct TwoFluid {
    double lambda_L;  // [m]
    double delta;     // [m], may be inf
};

// Normal metal: the lambda_L -> inf limit of TwoFluid.
struct Drude {
    double delta;  // [m]
};

// Formal ideal-mirror limit. Carries no finite permittivity; rate evaluation
// dispatches to the closed forms instead of the quadrature path.
struct PerfectConductor {};

struct FixedEpsilon {
    complexd eps;  // Im(eps) >= 0 (passive)
};

struct MediumModel {
    std::variant<TwoFluid, Drude, PerfectConductor, FixedEpsilon> variant;
    // Optional pair-breaking gap frequency omega_g [rad/s]; the dielectric
    // model is trusted only well below it.
    std::optional<double> gap_frequency;

    void validate() const;
    bool is_perfect_conductor() const {
        return std::holds_alternative<PerfectConductor>(variant);
    }
};

// Gorter-Casimir state of a superconducting film: condensate fraction
// 1 - (T/Tc)^4, lambda_L(T) = lambda_L0 / sqrt(1 - (T/Tc)^4),
// delta(T) = delta_c (Tc/T)^2 where delta_c is the all-normal skin depth at
// the working frequency.
struct TwoFluidState {
    double T;          // [K]
    double Tc;         // [K]
    double lambda_L0;  // [m]
    double delta_c;    // [m]

    void validate() const {
        if (!(T >= 0 && Tc > 0 && lambda_L0 > 0 && delta_c > 0))
            throw std::invalid_argument("TwoFluidState: need T >= 0, Tc > 0, lambda_L0 > 0, delta_c > 0");
    }
};

// eps(omega) = 1 - 1/(k lambda_L)^2 + 2i/(k delta)^2 for TwoFluid,
// 1 + 2i/(k delta)^2 for Drude, the stored value for FixedEpsilon.
// PerfectConductor has no finite permittivity and throws
// std::invalid_argument ("use closed form").
complexd permittivity(const MediumModel& model, const TransitionSpec& spec);

// Temperature map: T < Tc gives TwoFluid with the Gorter-Casimir lengths
// (delta = inf at T = 0); T >= Tc gives Drude{delta_c}.
MediumModel two_fluid_at_temperature(const TwoFluidState& state);

// Validity diagnostics (currently: transition frequency vs gap frequency).
// Empty when nothing is suspect.
std::vector<std::string> medium_warnings(const MediumModel& model,
                                         const TransitionSpec& spec);

// Square root on the physical branch: Im >= 0 always, and Re >= 0 when the
// result is real. Makes e^{i 2 eta0 kz} and e^{i 2 eta kH} decaying.
complexd sqrt_physical(complexd z);

// Fresnel amplitudes (r_s, r_p) of a single vacuum/medium interface at
// dimensionless transverse wavenumber q: eta0 = sqrt(1 - q^2),
// eta = sqrt(eps - q^2), both on the Im >= 0 branch.
std::pair<complexd, complexd> fresnel(double q, complexd eps);

// Slab coefficients (C_N, C_M) for thickness kH (dimensionless): the p/s
// reflection amplitudes of the film including multiple internal reflections,
//   C = r (1 - E) / (1 - r^2 E),  E = e^{i 2 eta kH}.
// kH = inf returns exactly (r_p, r_s); kH = 0 returns exactly (0, 0).
std::pair<complexd, complexd> slab_coefficients(double q, complexd eps, double kH);

} // namespace filmdecay
