// Thermal occupation and free-space decay rates.
#pragma once

#include "filmdecay/constants.hpp"
#include "filmdecay/types.hpp"

namespace filmdecay {

// Mean thermal photon number 1/(exp(hbar*omega/kB*T) - 1); exactly 0 at T = 0.
// Evaluated through expm1 so the Rayleigh-Jeans regime hbar*omega << kB*T
// keeps full relative accuracy.
double planck_occupation(const TransitionSpec& spec, const ThermalEnvironment& env,
                         const PhysicalConstants& pc = codata2018());

// Orientation-stripped free-space prefactors: the magnetic one is
// mu0*(muB*gS)^2*k^3/(3*pi*hbar) [1/s]; the electric one is
// mu0*c^2*k^3/(3*pi*hbar) per unit squared dipole matrix element [1/(s C^2 m^2)].
double gamma_bar_magnetic(const TransitionSpec& spec,
                          const PhysicalConstants& pc = codata2018());
double gamma_bar_electric(const TransitionSpec& spec,
                          const PhysicalConstants& pc = codata2018());

// Free-space rates: gamma_bar times the orientation total (S^2 resp. d^2).
// Throw std::invalid_argument when spec.kind does not match.
double gamma0_magnetic(const TransitionSpec& spec, const OrientationWeights& ori,
                       const PhysicalConstants& pc = codata2018());
double gamma0_electric(const TransitionSpec& spec, const OrientationWeights& ori,
                       const PhysicalConstants& pc = codata2018());

} // namespace filmdecay
