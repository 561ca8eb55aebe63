// Physical constants (SI). Values are CODATA 2018; h, kB, c, e are exact by
// the 2019 SI redefinition. Treated as immutable after construction.
#pragma once

#include <numbers>
#include <stdexcept>

namespace filmdecay {

struct PhysicalConstants {
    double mu0;   // vacuum permeability [H/m]
    double hbar;  // reduced Planck constant [J s]
    double kB;    // Boltzmann constant [J/K]
    double c;     // speed of light [m/s]
    double muB;   // Bohr magneton [J/T]
    double gS;    // electron spin g-factor, dimensionless (|g| ~ 2)
    double e;     // elementary charge [C]
    double m_e;   // electron mass [kg]

    void validate() const {
        if (!(mu0 > 0 && hbar > 0 && kB > 0 && c > 0 && muB > 0 && gS > 0 &&
              e > 0 && m_e > 0))
            throw std::invalid_argument("PhysicalConstants: all entries must be strictly positive");
    }
};

// gS defaults to 2 (configurable; CODATA |g_e| = 2.00231930436256).
inline PhysicalConstants codata2018() {
    return PhysicalConstants{
        1.25663706212e-6,
        6.62607015e-34 / (2.0 * std::numbers::pi),
        1.380649e-23,
        299792458.0,
        9.2740100783e-24,
        2.0,
        1.602176634e-19,
        9.1093837015e-31,
    };
}

} // namespace filmdecay
