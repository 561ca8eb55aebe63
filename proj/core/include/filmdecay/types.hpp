// Domain types shared across the library: transition description, orientation
// weights, thermal environment, and the assembled rate result.
#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "filmdecay/constants.hpp"

namespace filmdecay {

enum class TransitionKind { Magnetic, Electric };

// Angular frequency, vacuum wavenumber k = omega/c and wavelength 2*pi/k.
// Construct through from_omega so the derived fields stay consistent.
struct TransitionSpec {
    double omega;   // [rad/s]
    double k;       // [1/m]
    double lambda;  // [m]
    TransitionKind kind;

    static TransitionSpec from_omega(double omega, TransitionKind kind,
                                     const PhysicalConstants& pc = codata2018()) {
        if (!(omega > 0))
            throw std::invalid_argument("TransitionSpec: omega must be > 0");
        TransitionSpec s{omega, omega / pc.c, 0.0, kind};
        s.lambda = 2.0 * std::numbers::pi / s.k;
        return s;
    }

    // Linear frequency in Hz.
    static TransitionSpec from_frequency(double nu, TransitionKind kind,
                                         const PhysicalConstants& pc = codata2018()) {
        return from_omega(2.0 * std::numbers::pi * nu, kind, pc);
    }

    void validate(const PhysicalConstants& pc = codata2018()) const {
        if (!(omega > 0))
            throw std::invalid_argument("TransitionSpec: omega must be > 0");
        if (std::abs(k * pc.c - omega) > 8.0 * std::numeric_limits<double>::epsilon() * omega)
            throw std::invalid_argument("TransitionSpec: k*c != omega");
        if (std::abs(lambda * k - 2.0 * std::numbers::pi) >
            8.0 * std::numeric_limits<double>::epsilon() * 2.0 * std::numbers::pi)
            throw std::invalid_argument("TransitionSpec: lambda*k != 2*pi");
    }
};

// Squared magnitudes of the three Cartesian matrix elements. Only squared
// components enter the planar-slab rates: the scattering Green tensor at
// coincident points is diagonal, so cross terms contribute nothing.
struct OrientationWeights {
    double wx = 0, wy = 0, wz = 0;

    double total() const { return wx + wy + wz; }
    double parallel() const { return wx + wy; }

    void validate() const {
        if (!(wx >= 0 && wy >= 0 && wz >= 0))
            throw std::invalid_argument("OrientationWeights: components must be >= 0");
        if (!(total() > 0) || !std::isfinite(total()))
            throw std::invalid_argument("OrientationWeights: total must be finite and > 0");
    }
};

// Temperature of the body the atom faces; T = 0 means zero occupation.
struct ThermalEnvironment {
    double T = 0;  // [K]

    void validate() const {
        if (!(T >= 0))
            throw std::invalid_argument("ThermalEnvironment: T must be >= 0");
    }
};

// Full decomposition of one rate evaluation.
//   total = (gamma0 + slab_correction) * (n_th + 1)
// I_or_J_par / I_or_J_perp are the dimensionless orientation-resolved slab
// integrals; quad_error is the quadrature error estimate at the level of the
// dimensionless rate ratio total/(gamma0*(n_th+1)).
struct RateResult {
    double gamma0 = 0;           // [1/s]
    double slab_correction = 0;  // [1/s], may be negative
    double n_th = 0;
    double total = 0;            // [1/s]
    double I_or_J_par = 0;
    double I_or_J_perp = 0;
    double quad_error = 0;
    bool converged = true;
    std::vector<std::string> regime_flags;

    double ratio() const { return (gamma0 + slab_correction) / gamma0; }
};

inline constexpr double infinite_thickness = std::numeric_limits<double>::infinity();

} // namespace filmdecay
