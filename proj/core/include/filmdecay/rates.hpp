// Orientation-resolved slab integrals and the assembled magnetic/electric
// transition rates with the thermal factor.
#pragma once

#include "filmdecay/core_model.hpp"
#include "filmdecay/medium.hpp"
#include "filmdecay/quad.hpp"
#include "filmdecay/types.hpp"

namespace filmdecay {

struct SlabGeometry {
    double z = 0.0;   // [m] atom height above the film, > 0
    double H = 0.0;   // [m] film thickness, >= 0 or inf
    double kz = 0.0;  // k * z
    double kH = 0.0;  // k * H

    // Physical geometry tied to a transition's wavenumber.
    static SlabGeometry physical(double z, double H, const TransitionSpec& spec);
    // Bare dimensionless geometry (k = 1 convention; z and H carry kz, kH).
    static SlabGeometry dimensionless(double kz, double kH);

    void validate() const;
};

// A pair of slab integrals with the quadrature bookkeeping attached; on
// non-convergence the partial values are still returned with converged set
// to false.
struct SlabIntegrals {
    double par = 0.0;
    double perp = 0.0;
    double par_error = 0.0;
    double perp_error = 0.0;
    long evaluations = 0;
    bool converged = true;
};

// I_par = (3/8) Re int (q/eta0) e^{i 2 eta0 kz} [C_N - eta0^2 C_M] dq,
// I_perp = (3/4) Re int (q^3/eta0) e^{i 2 eta0 kz} C_M dq.
SlabIntegrals magnetic_integrals(complexd eps, const SlabGeometry& geo,
                                 const QuadratureConfig& cfg = {});

// Same structure with C_N and C_M exchanged (J_par, J_perp).
SlabIntegrals electric_integrals(complexd eps, const SlabGeometry& geo,
                                 const QuadratureConfig& cfg = {});

// Full rate: gamma0 from the free-space prefactor, slab correction
// 2 gamma_bar [(w_x + w_y) par + w_z perp], thermal factor (n_th + 1).
// A PerfectConductor model dispatches to the closed form, as does kz > 1e3
// (where the integrand oscillates too fast to subdivide and the closed form
// is the correct asymptote); both paths tag the result's regime_flags.
RateResult total_rate(const TransitionSpec& spec, const OrientationWeights& ori,
                      const MediumModel& model, const SlabGeometry& geo,
                      const ThermalEnvironment& env, const QuadratureConfig& cfg = {},
                      const PhysicalConstants& pc = codata2018());

// Dimensionless variants: gamma_bar = 1 so gamma0 equals the orientation
// total, and the occupation is supplied directly.
RateResult total_rate_dimensionless(TransitionKind kind, const OrientationWeights& ori,
                                    complexd eps, double kz, double kH, double nbar,
                                    const QuadratureConfig& cfg = {});
RateResult total_rate_dimensionless_pc(TransitionKind kind, const OrientationWeights& ori,
                                       double kz, double nbar);

} // namespace filmdecay
