#include "filmdecay/rates.hpp"

#include <cmath>
#include <stdexcept>

#include "filmdecay/limits.hpp"

namespace filmdecay {

namespace {

// Above this the propagating integrand needs thousands of oscillation-capped
// panels per integral; the mirror closed form is the correct asymptote there.
constexpr double far_field_kz = 1e3;

SlabIntegrals assemble_integrals(complexd eps, const SlabGeometry& geo,
                                 const QuadratureConfig& cfg, bool swapped) {
    QuadratureOutcome par = integrate_slab_kernel(SlabCoeffKind::Mixed, QWeight::Q1,
                                                  eps, geo.kH, geo.kz, cfg, swapped);
    QuadratureOutcome perp = integrate_slab_kernel(SlabCoeffKind::M, QWeight::Q3,
                                                   eps, geo.kH, geo.kz, cfg, swapped);
    SlabIntegrals out;
    out.par = (3.0 / 8.0) * par.value;
    out.par_error = (3.0 / 8.0) * par.error_estimate;
    out.perp = (3.0 / 4.0) * perp.value;
    out.perp_error = (3.0 / 4.0) * perp.error_estimate;
    out.evaluations = par.evaluations + perp.evaluations;
    out.converged = par.converged && perp.converged;
    return out;
}

RateResult assemble_rate(double gamma_bar, const OrientationWeights& ori,
                         const SlabIntegrals& ints, double occupation) {
    RateResult r;
    r.gamma0 = gamma_bar * ori.total();
    r.slab_correction = 2.0 * gamma_bar * (ori.parallel() * ints.par + ori.wz * ints.perp);
    r.n_th = occupation;
    r.total = (r.gamma0 + r.slab_correction) * (occupation + 1.0);
    r.I_or_J_par = ints.par;
    r.I_or_J_perp = ints.perp;
    r.quad_error =
        2.0 * (ori.parallel() * ints.par_error + ori.wz * ints.perp_error) / ori.total();
    r.converged = ints.converged;
    if (!ints.converged) r.regime_flags.push_back("quadrature-not-converged");
    return r;
}

} // namespace

SlabGeometry SlabGeometry::physical(double z, double H, const TransitionSpec& spec) {
    spec.validate();
    SlabGeometry g;
    g.z = z;
    g.H = H;
    g.kz = spec.k * z;
    g.kH = spec.k * H;
    g.validate();
    return g;
}

SlabGeometry SlabGeometry::dimensionless(double kz, double kH) {
    SlabGeometry g;
    g.z = kz;
    g.H = kH;
    g.kz = kz;
    g.kH = kH;
    g.validate();
    return g;
}

void SlabGeometry::validate() const {
    if (!(z > 0.0) || !std::isfinite(z))
        throw std::invalid_argument("SlabGeometry: z must be positive and finite");
    if (!(H >= 0.0))
        throw std::invalid_argument("SlabGeometry: H must be >= 0 (may be inf)");
    if (!(kz > 0.0) || !std::isfinite(kz))
        throw std::invalid_argument("SlabGeometry: kz must be positive and finite");
    if (!(kH >= 0.0))
        throw std::invalid_argument("SlabGeometry: kH must be >= 0 (may be inf)");
}

SlabIntegrals magnetic_integrals(complexd eps, const SlabGeometry& geo,
                                 const QuadratureConfig& cfg) {
    geo.validate();
    return assemble_integrals(eps, geo, cfg, false);
}

SlabIntegrals electric_integrals(complexd eps, const SlabGeometry& geo,
                                 const QuadratureConfig& cfg) {
    geo.validate();
    return assemble_integrals(eps, geo, cfg, true);
}

RateResult total_rate(const TransitionSpec& spec, const OrientationWeights& ori,
                      const MediumModel& model, const SlabGeometry& geo,
                      const ThermalEnvironment& env, const QuadratureConfig& cfg,
                      const PhysicalConstants& pc) {
    spec.validate();
    ori.validate();
    model.validate();
    geo.validate();
    env.validate();
    cfg.validate();
    pc.validate();

    std::vector<std::string> flags = medium_warnings(model, spec);
    const bool magnetic = spec.kind == TransitionKind::Magnetic;

    auto closed_form = [&](const char* flag) {
        RateResult r = magnetic ? pc_rate_magnetic(spec, ori, geo.kz, env, pc)
                                : pc_rate_electric(spec, ori, geo.kz, env, pc);
        r.regime_flags.push_back(flag);
        r.regime_flags.insert(r.regime_flags.end(), flags.begin(), flags.end());
        return r;
    };
    if (model.is_perfect_conductor()) return closed_form("perfect-conductor-closed-form");
    if (geo.kz > far_field_kz) return closed_form("far-field-closed-form");

    const complexd eps = permittivity(model, spec);
    const SlabIntegrals ints = magnetic ? magnetic_integrals(eps, geo, cfg)
                                        : electric_integrals(eps, geo, cfg);
    const double gamma_bar = magnetic ? gamma_bar_magnetic(spec, pc)
                                      : gamma_bar_electric(spec, pc);
    RateResult r = assemble_rate(gamma_bar, ori, ints, planck_occupation(spec, env, pc));
    r.regime_flags.insert(r.regime_flags.end(), flags.begin(), flags.end());
    return r;
}

RateResult total_rate_dimensionless(TransitionKind kind, const OrientationWeights& ori,
                                    complexd eps, double kz, double kH, double nbar,
                                    const QuadratureConfig& cfg) {
    ori.validate();
    cfg.validate();
    if (!(nbar >= 0.0) || !std::isfinite(nbar))
        throw std::invalid_argument("total_rate_dimensionless: nbar must be >= 0 and finite");
    if (kz > far_field_kz) {
        RateResult r = total_rate_dimensionless_pc(kind, ori, kz, nbar);
        r.regime_flags.push_back("far-field-closed-form");
        return r;
    }
    const SlabGeometry geo = SlabGeometry::dimensionless(kz, kH);
    const SlabIntegrals ints = kind == TransitionKind::Magnetic
                                   ? magnetic_integrals(eps, geo, cfg)
                                   : electric_integrals(eps, geo, cfg);
    return assemble_rate(1.0, ori, ints, nbar);
}

RateResult total_rate_dimensionless_pc(TransitionKind kind, const OrientationWeights& ori,
                                       double kz, double nbar) {
    ori.validate();
    if (!(kz >= 0.0))
        throw std::invalid_argument("total_rate_dimensionless_pc: kz must be >= 0");
    if (!(nbar >= 0.0) || !std::isfinite(nbar))
        throw std::invalid_argument("total_rate_dimensionless_pc: nbar must be >= 0 and finite");
    const double sign = kind == TransitionKind::Magnetic ? 1.0 : -1.0;
    const double f_par = f_parallel(kz);
    const double f_perp = f_perpendicular(kz);
    RateResult r;
    r.gamma0 = ori.total();
    r.slab_correction = sign * (1.5 * f_par * ori.parallel() + 3.0 * f_perp * ori.wz);
    r.n_th = nbar;
    r.total = (r.gamma0 + r.slab_correction) * (nbar + 1.0);
    r.I_or_J_par = sign * 0.75 * f_par;
    r.I_or_J_perp = sign * 1.5 * f_perp;
    r.quad_error = 0.0;
    r.converged = true;
    r.regime_flags.push_back("perfect-conductor-closed-form");
    return r;
}

} // namespace filmdecay
