#include "problem.hpp"

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace filmdecay::cli {

namespace {

std::vector<double> parse_doubles(const std::string& text, std::size_t n, const char* flag) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(flag) + ": cannot parse '" + tok + "'");
        }
        if (used != tok.size())
            throw std::invalid_argument(std::string(flag) + ": trailing junk in '" + tok + "'");
        out.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.size() != n)
        throw std::invalid_argument(std::string(flag) + ": expected " + std::to_string(n) +
                                    " comma-separated values, got " + std::to_string(out.size()));
    return out;
}

TransitionKind parse_kind(const std::string& name) {
    if (name == "magnetic") return TransitionKind::Magnetic;
    if (name == "electric") return TransitionKind::Electric;
    throw std::invalid_argument("--kind must be magnetic or electric, got '" + name + "'");
}

} // namespace

double parse_length_or_inf(const std::string& text, const char* flag) {
    if (text == "inf") return infinite_thickness;
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(flag) + ": cannot parse '" + text +
                                    "' (number or \"inf\")");
    }
    if (used != text.size())
        throw std::invalid_argument(std::string(flag) + ": trailing junk in '" + text + "'");
    return v;
}

OrientationWeights parse_orientation(const std::string& text) {
    const auto w = parse_doubles(text, 3, "--orient");
    OrientationWeights ori{w[0], w[1], w[2]};
    ori.validate();
    return ori;
}

Problem build_problem(const RateOptions& o) {
    Problem p;
    p.dimensionless = o.dimensionless;
    p.kind = parse_kind(o.kind);
    p.ori = parse_orientation(o.orient);
    if (o.set.rel_tol) p.cfg.rel_tol = o.rel_tol;
    p.cfg.validate();

    // Exactly one way of specifying the film's response.
    const bool g_lengths = o.set.lambda_L || o.set.delta;
    const bool g_eps = o.set.eps_re || o.set.eps_im;
    const bool g_pc = o.perfect_conductor;
    const bool g_tf = o.set.two_fluid;
    const bool g_klengths = o.set.k_lambda_L || o.set.k_delta;
    const int groups = int(g_lengths) + int(g_eps) + int(g_pc) + int(g_tf) + int(g_klengths);
    if (groups != 1)
        throw std::invalid_argument(
            "medium flags are mutually exclusive and one is required: --lambda-L/--delta, "
            "--eps-re/--eps-im, --perfect-conductor, --two-fluid (physical mode) or "
            "--k-lambda-L/--k-delta, --eps-re/--eps-im, --perfect-conductor "
            "(--dimensionless)");

    if (p.dimensionless) {
        if (o.set.freq || o.set.z || o.set.H || o.set.temp || g_lengths || g_tf)
            throw std::invalid_argument(
                "--dimensionless takes --kz/--kH/--k-lambda-L/--k-delta/--nbar; physical "
                "flags (--freq, --z, --H, --temp, --lambda-L, --delta, --two-fluid) do not apply");
        if (!o.set.kz) throw std::invalid_argument("--dimensionless requires --kz");
        p.kz = o.kz;
        if (!(p.kz > 0.0) || !std::isfinite(p.kz))
            throw std::invalid_argument("--kz must be positive and finite");
        p.kH = parse_length_or_inf(o.kH, "--kH");
        if (!(p.kH >= 0.0)) throw std::invalid_argument("--kH must be >= 0 or inf");
        p.nbar = o.nbar;
        if (!(p.nbar >= 0.0) || !std::isfinite(p.nbar))
            throw std::invalid_argument("--nbar must be >= 0 and finite");
        if (g_pc) {
            p.pc = true;
        } else if (g_eps) {
            p.eps = complexd(o.eps_re, o.eps_im);
        } else {
            const double kl =
                o.set.k_lambda_L ? o.k_lambda_L : infinite_thickness;
            const double kd =
                o.set.k_delta ? parse_length_or_inf(o.k_delta, "--k-delta") : infinite_thickness;
            if (!(kl > 0.0)) throw std::invalid_argument("--k-lambda-L must be > 0");
            if (!(kd > 0.0)) throw std::invalid_argument("--k-delta must be > 0 or inf");
            const double re = std::isinf(kl) ? 1.0 : 1.0 - 1.0 / (kl * kl);
            const double im = std::isinf(kd) ? 0.0 : 2.0 / (kd * kd);
            p.eps = complexd(re, im);
        }
        return p;
    }

    if (o.set.kz || o.set.kH || o.set.k_lambda_L || o.set.k_delta || o.set.nbar)
        throw std::invalid_argument(
            "--kz/--kH/--k-lambda-L/--k-delta/--nbar require --dimensionless");
    if (!o.set.freq) throw std::invalid_argument("--freq is required (Hz)");
    p.spec = TransitionSpec::from_frequency(o.freq, p.kind);
    if (!o.set.z) throw std::invalid_argument("--z is required (m)");
    p.z = o.z;
    p.H = parse_length_or_inf(o.H, "--H");
    p.env.T = o.temp;
    p.env.validate();

    if (g_pc) {
        p.model = MediumModel{PerfectConductor{}, std::nullopt};
    } else if (g_eps) {
        p.model = MediumModel{FixedEpsilon{complexd(o.eps_re, o.eps_im)}, std::nullopt};
    } else if (g_tf) {
        const auto v = parse_doubles(o.two_fluid, 4, "--two-fluid");
        TwoFluidState state{v[0], v[1], v[2], v[3]};
        state.validate();
        p.tf_base = state;
        p.model = two_fluid_at_temperature(state);
        // The bath the atom faces is the film; its temperature doubles as the
        // occupation temperature unless --temp overrides it.
        if (!o.set.temp) p.env.T = state.T;
    } else {
        if (o.set.lambda_L && o.set.delta) {
            const double d = parse_length_or_inf(o.delta, "--delta");
            p.model = MediumModel{TwoFluid{o.lambda_L, d}, std::nullopt};
        } else if (o.set.lambda_L) {
            p.model = MediumModel{TwoFluid{o.lambda_L, infinite_thickness}, std::nullopt};
        } else {
            const double d = parse_length_or_inf(o.delta, "--delta");
            p.model = MediumModel{Drude{d}, std::nullopt};
        }
    }
    p.model.validate();
    return p;
}

OutputRow evaluate_row(const Problem& p, double swept) {
    RateResult rr;
    OutputRow row;
    row.swept = swept;
    if (p.dimensionless) {
        rr = p.pc ? total_rate_dimensionless_pc(p.kind, p.ori, p.kz, p.nbar)
                  : total_rate_dimensionless(p.kind, p.ori, p.eps, p.kz, p.kH, p.nbar, p.cfg);
        row.kz = p.kz;
        row.kH = p.pc ? infinite_thickness : p.kH;
    } else {
        const SlabGeometry geo = SlabGeometry::physical(p.z, p.H, *p.spec);
        rr = total_rate(*p.spec, p.ori, p.model, geo, p.env, p.cfg);
        row.kz = geo.kz;
        row.kH = geo.kH;
    }
    row.integral_par = rr.I_or_J_par;
    row.integral_perp = rr.I_or_J_perp;
    row.gamma0 = rr.gamma0;
    row.slab_correction = rr.slab_correction;
    row.n_th = rr.n_th;
    row.total = rr.total;
    row.rate_ratio = rr.ratio();
    row.quad_error = rr.quad_error;
    row.regime_flags = rr.regime_flags;
    row.converged = rr.converged;
    return row;
}

} // namespace filmdecay::cli
