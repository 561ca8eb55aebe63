// Adaptive Gauss-Kronrod quadrature and the slab field-fluctuation integrals
// over transverse wavenumber q, split at the light line q = 1:
//
//   Re \int_0^inf (q / eta0) e^{i 2 eta0 kz} K(q, eta0) dq
//
// Propagating segment q in [0,1]: substitute u = eta0 = sqrt(1 - q^2); the
// 1/eta0 endpoint singularity cancels and the integrand becomes
// Re[e^{i 2 u kz} K] on u in [0,1]. Evanescent segment q in (1,inf):
// eta0 = i v with v = sqrt(q^2 - 1); the measure contributes -i dv so the
// real part picks out Im[K] e^{-2 v kz}, a real decaying integrand truncated
// at v_max = -ln(tail_cut) / (2 kz) with a certified tail bound added to the
// error estimate.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <vector>

#include "filmdecay/medium.hpp"

namespace filmdecay {

struct QuadratureConfig {
    double rel_tol = 1e-9;
    double abs_tol = 1e-13;
    int max_subdivisions = 2000;
    double tail_cut_epsilon = 1e-16;

    void validate() const {
        if (!(rel_tol > 0.0 && rel_tol < 1.0))
            throw std::invalid_argument("QuadratureConfig: rel_tol must lie in (0, 1)");
        if (!(abs_tol > 0.0))
            throw std::invalid_argument("QuadratureConfig: abs_tol must be positive");
        if (max_subdivisions < 16)
            throw std::invalid_argument("QuadratureConfig: max_subdivisions must be at least 16");
        if (!(tail_cut_epsilon > 0.0 && tail_cut_epsilon < 1.0))
            throw std::invalid_argument("QuadratureConfig: tail_cut_epsilon must lie in (0, 1)");
    }
};

struct QuadratureOutcome {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = true;
};

namespace detail {

// Gauss 7 / Kronrod 15 pair on [-1, 1]; nonnegative nodes, symmetric rule.
inline constexpr double kronrod_nodes[8] = {
    0.0,
    0.2077849550078984676,
    0.40584515137739716691,
    0.58608723546769113029,
    0.74153118559939443986,
    0.86486442335976907279,
    0.94910791234275852453,
    0.99145537112081263921,
};
inline constexpr double kronrod_weights[8] = {
    0.20948214108472782801,
    0.20443294007529889241,
    0.19035057806478540991,
    0.16900472663926790283,
    0.14065325971552591875,
    0.10479001032225018384,
    0.063092092629978553291,
    0.022935322010529224964,
};
// Gauss weights for the embedded nodes (kronrod_nodes indices 0, 2, 4, 6).
inline constexpr double gauss_weights[4] = {
    0.41795918367346938776,
    0.38183005050511894495,
    0.2797053914892766679,
    0.12948496616886969327,
};

struct Panel {
    double a = 0.0;
    double b = 0.0;
    double value = 0.0;
    double error = 0.0;
};

struct PanelWorse {
    bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

template <class F>
Panel gk_panel(F&& f, double a, double b, long& evaluations) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    auto eval = [&](double x) {
        const double y = f(x);
        ++evaluations;
        if (!std::isfinite(y))
            throw std::domain_error("quadrature: integrand evaluated to a non-finite value");
        return y;
    };
    const double fc = eval(mid);
    double k15 = kronrod_weights[0] * fc;
    double g7 = gauss_weights[0] * fc;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kronrod_nodes[i];
        const double fsum = eval(mid - dx) + eval(mid + dx);
        k15 += kronrod_weights[i] * fsum;
        if (i % 2 == 0) g7 += gauss_weights[i / 2] * fsum;
    }
    Panel p;
    p.a = a;
    p.b = b;
    p.value = half * k15;
    p.error = std::abs(half * (k15 - g7));
    return p;
}

// Worst-panel-first adaptive refinement of an initial mesh. The final value
// re-sums surviving panels in left-edge order, so the result does not depend
// on the heap's internal ordering.
template <class F>
QuadratureOutcome adaptive_gk(F&& f, const std::vector<double>& mesh,
                              const QuadratureConfig& cfg) {
    QuadratureOutcome out;
    std::priority_queue<Panel, std::vector<Panel>, PanelWorse> queue;
    double value = 0.0;
    double error = 0.0;
    for (std::size_t i = 0; i + 1 < mesh.size(); ++i) {
        Panel p = gk_panel(f, mesh[i], mesh[i + 1], out.evaluations);
        value += p.value;
        error += p.error;
        queue.push(p);
    }
    auto tolerance = [&] { return std::max(cfg.rel_tol * std::abs(value), cfg.abs_tol); };
    int splits = 0;
    while (error > tolerance() && splits < cfg.max_subdivisions) {
        Panel worst = queue.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b)) break;  // panel at machine width
        queue.pop();
        value -= worst.value;
        error -= worst.error;
        Panel lo = gk_panel(f, worst.a, mid, out.evaluations);
        Panel hi = gk_panel(f, mid, worst.b, out.evaluations);
        value += lo.value + hi.value;
        error += lo.error + hi.error;
        queue.push(lo);
        queue.push(hi);
        ++splits;
    }
    std::vector<Panel> panels;
    panels.reserve(queue.size());
    while (!queue.empty()) {
        panels.push_back(queue.top());
        queue.pop();
    }
    std::sort(panels.begin(), panels.end(),
              [](const Panel& x, const Panel& y) { return x.a < y.a; });
    out.value = 0.0;
    out.error_estimate = 0.0;
    for (const Panel& p : panels) {
        out.value += p.value;
        out.error_estimate += p.error;
    }
    out.converged = out.error_estimate <=
                    std::max(cfg.rel_tol * std::abs(out.value), cfg.abs_tol);
    return out;
}

// Closed-form tail \int_x^inf (1 + v)^p e^{-2 c v} dv for the certified
// truncation bound; p in {0, 2}.
inline double tail_integral(int p, double c, double x) {
    const double damp = std::exp(-2.0 * c * x);
    if (p == 0) return damp / (2.0 * c);
    const double w = 1.0 + x;
    return damp * (w * w / (2.0 * c) + w / (2.0 * c * c) + 1.0 / (4.0 * c * c * c));
}

} // namespace detail

// Propagating segment. kernel(q, eta0) -> complex, evaluated with eta0 real
// in [0, 1]; the initial mesh caps the panel width near half an oscillation
// period of e^{i 2 u kz}.
template <class Kernel>
QuadratureOutcome integrate_propagating(Kernel&& kernel, double kz,
                                        const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(kz > 0.0) || !std::isfinite(kz))
        throw std::invalid_argument("integrate_propagating: kz must be positive and finite");
    auto f = [&](double u) {
        const double q = std::sqrt(std::max(0.0, 1.0 - u * u));
        const complexd K = kernel(q, complexd(u, 0.0));
        return std::cos(2.0 * kz * u) * K.real() - std::sin(2.0 * kz * u) * K.imag();
    };
    const int panels = std::max(2, static_cast<int>(std::ceil(2.0 * kz / std::numbers::pi)));
    std::vector<double> mesh(static_cast<std::size_t>(panels) + 1);
    for (int i = 0; i <= panels; ++i)
        mesh[static_cast<std::size_t>(i)] = static_cast<double>(i) / panels;
    mesh.front() = 0.0;
    mesh.back() = 1.0;
    return detail::adaptive_gk(f, mesh, cfg);
}

// Evanescent segment. kernel(q, eta0) -> complex, evaluated with eta0 = i v;
// integrates Im[K] e^{-2 v kz} on [0, v_max] over a geometric initial mesh
// and certifies the discarded tail with an empirical envelope
// |Im K| <= A (1 + v)^envelope_degree sampled near the cut. Only Im K enters
// the integrand, and |K| can exceed it by many decades out there (r_p tends
// to a near-unit constant whose imaginary part is ~ Im eps / |eps|^2), so the
// envelope tracks the imaginary part.
template <class Kernel>
QuadratureOutcome integrate_evanescent(Kernel&& kernel, double kz,
                                       const QuadratureConfig& cfg,
                                       int envelope_degree = 2) {
    cfg.validate();
    if (!(kz > 0.0) || !std::isfinite(kz))
        throw std::invalid_argument("integrate_evanescent: kz must be positive and finite");
    if (envelope_degree != 0 && envelope_degree != 2)
        throw std::invalid_argument("integrate_evanescent: envelope_degree must be 0 or 2");
    const double v_max = -std::log(cfg.tail_cut_epsilon) / (2.0 * kz);
    auto f = [&](double v) {
        const double q = std::sqrt(1.0 + v * v);
        const complexd K = kernel(q, complexd(0.0, v));
        return K.imag() * std::exp(-2.0 * kz * v);
    };
    std::vector<double> mesh;
    mesh.reserve(43);
    mesh.push_back(0.0);
    for (int j = 40; j >= 0; --j) mesh.push_back(v_max * std::ldexp(1.0, -j));
    QuadratureOutcome out = detail::adaptive_gk(f, mesh, cfg);
    double peak = 0.0;
    for (int i = 0; i <= 16; ++i) {
        const double v = v_max * (0.9 + 0.1 * static_cast<double>(i) / 16.0);
        const double q = std::sqrt(1.0 + v * v);
        const complexd K = kernel(q, complexd(0.0, v));
        ++out.evaluations;
        const double scale = std::pow(1.0 + v, envelope_degree);
        peak = std::max(peak, std::abs(K.imag()) / scale);
    }
    out.error_estimate += 2.0 * peak * detail::tail_integral(envelope_degree, kz, v_max);
    out.converged = out.error_estimate <=
                    std::max(cfg.rel_tol * std::abs(out.value), cfg.abs_tol);
    return out;
}

// Which slab coefficient enters the kernel: C_N, C_M, or the mixed
// combination lead - eta0^2 * sub that appears in the parallel integrals.
enum class SlabCoeffKind { N, M, Mixed };

// Transverse-wavenumber weight of the integrand: q/eta0 (absorbed by the
// substitutions) or q^3/eta0 (an extra factor q^2 in the kernel).
enum class QWeight { Q1, Q3 };

// Full q in [0, inf) slab integral for the given kernel shape. `swapped`
// exchanges C_N and C_M before the kernel is formed; the electric-dipole
// integrals are exactly the magnetic ones under this swap. For real eps the
// evanescent integrand vanishes identically (all coefficients are real
// there), so that segment is skipped; real eps > 1 is rejected because
// lossless guided-mode poles would sit on the integration path.
QuadratureOutcome integrate_slab_kernel(SlabCoeffKind kind, QWeight weight,
                                        complexd eps, double kH, double kz,
                                        const QuadratureConfig& cfg,
                                        bool swapped = false);

} // namespace filmdecay
