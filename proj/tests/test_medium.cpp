#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "checks.hpp"
#include "filmdecay/medium.hpp"

using namespace filmdecay;

namespace {
const double inf = std::numeric_limits<double>::infinity();

TransitionSpec spec_with_k(double k) {
    // pick omega so that spec.k == k
    return TransitionSpec::from_omega(k * codata2018().c, TransitionKind::Magnetic);
}
} // namespace

TEST_SUITE("medium") {

TEST_CASE("permittivity of the two-fluid film") {
    // k lambda_L = 0.1, k delta = 0.2 at k = 1
    auto spec = spec_with_k(1.0);
    MediumModel m;
    m.variant = TwoFluid{0.1, 0.2};
    auto eps = permittivity(m, spec);
    CHECK(rel_err(eps, {-99.0, 50.0}) < 1e-14);

    m.variant = TwoFluid{1.0, 1.0};
    eps = permittivity(m, spec);
    CHECK(std::abs(eps.real()) < 1e-15);
    CHECK(rel_err(eps.imag(), 2.0) < 1e-14);

    // vacuum limit
    m.variant = TwoFluid{inf, inf};
    eps = permittivity(m, spec);
    CHECK(eps == complexd(1.0, 0.0));

    // lossless condensate: delta = inf kills the imaginary part exactly
    m.variant = TwoFluid{1e-4, inf};
    eps = permittivity(m, spec);
    CHECK(eps.imag() == 0.0);
    CHECK(rel_err(eps.real(), 1.0 - 1e8) < 1e-14);

    m.variant = Drude{0.2};
    eps = permittivity(m, spec);
    CHECK(eps.real() == 1.0);
    CHECK(rel_err(eps.imag(), 50.0) < 1e-14);

    m.variant = FixedEpsilon{{2.0, 3.0}};
    CHECK(permittivity(m, spec) == complexd(2.0, 3.0));

    m.variant = PerfectConductor{};
    bool threw = false;
    try {
        permittivity(m, spec);
    } catch (const std::invalid_argument& e) {
        threw = true;
        CHECK(std::string(e.what()).find("use closed form") != std::string::npos);
    }
    CHECK(threw);
}

TEST_CASE("medium model validation") {
    auto spec = spec_with_k(1.0);
    MediumModel m;
    m.variant = TwoFluid{-1.0, 0.2};
    CHECK_THROWS_AS(permittivity(m, spec), std::invalid_argument);
    m.variant = Drude{inf};
    CHECK_THROWS_AS(permittivity(m, spec), std::invalid_argument);
    m.variant = FixedEpsilon{{2.0, -1e-3}};
    CHECK_THROWS_AS(permittivity(m, spec), std::invalid_argument);
    m.variant = FixedEpsilon{{2.0, 1.0}};
    m.gap_frequency = -5.0;
    CHECK_THROWS_AS(permittivity(m, spec), std::invalid_argument);
}

TEST_CASE("gap frequency warning") {
    auto spec = TransitionSpec::from_omega(1e10, TransitionKind::Magnetic);
    MediumModel m;
    m.variant = FixedEpsilon{{-100.0, 50.0}};
    CHECK(medium_warnings(m, spec).empty());

    m.gap_frequency = 1e12;  // omega = 1e10 < 0.1 * omega_g, fine
    CHECK(medium_warnings(m, spec).empty());

    m.gap_frequency = 1e11;  // omega exactly at 0.1 * omega_g -> warn
    CHECK(medium_warnings(m, spec).size() == 1);
    m.gap_frequency = 1e9;
    CHECK(medium_warnings(m, spec).size() == 1);
}

TEST_CASE("two-fluid temperature dependence") {
    TwoFluidState s{0.0, 9.2, 50e-9, 100e-9};

    auto m = two_fluid_at_temperature(s);
    auto* tf = std::get_if<TwoFluid>(&m.variant);
    REQUIRE(tf != nullptr);
    CHECK(tf->lambda_L == 50e-9);
    CHECK(std::isinf(tf->delta));

    // at Tc/2 the condensate fraction is 15/16
    s.T = 4.6;
    m = two_fluid_at_temperature(s);
    tf = std::get_if<TwoFluid>(&m.variant);
    REQUIRE(tf != nullptr);
    CHECK(rel_err(tf->lambda_L, 50e-9 / std::sqrt(15.0 / 16.0)) < 1e-14);
    CHECK(rel_err(tf->delta, 4.0 * 100e-9) < 1e-14);

    s.T = 9.2;
    m = two_fluid_at_temperature(s);
    auto* dr = std::get_if<Drude>(&m.variant);
    REQUIRE(dr != nullptr);
    CHECK(dr->delta == 100e-9);

    s.T = 20.0;  // normal state above Tc
    m = two_fluid_at_temperature(s);
    CHECK(std::get_if<Drude>(&m.variant) != nullptr);

    s.Tc = 0.0;
    CHECK_THROWS_AS(two_fluid_at_temperature(s), std::invalid_argument);
}

TEST_CASE("fresnel coefficients") {
    // no interface
    auto [rs0, rp0] = fresnel(0.7, {1.0, 0.0});
    CHECK(std::abs(rs0) == 0.0);
    CHECK(std::abs(rp0) == 0.0);

    // normal incidence on eps = 4
    auto [rs, rp] = fresnel(0.0, {4.0, 0.0});
    CHECK(rel_err(rs, {-1.0 / 3.0, 0.0}) < 1e-15);
    CHECK(rel_err(rp, {1.0 / 3.0, 0.0}) < 1e-15);

    // conductor limit
    auto [rsc, rpc] = fresnel(0.5, {-1e12, 1e6});
    CHECK(std::abs(rsc - complexd(-1.0, 0.0)) < 1e-5);
    CHECK(std::abs(rpc - complexd(1.0, 0.0)) < 1e-5);

    // frozen spot values
    auto [rs1, rp1] = fresnel(0.5, {-99.0, 50.0});
    CHECK(rel_err(rs1, {-0.950717696477612695, -0.153003050775560319}) < 1e-14);
    CHECK(rel_err(rp1, {0.929386414058916228, 0.200851110471264367}) < 1e-14);
    auto [rs2, rp2] = fresnel(1.3, {-99.0, 50.0});
    CHECK(rel_err(rs2, {-0.857752748489283045, 0.0308883819430333579}) < 1e-14);
    CHECK(rel_err(rp2, {1.24982199763590518, 0.0685146525857577806}) < 1e-14);
    auto [rs3, rp3] = fresnel(0.5, {2.0, 3.0});
    CHECK(rel_err(rs3, {-0.387788317063843695, -0.228945247869345993}) < 1e-14);
    CHECK(rel_err(rp3, {0.265471829244160554, 0.219155064904689458}) < 1e-14);
}

TEST_CASE("branch convention") {
    CHECK(sqrt_physical({4.0, 0.0}) == complexd(2.0, 0.0));
    CHECK(sqrt_physical({-4.0, 0.0}) == complexd(0.0, 2.0));
    auto r = sqrt_physical({0.0, -2.0});
    CHECK(r.imag() >= 0.0);

    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> uq(0.0, 5.0);
    std::uniform_real_distribution<double> ure(-1e4, 1.0);
    std::uniform_real_distribution<double> uim(0.0, 1e4);
    for (int i = 0; i < 500; ++i) {
        const double q = uq(rng);
        const complexd eps{ure(rng), uim(rng)};
        const complexd eta0 = sqrt_physical(complexd(1.0 - q * q, 0.0));
        const complexd eta = sqrt_physical(eps - complexd(q * q, 0.0));
        CHECK(eta0.imag() >= 0.0);
        CHECK(eta.imag() >= 0.0);
        if (eta0.imag() == 0.0) CHECK(eta0.real() >= 0.0);
        auto [frs, frp] = fresnel(q, eps);
        CHECK(std::isfinite(frs.real()));
        CHECK(std::isfinite(frs.imag()));
        CHECK(std::isfinite(frp.real()));
        CHECK(std::isfinite(frp.imag()));
    }
}

TEST_CASE("passivity of reflection amplitudes") {
    // |r_s| <= 1 holds for lossy media with Re eps <= 1 at every q; r_p is
    // only bounded for propagating q (it legitimately exceeds 1 on the
    // evanescent side, cf. the frozen value at q = 1.3), so assert finiteness
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> uq(0.0, 4.0);
    std::uniform_real_distribution<double> ure(-1e4, 1.0);
    std::uniform_real_distribution<double> uim(1e-6, 1e4);
    for (int i = 0; i < 500; ++i) {
        const complexd eps{ure(rng), uim(rng)};
        const double q = uq(rng);
        auto [rs, rp] = fresnel(q, eps);
        CHECK(std::abs(rs) <= 1.0 + 1e-12);
        if (q <= 1.0) CHECK(std::abs(rp) <= 1.0 + 1e-12);
        CHECK(std::isfinite(std::abs(rp)));
    }
}

TEST_CASE("slab coefficients") {
    const complexd eps{-99.0, 50.0};

    // zero thickness: no slab at all
    auto [n0, m0] = slab_coefficients(0.5, eps, 0.0);
    CHECK(n0 == complexd(0.0, 0.0));
    CHECK(m0 == complexd(0.0, 0.0));

    // infinite thickness reduces to the bare interface, bit-exactly
    auto [rs, rp] = fresnel(0.5, eps);
    auto [ninf, minf] = slab_coefficients(0.5, eps, inf);
    CHECK(ninf == rp);
    CHECK(minf == rs);

    // frozen finite-thickness values
    auto [n1, m1] = slab_coefficients(0.5, eps, 0.3);
    CHECK(rel_err(n1, {0.928674502669531071, 0.20041640965456002}) < 1e-14);
    CHECK(rel_err(m1, {-0.950136358101885578, -0.15272716765748022}) < 1e-14);
    auto [n2, m2] = slab_coefficients(1.3, eps, 0.3);
    CHECK(rel_err(n2, {1.24946993521938092, 0.069963270085675479}) < 1e-14);
    CHECK(rel_err(m2, {-0.857774090748453751, 0.0313621887383895848}) < 1e-14);
    auto [n3, m3] = slab_coefficients(0.5, {2.0, 3.0}, 0.3);
    CHECK(rel_err(n3, {0.268535252736032411, 0.0340429727427355092}) < 1e-14);
    CHECK(rel_err(m3, {-0.351189884769287282, -0.0075839390563767637}) < 1e-14);

    // a deep film of a good conductor is already the half-space
    auto [nd, md] = slab_coefficients(0.5, {-1e8, 1.0}, 10.0);
    auto [rsd, rpd] = fresnel(0.5, {-1e8, 1.0});
    CHECK(std::abs(nd - rpd) < 1e-3);
    CHECK(std::abs(md - rsd) < 1e-3);

    CHECK_THROWS_AS(slab_coefficients(0.5, eps, -1.0), std::invalid_argument);
}

TEST_CASE("slab degeneracy and continuity") {
    for (double q : {0.0, 0.3, 1.0, 2.5}) {
        for (double kH : {0.0, 0.1, 3.0}) {
            auto [cn, cm] = slab_coefficients(q, {1.0, 0.0}, kH);
            CHECK(std::abs(cn) < 1e-15);
            CHECK(std::abs(cm) < 1e-15);
        }
    }
    // continuity in kH for lossy media
    const complexd eps{-40.0, 0.5};
    for (double kH : {1e-3, 0.1, 1.0, 5.0}) {
        auto [a, b] = slab_coefficients(0.8, eps, kH);
        auto [c, d] = slab_coefficients(0.8, eps, kH * (1.0 + 1e-9));
        CHECK(std::abs(a - c) < 1e-6);
        CHECK(std::abs(b - d) < 1e-6);
    }
}

} // TEST_SUITE
