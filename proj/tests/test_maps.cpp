#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "siegel/arithmetic.hpp"
#include "siegel/maps.hpp"

using namespace siegel;
using L = double_lane;
using Q = quad_lane;
using C = cplx_t<L>;

TEST_CASE("quad_from_multiplier landmark values")
{
    CHECK(std::abs(quad_from_multiplier<L>(C(1, 0)).c - C(0.25, 0)) < 1e-15);
    CHECK(std::abs(quad_from_multiplier<L>(C(-1, 0)).c - C(-0.75, 0)) < 1e-15);

    // generic: c evaluated directly from c = mu/2 - mu^2/4
    auto p = quad_from_rotation<L>(golden_theta<L>());
    C mu = p.mu;
    CHECK(std::abs(p.c - (mu / 2.0 - mu * mu / 4.0)) < 1e-16);
    // fixed point property x^2 + c = x, 2x = mu
    CHECK(std::abs(p.x_fix * p.x_fix + p.c - p.x_fix) < 1e-16);
    CHECK(std::abs(2.0 * p.x_fix - p.mu) < 1e-16);
}

TEST_CASE("henon_from_rotation invariants")
{
    auto p = henon_from_rotation<L>(golden_theta<L>(), C(0.05, 0));
    CHECK(std::abs(p.b - p.mu * p.nu) < 1e-15);
    CHECK(std::abs(std::abs(p.nu) - std::abs(p.b)) < 1e-15);
    CHECK(multiplier_residual(p) < 1e-12);
    CHECK(p.small_jacobian);

    // rotated b keeps |nu| = |b|
    auto p2 = henon_from_rotation<L>(golden_theta<L>(),
                                     0.05 * std::polar(1.0, M_PI / 3.0));
    CHECK(std::abs(std::abs(p2.nu) - 0.05) < 1e-15);

    CHECK_THROWS_AS(henon_from_rotation<L>(golden_theta<L>(), C(1.5, 0)), OutOfRegime);
}

TEST_CASE("b -> 0 degeneration matches the quadratic family")
{
    auto q = quad_from_rotation<L>(golden_theta<L>());
    auto h = henon_from_rotation<L>(golden_theta<L>(), C(0, 0));
    CHECK(std::abs(h.c - q.c) < 1e-15);
    CHECK(std::abs(h.nu) == 0.0);
    // henon_apply at b=0 is the embedding (f_c(x), x), exactly
    pt2<L> z{C(0.3, 0.1), C(-7.0, 3.0)};
    auto w = henon_apply(h, z);
    CHECK(w.x == z.x * z.x + h.c);
    CHECK(w.y == z.x);
}

TEST_CASE("henon_apply basics")
{
    auto p = henon_from_rotation<L>(golden_theta<L>(), C(0.05, 0));
    auto w = henon_apply(p, pt2<L>{C(0, 0), C(0, 0)});
    CHECK(std::abs(w.x - p.c) < 1e-16);
    CHECK(std::abs(w.y) == 0.0);

    // fixed point maps to itself
    auto fp = henon_apply(p, pt2<L>{p.x_fix, p.x_fix});
    CHECK(std::abs(fp.x - p.x_fix) < 1e-15);
    CHECK(std::abs(fp.y - p.x_fix) < 1e-15);

    // constant Jacobian: finite-difference cross-check of det D H = b
    C h(1e-7, 0);
    pt2<L> z{C(0.2, 0.3), C(-0.1, 0.05)};
    auto fxp = henon_apply(p, pt2<L>{z.x + h, z.y});
    auto fxm = henon_apply(p, pt2<L>{z.x - h, z.y});
    auto fyp = henon_apply(p, pt2<L>{z.x, z.y + h});
    auto fym = henon_apply(p, pt2<L>{z.x, z.y - h});
    C a11 = (fxp.x - fxm.x) / (2.0 * h), a12 = (fyp.x - fym.x) / (2.0 * h);
    C a21 = (fxp.y - fxm.y) / (2.0 * h), a22 = (fyp.y - fym.y) / (2.0 * h);
    CHECK(std::abs(a11 * a22 - a12 * a21 - p.b) < 1e-7);
    CHECK(henon_jacobian_det(p) == p.b);
}

TEST_CASE("henon_iterate basics and overflow reporting")
{
    auto p = henon_from_rotation<L>(golden_theta<L>(), C(0.05, 0));
    pt2<L> z{C(0.1, 0.2), C(0.0, -0.1)};
    auto id = henon_iterate(p, z, 0);
    CHECK(id.x == z.x);
    CHECK(id.y == z.y);

    auto fp = henon_iterate(p, pt2<L>{p.x_fix, p.x_fix}, 5);
    CHECK(std::abs(fp.x - p.x_fix) < 1e-13);

    bool threw = false;
    try {
        henon_iterate(p, pt2<L>{C(50.0, 0), C(0, 0)}, 100);
    } catch (const Overflow& e) {
        threw = true;
        CHECK(e.step >= 1);
    }
    CHECK(threw);
}

TEST_CASE("multiplier roundtrip for random (theta, b), both lanes")
{
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> ut(0.05, 0.95), ub(0.0, 0.1), ua(0.0, 6.28);
    for (int t = 0; t < 100; ++t) {
        double theta = ut(rng);
        double bmod = ub(rng), barg = ua(rng);
        auto p = henon_from_rotation<L>(theta, std::polar(bmod, barg));
        CHECK(multiplier_residual(p) < 1e-10);
    }
    // extended lane spot check
    auto pq = henon_from_rotation<Q>(golden_theta<Q>(), make_c<Q>(0.05, 0.02));
    CHECK(to_d(multiplier_residual(pq)) < 1e-30);
}
