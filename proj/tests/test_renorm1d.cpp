#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "siegel/renorm1d.hpp"

using namespace siegel;
using L = double_lane;
using Q = quad_lane;
using C = cplx_t<L>;

namespace {

// Independent oracle: the exact lambda tower from pure f-orbit iteration.
template <class LL>
std::vector<cplx_t<LL>> exact_lambda_tower(int nmax)
{
    auto q = fibonacci_return_times(2 * nmax + 1);
    auto quad = quad_from_rotation<LL>(golden_theta<LL>());
    cplx_t<LL> scale = quad.c;
    std::vector<cplx_t<LL>> lams;
    for (int k = 0; k < nmax; ++k) {
        cplx_t<LL> z = scale;
        for (long long i = 0; i < q[static_cast<size_t>(2 * k + 1)]; ++i) z = z * z + quad.c;
        cplx_t<LL> lam = z / scale;
        lams.push_back(lam);
        scale *= lam;
    }
    return lams;  // lams[k] = lambda_{k+1}
}

} // namespace

TEST_CASE("orbit pair satisfies the normalization at every level")
{
    for (int lvl : {1, 2, 4, 6}) {
        auto op = golden_orbit_pair<L>(lvl);
        CHECK(std::abs(op.xi(C(0, 0)) - C(1, 0)) < 1e-11);
        C h(1e-7, 0);
        CHECK(std::abs((op.xi(h) - op.xi(-h)) / (2.0 * h)) < 1e-6);
    }
}

TEST_CASE("renorm_1d_step reproduces the exact lambda tower")
{
    auto lamsE = exact_lambda_tower<L>(8);
    // seed the operator at level 3, step to levels 4..7, compare lambdas
    auto op = golden_orbit_pair<L>(3);
    Renorm1DConfig cfg;
    Pair1D<L> pair;
    pair.eta.tag = "eta";
    pair.xi.tag = "xi";
    pair.eta.patches.push_back(fit_taylor<L>([&](C z) { return op.eta(z); },
                                             make_c<L>(cfg.main_center), cfg.main_radius_eta, cfg.ncoef));
    pair.eta.patches.push_back(fit_taylor<L>([&](C z) { return op.eta(z); },
                                             make_c<L>(cfg.lobe_center), cfg.lobe_radius_eta, cfg.ncoef));
    pair.xi.patches.push_back(fit_taylor<L>([&](C z) { return op.xi(z); },
                                            make_c<L>(cfg.main_center), cfg.main_radius_xi, cfg.ncoef));
    pair.xi.patches.push_back(fit_taylor<L>([&](C z) { return op.xi(z); },
                                            make_c<L>(cfg.lobe_center), cfg.lobe_radius_xi, cfg.ncoef));
    for (int k = 4; k <= 7; ++k) {
        auto st = renorm_1d_step(pair, cfg);
        INFO("level " << k);
        CHECK(std::abs(st.lambda - lamsE[static_cast<size_t>(k - 1)]) < 2e-7);
        CHECK(std::abs(st.c) < 1e-10);  // c vanishes identically at b=0
        pair = st.pair;
    }
    // normalization preserved exactly by construction
    CHECK(std::abs(pair.xi(C(0, 0)) - C(1, 0)) < 1e-9);
}

TEST_CASE("fixed point: lambda* inside the disk, identities hold")
{
    auto fp = fixed_point_1d<L>(1e-9, 40);
    CHECK(std::abs(fp.lambda) < 1.0);
    CHECK(std::abs(fp.lambda) > 0.3);
    // lambda* = eta*(1) = eta*(xi*(0))
    CHECK(std::abs(fp.pair.eta(C(1, 0)) - fp.lambda) < 1e-7);
    CHECK(std::abs(fp.pair.xi(C(0, 0)) - C(1, 0)) < 1e-9);

    // functional equations at sample points:
    //   lambda^{-1} eta xi (lambda x) = xi(x)
    //   lambda^{-1} eta (lambda xi(x)) = eta(x)   [commuting form]
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ur(0.0, 0.45), ua(0, 6.283);
    for (int i = 0; i < 12; ++i) {
        C x = C(0.35, 0) + std::polar(ur(rng), ua(rng));
        C lhs = fp.pair.eta(fp.pair.xi(fp.lambda * x)) / fp.lambda;
        CHECK(std::abs(lhs - fp.pair.xi(x)) < 3e-7);
        C lhs2 = fp.pair.eta(fp.lambda * fp.pair.xi(x)) / fp.lambda;
        CHECK(std::abs(lhs2 - fp.pair.eta(x)) < 3e-7);
    }

    // phi*(1) = 1 (cap fixed point) and eta*(phi*(x)) = lambda* x
    CHECK(std::abs(phi_star(fp, C(1, 0)) - C(1, 0)) < 1e-7);
    C x(0.6, 0.1);
    CHECK(std::abs(fp.pair.eta(phi_star(fp, x)) - fp.lambda * x) < 1e-9);
}

TEST_CASE("fixed point lambda agrees with the deep exact tower")
{
    auto fp = fixed_point_1d<L>(1e-9, 40);
    auto lamsE = exact_lambda_tower<L>(13);
    CHECK(std::abs(fp.lambda - lamsE.back()) < 2e-5);
}

TEST_CASE("lambda* stable between iteration budgets (self-consistency)")
{
    auto fp1 = fixed_point_1d<L>(1e-10, 14);
    auto fp2 = fixed_point_1d<L>(1e-10, 16);
    CHECK(std::abs(fp1.lambda - fp2.lambda) < 1e-6);
}

TEST_CASE("extended lane reaches a deeper fixed point")
{
    auto fp = fixed_point_1d<Q>(real_t<Q>(1e-17), 40);
    auto lamsE = exact_lambda_tower<Q>(16);
    CHECK(to_d(abs(fp.lambda - lamsE.back())) < 1e-7);
    CHECK(to_d(fp.err) < 1e-16);
}
