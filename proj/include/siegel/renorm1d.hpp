#pragma once

// One-dimensional golden-mean pair renormalization: the b = 0 degeneration
// of the pair operator. A pair (eta, xi) renormalizes to
//   xi' = l^{-1} . eta . xi . l        l(x) = lambda x + c
//   eta' = l^{-1} . eta . l . xi'      (equals l^{-1}.eta.xi.eta.l because
//                                       eta and xi commute along the orbit)
// with (lambda, c) chosen so xi'(0) = 1 and xi''... xi'(0)' = 0. At the
// fixed point this is lambda*^{-1} eta* xi* eta*(lambda* x) = eta*(x) and
// lambda*^{-1} eta* xi*(lambda* x) = xi*(x), lambda* = eta*(xi*(0)) = eta*(1).

#include <functional>

#include "siegel/poly.hpp"
#include "siegel/maps.hpp"
#include "siegel/arithmetic.hpp"

namespace siegel {

struct Renorm1DConfig {
    int ncoef = 49;
    double main_center = 0.35;
    double main_radius_xi = 0.80, main_radius_eta = 0.70;
    double lobe_center = 1.0;
    double lobe_radius_xi = 0.50, lobe_radius_eta = 0.45;
    double guard = 1.45;
    int newton_max = 60;
};

template <class L> struct Pair1D {
    PatchedFn<L> eta, xi;
};

template <class L> struct Step1D {
    Pair1D<L> pair;
    cplx_t<L> lambda, c;
};

namespace detail {

// critical point of G = eta(xi(.)) nearest 0 (Newton on G').
template <class L>
cplx_t<L> critical_point_of_composition(const PatchedFn<L>& eta, const PatchedFn<L>& xi,
                                         cplx_t<L> seed, int max_iter)
{
    using std::abs; using std::sqrt;
    cplx_t<L> c = seed;
    real_t<L> tol = sqrt(lane_eps<L>()) * lane_eps<L>() * real_t<L>(0) + lane_eps<L>() * real_t<L>(64);
    for (int it = 0; it < max_iter; ++it) {
        cplx_t<L> u = xi(c);
        cplx_t<L> g1 = eta.deriv(u) * xi.deriv(c);
        cplx_t<L> g2 = eta.deriv2(u) * xi.deriv(c) * xi.deriv(c) + eta.deriv(u) * xi.deriv2(c);
        if (abs(g2) == real_t<L>(0))
            throw NormalizationFailure("1d normalization: vanishing second derivative");
        cplx_t<L> step = g1 / g2;
        c -= step;
        if (abs(step) < tol) return c;
        if (abs(c) > real_t<L>(0.5))
            throw NormalizationFailure("1d normalization: critical point wandered away from 0");
    }
    throw NormalizationFailure("1d normalization: Newton did not converge");
}

} // namespace detail

template <class L>
Step1D<L> renorm_1d_step(const Pair1D<L>& p, const Renorm1DConfig& cfg = {})
{
    using C = cplx_t<L>;
    Step1D<L> out;
    out.c = detail::critical_point_of_composition<L>(p.eta, p.xi, C{}, cfg.newton_max);
    out.lambda = p.eta(p.xi(out.c)) - out.c;
    C lam = out.lambda, c = out.c;

    auto xi_chain = [&](C x) { return (p.eta(p.xi(lam * x + c)) - c) / lam; };
    auto eta_chain = [&](C x) { return (p.eta(lam * xi_chain(x) + c) - c) / lam; };

    auto fit_fn = [&](const std::function<C(C)>& f, double rm, double rl, const char* tag) {
        PatchedFn<L> g;
        g.guard = real_t<L>(cfg.guard);
        g.tag = tag;
        g.patches.push_back(fit_taylor<L>(f, make_c<L>(cfg.main_center), real_t<L>(rm), cfg.ncoef));
        g.patches.push_back(fit_taylor<L>(f, make_c<L>(cfg.lobe_center), real_t<L>(rl), cfg.ncoef));
        return g;
    };
    out.pair.xi = fit_fn(xi_chain, cfg.main_radius_xi, cfg.lobe_radius_xi, "xi");
    out.pair.eta = fit_fn(eta_chain, cfg.main_radius_eta, cfg.lobe_radius_eta, "eta");
    return out;
}

// Exact pair of the golden quadratic at renormalization level k via orbit
// iteration: xi_k(x) = f^{q_{2k}}(T_k x)/T_k, eta_k uses q_{2k+1}, where
// T_k = c0 lambda_1 ... lambda_k (all affine corrections vanish at b = 0).
template <class L> struct OrbitPair1D {
    QuadParams<L> quad;
    cplx_t<L> scale;      // T_k
    long long m_xi, m_eta;

    cplx_t<L> f_iter(cplx_t<L> z, long long m) const
    {
        for (long long i = 0; i < m; ++i) z = z * z + quad.c;
        return z;
    }
    cplx_t<L> eta(cplx_t<L> x) const { return f_iter(scale * x, m_eta) / scale; }
    cplx_t<L> xi(cplx_t<L> x) const { return f_iter(scale * x, m_xi) / scale; }
};

template <class L> OrbitPair1D<L> golden_orbit_pair(int level)
{
    auto q = fibonacci_return_times(2 * level + 1);
    OrbitPair1D<L> op;
    op.quad = quad_from_rotation<L>(golden_theta<L>());
    op.scale = op.quad.c;
    for (int k = 0; k < level; ++k) {
        cplx_t<L> lam = op.f_iter(op.scale, q[static_cast<size_t>(2 * k + 1)]) / op.scale;
        op.scale *= lam;
    }
    op.m_xi = q[static_cast<size_t>(2 * level)];
    op.m_eta = q[static_cast<size_t>(2 * level + 1)];
    return op;
}

template <class L> struct FixedPoint1D {
    Pair1D<L> pair;
    cplx_t<L> lambda;     // lambda*
    real_t<L> err;        // sup distance between the last two iterates
    int iterations;
    int seed_level;
};

// Iterates the operator from the (exactly evaluated) level-3 pair of the
// golden quadratic until successive pairs differ by < tol in sup norm on a
// probe circle. The renormalization is hyperbolic, so roundoff eventually
// excites the unstable direction; we return the best iterate seen.
template <class L>
FixedPoint1D<L> fixed_point_1d(real_t<L> tol, int max_iter = 40, const Renorm1DConfig& cfg = {})
{
    using C = cplx_t<L>;
    using std::abs;
    const int seed_level = 3;
    auto op = golden_orbit_pair<L>(seed_level);

    Pair1D<L> cur;
    auto mk = [&](auto&& fn, double rm, double rl, const char* tag) {
        PatchedFn<L> g;
        g.guard = real_t<L>(cfg.guard);
        g.tag = tag;
        g.patches.push_back(fit_taylor<L>(fn, make_c<L>(cfg.main_center), real_t<L>(rm), cfg.ncoef));
        g.patches.push_back(fit_taylor<L>(fn, make_c<L>(cfg.lobe_center), real_t<L>(rl), cfg.ncoef));
        return g;
    };
    cur.eta = mk([&](C z) { return op.eta(z); }, cfg.main_radius_eta, cfg.lobe_radius_eta, "eta*");
    cur.xi = mk([&](C z) { return op.xi(z); }, cfg.main_radius_xi, cfg.lobe_radius_xi, "xi*");

    // probe points for the sup metric
    std::vector<C> probes;
    for (int j = 0; j < 17; ++j) {
        real_t<L> ang = real_t<L>(2) * lane_pi<L>() * real_t<L>(j) / real_t<L>(17);
        probes.push_back(make_c<L>(cfg.main_center) + real_t<L>(0.55) * unit_circle<L>(ang));
    }

    FixedPoint1D<L> best;
    best.err = std::numeric_limits<real_t<L>>::infinity();
    best.iterations = 0;
    best.seed_level = seed_level;
    int grow_streak = 0;
    real_t<L> prev_d = best.err;
    cplx_t<L> lam_prev{};
    for (int it = 1; it <= max_iter; ++it) {
        auto st = renorm_1d_step(cur, cfg);
        real_t<L> d = 0;
        for (auto z : probes) {
            real_t<L> de = abs(st.pair.eta(z) - cur.eta(z));
            real_t<L> dx = abs(st.pair.xi(z) - cur.xi(z));
            if (de > d) d = de;
            if (dx > d) d = dx;
        }
        cur = st.pair;
        lam_prev = st.lambda;
        if (d < best.err) {
            best.pair = cur;
            best.lambda = st.lambda;
            best.err = d;
            best.iterations = it;
        }
        if (d < tol) return best;
        grow_streak = (d > prev_d) ? grow_streak + 1 : 0;
        prev_d = d;
        if (grow_streak >= 3) break;  // unstable direction has taken over
    }
    if (best.err > tol * real_t<L>(1e6))
        throw NoConvergence("fixed_point_1d: no convergence (best sup distance " +
                            std::to_string(to_d(best.err)) + ")");
    return best;
}

// phi*(x) = eta*^{-1}(lambda* x): Newton anchored at eta*(1) = lambda*.
template <class L>
cplx_t<L> phi_star(const FixedPoint1D<L>& fp, cplx_t<L> x, int max_iter = 60)
{
    using std::abs;
    cplx_t<L> target = fp.lambda * x;
    cplx_t<L> s = cplx_t<L>(real_t<L>(1), real_t<L>(0)) +
                  (target - fp.lambda) / fp.pair.eta.deriv(make_c<L>(1));
    for (int it = 0; it < max_iter; ++it) {
        cplx_t<L> r = fp.pair.eta(s) - target;
        cplx_t<L> d = fp.pair.eta.deriv(s);
        if (abs(d) == real_t<L>(0)) throw InversionFailure("phi_star: critical point hit");
        cplx_t<L> step = r / d;
        s -= step;
        if (abs(step) < lane_eps<L>() * real_t<L>(128) * (real_t<L>(1) + abs(s))) return s;
    }
    throw InversionFailure("phi_star: Newton did not converge");
}

} // namespace siegel
