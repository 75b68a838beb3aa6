#pragma once

// The quadratic family f_c(z) = z^2 + c and the Henon family
// H_{c,b}(x,y) = (x^2 + c - b y, x), both parametrized by fixed-point
// multiplier data.

#include <utility>

#include "siegel/scalar.hpp"
#include "siegel/error.hpp"

namespace siegel {

template <class L> struct pt2 {
    cplx_t<L> x, y;
};

template <class L> struct QuadParams {
    cplx_t<L> c, mu, x_fix;
};

template <class L> QuadParams<L> quad_from_multiplier(cplx_t<L> mu)
{
    using std::abs;
    if (abs(mu) == real_t<L>(0)) throw error("quad_from_multiplier: mu must be nonzero");
    QuadParams<L> p;
    p.mu = mu;
    p.c = mu / real_t<L>(2) - mu * mu / real_t<L>(4);
    p.x_fix = mu / real_t<L>(2);
    return p;
}

template <class L> QuadParams<L> quad_from_rotation(real_t<L> theta)
{
    return quad_from_multiplier<L>(unit_circle<L>(real_t<L>(2) * lane_pi<L>() * theta));
}

template <class L> cplx_t<L> quad_apply(const QuadParams<L>& p, cplx_t<L> z)
{
    return z * z + p.c;
}

template <class L> struct HenonParams {
    cplx_t<L> c, b, mu, nu, x_fix;
    real_t<L> epsilon_bar;   // configured smallness threshold
    bool small_jacobian;     // |b| < epsilon_bar; results outside are tagged
    real_t<L> escape_bound;
};

template <class L>
HenonParams<L> henon_from_rotation(real_t<L> theta, cplx_t<L> b,
                                   real_t<L> epsilon_bar = real_t<L>(0.125),
                                   real_t<L> escape_bound = real_t<L>(1e8))
{
    using std::abs;
    if (abs(b) >= real_t<L>(1))
        throw OutOfRegime("henon_from_rotation: |b| >= 1 (area-expanding)");
    HenonParams<L> p;
    p.mu = unit_circle<L>(real_t<L>(2) * lane_pi<L>() * theta);
    p.b = b;
    p.nu = b / p.mu;
    cplx_t<L> s = (p.mu + p.nu) / real_t<L>(2);
    p.c = (cplx_t<L>(real_t<L>(1), real_t<L>(0)) + p.mu * p.nu) * s - s * s;
    p.x_fix = s;
    p.epsilon_bar = epsilon_bar;
    p.small_jacobian = abs(b) < epsilon_bar;
    p.escape_bound = escape_bound;
    return p;
}

template <class L> pt2<L> henon_apply(const HenonParams<L>& p, pt2<L> z)
{
    using std::abs;
    pt2<L> w{z.x * z.x + p.c - p.b * z.y, z.x};
    if (abs(w.x) > p.escape_bound || abs(w.y) > p.escape_bound)
        throw Overflow("henon_apply: orbit escaped the configured bound");
    return w;
}

template <class L> pt2<L> henon_iterate(const HenonParams<L>& p, pt2<L> z, long long m)
{
    using std::abs;
    if (m < 0) throw error("henon_iterate: m must be >= 0");
    for (long long i = 0; i < m; ++i) {
        z = pt2<L>{z.x * z.x + p.c - p.b * z.y, z.x};
        if (abs(z.x) > p.escape_bound || abs(z.y) > p.escape_bound)
            throw Overflow("henon_iterate: orbit escaped at step " + std::to_string(i + 1), i + 1);
    }
    return z;
}

// Differential of H at a point: [[2x, -b], [1, 0]].
template <class L> cplx_t<L> henon_jacobian_det(const HenonParams<L>& p)
{
    return p.b;  // constant Jacobian
}

// Eigenvalues of the differential at the fixed point, ordered so the first
// is closer to mu.
template <class L> std::pair<cplx_t<L>, cplx_t<L>>
fixed_point_eigenvalues(const HenonParams<L>& p)
{
    using std::sqrt; using std::abs;
    cplx_t<L> tr = real_t<L>(2) * p.x_fix;
    cplx_t<L> disc = sqrt(tr * tr - real_t<L>(4) * p.b);
    cplx_t<L> l1 = (tr + disc) / real_t<L>(2);
    cplx_t<L> l2 = (tr - disc) / real_t<L>(2);
    if (abs(l1 - p.mu) > abs(l2 - p.mu)) std::swap(l1, l2);
    return {l1, l2};
}

// Max relative mismatch between (mu, nu) and the differential's spectrum.
template <class L> real_t<L> multiplier_residual(const HenonParams<L>& p)
{
    using std::abs; using std::max;
    auto [l1, l2] = fixed_point_eigenvalues(p);
    real_t<L> r1 = abs(l1 - p.mu) / max(real_t<L>(1), abs(p.mu));
    real_t<L> r2 = abs(l2 - p.nu) / max(real_t<L>(1), abs(p.nu));
    return max(r1, r2);
}

} // namespace siegel
