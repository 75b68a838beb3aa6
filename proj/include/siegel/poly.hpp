#pragma once

// Taylor-patch representations of analytic maps. A map component is a small
// set of disk patches (center, sampling radius, coefficients); evaluation
// dispatches to the patch with the smallest relative distance and fails
// loudly when a point escapes every patch beyond the guard factor --
// extrapolating that far would amplify coefficient noise like (d/R)^N.

#include <vector>
#include <functional>
#include <string>

#include "siegel/scalar.hpp"
#include "siegel/error.hpp"

namespace siegel {

template <class L> struct TaylorPatch {
    cplx_t<L> center;
    real_t<L> radius = real_t<L>(1);
    std::vector<cplx_t<L>> coef;  // coef[k] multiplies (z - center)^k

    cplx_t<L> eval(cplx_t<L> z) const
    {
        cplx_t<L> u = z - center, r{};
        for (size_t k = coef.size(); k-- > 0;) r = r * u + coef[k];
        return r;
    }
    cplx_t<L> deriv(cplx_t<L> z) const
    {
        cplx_t<L> u = z - center, r{};
        for (size_t k = coef.size(); k-- > 1;) r = r * u + real_t<L>(static_cast<double>(k)) * coef[k];
        return r;
    }
    cplx_t<L> deriv2(cplx_t<L> z) const
    {
        cplx_t<L> u = z - center, r{};
        for (size_t k = coef.size(); k-- > 2;)
            r = r * u + real_t<L>(static_cast<double>(k * (k - 1))) * coef[k];
        return r;
    }
};

// Taylor coefficients about `center` from roots-of-unity samples on
// |z - center| = radius (trapezoid rule = exact DFT; 2x oversampling).
template <class L>
TaylorPatch<L> fit_taylor(const std::function<cplx_t<L>(cplx_t<L>)>& f,
                          cplx_t<L> center, real_t<L> radius, int ncoef)
{
    const int m = 2 * ncoef;
    std::vector<cplx_t<L>> vals(m);
    real_t<L> two_pi = real_t<L>(2) * lane_pi<L>();
    for (int j = 0; j < m; ++j) {
        cplx_t<L> w = center + radius * unit_circle<L>(two_pi * real_t<L>(j) / real_t<L>(m));
        vals[j] = f(w);
    }
    TaylorPatch<L> p;
    p.center = center;
    p.radius = radius;
    p.coef.resize(static_cast<size_t>(ncoef));
    real_t<L> rpow(1);
    for (int k = 0; k < ncoef; ++k) {
        cplx_t<L> s{};
        for (int j = 0; j < m; ++j) {
            real_t<L> ang = -two_pi * real_t<L>((static_cast<long long>(k) * j) % m) / real_t<L>(m);
            s += vals[j] * unit_circle<L>(ang);
        }
        p.coef[static_cast<size_t>(k)] = s / (real_t<L>(m) * rpow);
        rpow *= radius;
    }
    return p;
}

template <class L> struct PatchedFn {
    std::vector<TaylorPatch<L>> patches;
    real_t<L> guard = real_t<L>(1.45);
    std::string tag;

    const TaylorPatch<L>& pick(cplx_t<L> z) const
    {
        using std::abs;
        size_t best = 0;
        real_t<L> bd = std::numeric_limits<real_t<L>>::infinity();
        for (size_t i = 0; i < patches.size(); ++i) {
            real_t<L> d = abs(z - patches[i].center) / patches[i].radius;
            if (d < bd) { bd = d; best = i; }
        }
        if (patches.empty() || bd > guard)
            throw InversionFailure("patched map '" + tag + "': argument escaped domain (rel dist " +
                                   std::to_string(to_d(bd)) + ")");
        return patches[best];
    }
    cplx_t<L> operator()(cplx_t<L> z) const { return pick(z).eval(z); }
    cplx_t<L> deriv(cplx_t<L> z) const { return pick(z).deriv(z); }
    cplx_t<L> deriv2(cplx_t<L> z) const { return pick(z).deriv2(z); }
};

// Bivariate patch: polynomial in (x - center) of degree nx and in y of
// degree ny (power basis; the y-dependence of everything we fit is a tiny
// analytic perturbation, so low y-degree on a generous disk is enough).
template <class L> struct TaylorPatch2 {
    cplx_t<L> center;
    real_t<L> radius = real_t<L>(1);
    int nx = 0, ny = 0;
    std::vector<cplx_t<L>> coef;  // coef[k*(ny+1)+j] multiplies (x-c)^k y^j

    const cplx_t<L>& at(int k, int j) const { return coef[static_cast<size_t>(k * (ny + 1) + j)]; }
    cplx_t<L>& at(int k, int j) { return coef[static_cast<size_t>(k * (ny + 1) + j)]; }

    // Horner in x with vector coefficients, then Horner in y.
    cplx_t<L> eval(cplx_t<L> x, cplx_t<L> y) const
    {
        cplx_t<L> u = x - center;
        cplx_t<L> acc[16];  // ny <= 15
        for (int j = 0; j <= ny; ++j) acc[j] = cplx_t<L>{};
        for (int k = nx; k >= 0; --k)
            for (int j = 0; j <= ny; ++j) acc[j] = acc[j] * u + at(k, j);
        cplx_t<L> r{};
        for (int j = ny; j >= 0; --j) r = r * y + acc[j];
        return r;
    }
    cplx_t<L> dx(cplx_t<L> x, cplx_t<L> y) const
    {
        cplx_t<L> u = x - center;
        cplx_t<L> acc[16];
        for (int j = 0; j <= ny; ++j) acc[j] = cplx_t<L>{};
        for (int k = nx; k >= 1; --k)
            for (int j = 0; j <= ny; ++j)
                acc[j] = acc[j] * u + real_t<L>(k) * at(k, j);
        cplx_t<L> r{};
        for (int j = ny; j >= 0; --j) r = r * y + acc[j];
        return r;
    }
    cplx_t<L> dy(cplx_t<L> x, cplx_t<L> y) const
    {
        cplx_t<L> u = x - center;
        cplx_t<L> acc[16];
        for (int j = 1; j <= ny; ++j) acc[j] = cplx_t<L>{};
        for (int k = nx; k >= 0; --k)
            for (int j = 1; j <= ny; ++j) acc[j] = acc[j] * u + at(k, j);
        cplx_t<L> r{};
        for (int j = ny; j >= 1; --j) r = r * y + real_t<L>(j) * acc[j];
        return r;
    }
    // y-slice as a 1D patch (coefficient of y^j).
    TaylorPatch<L> y_coef(int j) const
    {
        TaylorPatch<L> p;
        p.center = center;
        p.radius = radius;
        p.coef.resize(static_cast<size_t>(nx + 1));
        for (int k = 0; k <= nx; ++k) p.coef[static_cast<size_t>(k)] = at(k, j);
        return p;
    }
};

// Fit from samples on the torus (x-circle) x (y-circle of radius yrad).
template <class L>
TaylorPatch2<L> fit_taylor2(const std::function<cplx_t<L>(cplx_t<L>, cplx_t<L>)>& f,
                            cplx_t<L> center, real_t<L> radius, int nx,
                            real_t<L> yrad, int ny)
{
    const int mx = 2 * (nx + 1);
    const int my = ny + 1;
    real_t<L> two_pi = real_t<L>(2) * lane_pi<L>();
    std::vector<cplx_t<L>> vals(static_cast<size_t>(mx * my));
    for (int a = 0; a < mx; ++a) {
        cplx_t<L> xw = center + radius * unit_circle<L>(two_pi * real_t<L>(a) / real_t<L>(mx));
        for (int b = 0; b < my; ++b) {
            cplx_t<L> yw = yrad * unit_circle<L>(two_pi * real_t<L>(b) / real_t<L>(my));
            vals[static_cast<size_t>(a * my + b)] = f(xw, yw);
        }
    }
    TaylorPatch2<L> p;
    p.center = center;
    p.radius = radius;
    p.nx = nx;
    p.ny = ny;
    p.coef.assign(static_cast<size_t>((nx + 1) * (ny + 1)), cplx_t<L>{});
    // y-DFT per x-node, then x-DFT per y-order.
    std::vector<cplx_t<L>> g(static_cast<size_t>(mx * my));
    for (int a = 0; a < mx; ++a) {
        for (int j = 0; j < my; ++j) {
            cplx_t<L> s{};
            for (int b = 0; b < my; ++b) {
                real_t<L> ang = -two_pi * real_t<L>((j * b) % my) / real_t<L>(my);
                s += vals[static_cast<size_t>(a * my + b)] * unit_circle<L>(ang);
            }
            using std::pow;
            g[static_cast<size_t>(a * my + j)] = s / (real_t<L>(my) * pow(yrad, real_t<L>(j)));
        }
    }
    for (int j = 0; j < my; ++j) {
        real_t<L> rpow(1);
        for (int k = 0; k <= nx; ++k) {
            cplx_t<L> s{};
            for (int a = 0; a < mx; ++a) {
                real_t<L> ang = -two_pi * real_t<L>((static_cast<long long>(k) * a) % mx) / real_t<L>(mx);
                s += g[static_cast<size_t>(a * my + j)] * unit_circle<L>(ang);
            }
            p.at(k, j) = s / (real_t<L>(mx) * rpow);
            rpow *= radius;
        }
    }
    return p;
}

template <class L> struct MapComponent {
    std::vector<TaylorPatch2<L>> patches;
    real_t<L> guard = real_t<L>(1.45);
    std::string tag;

    const TaylorPatch2<L>& pick(cplx_t<L> x) const
    {
        using std::abs;
        size_t best = 0;
        real_t<L> bd = std::numeric_limits<real_t<L>>::infinity();
        for (size_t i = 0; i < patches.size(); ++i) {
            real_t<L> d = abs(x - patches[i].center) / patches[i].radius;
            if (d < bd) { bd = d; best = i; }
        }
        if (patches.empty() || bd > guard)
            throw InversionFailure("map component '" + tag + "': argument escaped domain (rel dist " +
                                   std::to_string(to_d(bd)) + ")");
        return patches[best];
    }
    cplx_t<L> eval(cplx_t<L> x, cplx_t<L> y) const { return pick(x).eval(x, y); }
    cplx_t<L> dx(cplx_t<L> x, cplx_t<L> y) const { return pick(x).dx(x, y); }
    cplx_t<L> dy(cplx_t<L> x, cplx_t<L> y) const { return pick(x).dy(x, y); }
};

} // namespace siegel
