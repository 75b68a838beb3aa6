#pragma once

// Continued-fraction machinery for rotation numbers and closest return
// moments. Convention: theta in (0,1) with theta = 1/(a0 + 1/(a1 + ...)),
// q0 = 1, q1 = a0, q_{n+1} = a_n q_n + q_{n-1}.

#include <vector>
#include <utility>
#include <cstdint>

#include "siegel/scalar.hpp"
#include "siegel/error.hpp"

namespace siegel {

template <class L> real_t<L> golden_theta()
{
    using std::sqrt;
    return (sqrt(real_t<L>(5)) - real_t<L>(1)) / real_t<L>(2);
}

// Expansion stops (error) once the floating remainder drops to noise scale
// (eps * 2^40); emitting further coefficients would corrupt q_n downstream.
template <class L>
std::vector<long long> cf_expand(real_t<L> theta, int n_terms)
{
    using std::floor;
    if (n_terms < 1) throw error("cf_expand: n_terms must be >= 1");
    real_t<L> x = theta - floor(theta);  // reduce mod 1
    const real_t<L> noise = lane_eps<L>() * real_t<L>(1099511627776.0);  // 2^40
    std::vector<long long> a;
    a.reserve(static_cast<size_t>(n_terms));
    for (int i = 0; i < n_terms; ++i) {
        if (x <= noise)
            throw TerminatedExpansion("cf_expand: remainder at precision floor (rational input?)", a);
        real_t<L> inv = real_t<L>(1) / x;
        real_t<L> fl = floor(inv);
        auto ai = static_cast<long long>(to_d(fl));
        if (ai < 1) throw error("cf_expand: nonpositive coefficient (theta outside (0,1)?)");
        x = inv - fl;
        a.push_back(ai);
        if (x <= noise && i + 1 < n_terms)
            throw TerminatedExpansion("cf_expand: remainder at precision floor after a_" + std::to_string(i), a);
    }
    return a;
}

// (p_n, q_n) for n = 0..coeffs.size(); p_0/q_0 = 0/1, p_1/q_1 = 1/a0.
inline std::vector<std::pair<long long, long long>>
convergents(const std::vector<long long>& coeffs)
{
    if (coeffs.empty()) throw error("convergents: empty coefficient list");
    for (long long a : coeffs)
        if (a < 1) throw error("convergents: coefficients must be >= 1");
    std::vector<std::pair<long long, long long>> pq;
    pq.reserve(coeffs.size() + 1);
    pq.emplace_back(0, 1);                 // (p0, q0)
    pq.emplace_back(1, coeffs[0]);         // (p1, q1)
    for (size_t n = 1; n < coeffs.size(); ++n) {
        long long p, q, t;
        if (__builtin_mul_overflow(coeffs[n], pq[n].second, &t) ||
            __builtin_add_overflow(t, pq[n - 1].second, &q))
            throw IntegerOverflow("convergents: q_n exceeds integer width at n=" + std::to_string(n + 1));
        if (__builtin_mul_overflow(coeffs[n], pq[n].first, &t) ||
            __builtin_add_overflow(t, pq[n - 1].first, &p))
            throw IntegerOverflow("convergents: p_n exceeds integer width at n=" + std::to_string(n + 1));
        pq.emplace_back(p, q);
    }
    return pq;
}

// q_0..q_{n_max} for the all-ones expansion (the Fibonacci sequence).
inline std::vector<long long> fibonacci_return_times(int n_max)
{
    if (n_max < 0) throw error("fibonacci_return_times: n_max must be >= 0");
    std::vector<long long> q{1};
    if (n_max >= 1) q.push_back(1);
    for (int n = 2; n <= n_max; ++n) {
        long long v;
        if (__builtin_add_overflow(q[n - 1], q[n - 2], &v))
            throw IntegerOverflow("fibonacci_return_times: overflow at n=" + std::to_string(n));
        q.push_back(v);
    }
    return q;
}

// Smallest C with q_{n+1} <= C q_n^{d-1} over the stored convergents.
template <class L>
real_t<L> diophantine_order_witness(const std::vector<long long>& coeffs, real_t<L> d)
{
    using std::pow;
    auto pq = convergents(coeffs);
    if (pq.size() < 2) throw error("diophantine_order_witness: need >= 2 convergents");
    real_t<L> c = 0;
    for (size_t n = 0; n + 1 < pq.size(); ++n) {
        real_t<L> qn = real_t<L>(static_cast<double>(pq[n].second));
        real_t<L> qn1 = real_t<L>(static_cast<double>(pq[n + 1].second));
        real_t<L> r = qn1 / pow(qn, d - real_t<L>(1));
        if (r > c) c = r;
    }
    return c;
}

template <class L> struct RotationNumber {
    real_t<L> theta;
    std::vector<long long> coeffs;
    std::vector<std::pair<long long, long long>> pq;  // convergents (p_n, q_n)

    long long q(size_t n) const
    {
        if (n >= pq.size()) throw DepthExceeded("RotationNumber: q_" + std::to_string(n) + " not stored");
        return pq[n].second;
    }
};

template <class L>
RotationNumber<L> make_rotation(real_t<L> theta, int terms)
{
    RotationNumber<L> r;
    r.theta = theta;
    r.coeffs = cf_expand<L>(theta, terms);
    r.pq = convergents(r.coeffs);
    return r;
}

} // namespace siegel
