#pragma once

// Numeric lanes. Every module is templated on a lane L supplying the real
// and complex scalar types. The default lane is IEEE binary64; the extended
// lane is __float128 (113-bit significand, at least twice the binary64
// significand width) wrapped by boost::multiprecision. The lane is chosen
// at run time by the callers (CLI / tests) via dispatch.

#include <complex>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <iomanip>
#include <string>

#include <boost/multiprecision/float128.hpp>
#include <boost/multiprecision/complex128.hpp>

namespace siegel {

struct double_lane {
    using real = double;
    using cplx = std::complex<double>;
    static constexpr const char* name = "double";
};

struct quad_lane {
    using real = boost::multiprecision::float128;
    using cplx = boost::multiprecision::complex128;
    static constexpr const char* name = "extended";
};

template <class L> using real_t = typename L::real;
template <class L> using cplx_t = typename L::cplx;

template <class L> real_t<L> lane_eps() { return std::numeric_limits<real_t<L>>::epsilon(); }

template <class L> real_t<L> lane_pi()
{
    using std::atan;
    return real_t<L>(4) * atan(real_t<L>(1));
}

template <class L> cplx_t<L> make_c(double re, double im = 0.0)
{
    return cplx_t<L>(real_t<L>(re), real_t<L>(im));
}

// e^{i t}
template <class L> cplx_t<L> unit_circle(real_t<L> t)
{
    using std::cos; using std::sin;
    return cplx_t<L>(cos(t), sin(t));
}

inline double to_d(double x) { return x; }
inline double to_d(const boost::multiprecision::float128& x) { return static_cast<double>(x); }
inline std::complex<double> to_cd(const std::complex<double>& z) { return z; }
inline std::complex<double> to_cd(const boost::multiprecision::complex128& z)
{
    return { static_cast<double>(z.real()), static_cast<double>(z.imag()) };
}

// Fixed 17-significant-digit formatting; shared by every artifact writer so
// outputs are bit-identical across runs.
template <class T> std::string fmt17(const T& x)
{
    std::ostringstream os;
    os << std::setprecision(17) << x;
    return os.str();
}

template <class T> std::string fmt17c(const T& z)
{
    return fmt17(z.real()) + (z.imag() < 0 ? "" : "+") + fmt17(z.imag()) + "i";
}

// Integer powers b^q in log-magnitude/argument form. q is always an integer
// here, so there is no branch ambiguity; the log form survives |b|^q far
// below the underflow threshold.
template <class L> struct log_pow_t {
    real_t<L> log_abs;  // log|b^q|, -inf for b = 0
    real_t<L> arg;      // arg(b^q), reduced mod 2*pi

    cplx_t<L> value() const
    {
        using std::exp; using std::cos; using std::sin;
        real_t<L> m = exp(log_abs);
        return cplx_t<L>(m * cos(arg), m * sin(arg));
    }
    bool representable() const
    {
        using std::log;
        return log_abs > log(std::numeric_limits<real_t<L>>::min()) + real_t<L>(16);
    }
};

template <class L> log_pow_t<L> log_pow(cplx_t<L> b, long long q)
{
    using std::log; using std::atan2; using std::abs;
    real_t<L> ab = abs(b);
    log_pow_t<L> r;
    if (ab == real_t<L>(0)) {
        r.log_abs = -std::numeric_limits<real_t<L>>::infinity();
        r.arg = real_t<L>(0);
        return r;
    }
    r.log_abs = real_t<L>(q) * log(ab);
    real_t<L> a = atan2(b.imag(), b.real()) * real_t<L>(q);
    real_t<L> two_pi = real_t<L>(2) * lane_pi<L>();
    using std::floor;
    a -= two_pi * floor(a / two_pi);
    r.arg = a;
    return r;
}

// Divide a complex quantity by b^q in log form (used where b^q underflows).
template <class L> cplx_t<L> div_log_pow(cplx_t<L> z, const log_pow_t<L>& p)
{
    using std::log; using std::abs; using std::atan2; using std::exp;
    using std::cos; using std::sin;
    real_t<L> az = abs(z);
    if (az == real_t<L>(0)) return z;
    real_t<L> lm = log(az) - p.log_abs;
    real_t<L> ar = atan2(z.imag(), z.real()) - p.arg;
    real_t<L> m = exp(lm);
    return cplx_t<L>(m * cos(ar), m * sin(ar));
}

} // namespace siegel
