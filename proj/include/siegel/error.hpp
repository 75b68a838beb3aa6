#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace siegel {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numeric-regime errors (CLI exit code 3).
struct OutOfRegime : error { using error::error; };
struct UnderflowGuard : error { using error::error; };
struct NoCancellation : error {
    double achieved_min = 0;
    explicit NoCancellation(const std::string& m, double amin = 0)
        : error(m), achieved_min(amin) {}
};

struct TerminatedExpansion : error {
    std::vector<long long> partial;
    TerminatedExpansion(const std::string& m, std::vector<long long> p)
        : error(m), partial(std::move(p)) {}
};
struct IntegerOverflow : error { using error::error; };
struct Overflow : error {
    long long step = -1;
    explicit Overflow(const std::string& m, long long s = -1) : error(m), step(s) {}
};
struct SmallDivisorBreakdown : error { using error::error; };
struct ResonanceDetected : error { using error::error; };
struct InversionFailure : error { using error::error; };
struct NormalizationFailure : error { using error::error; };
struct IllConditioned : error { using error::error; };
struct NoConvergence : error { using error::error; };
struct DepthExceeded : error { using error::error; };
struct DegenerateCurve : error { using error::error; };
struct ConfigError : error { using error::error; };

} // namespace siegel
