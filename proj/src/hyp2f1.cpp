#include "ssf/hyp2f1.hpp"

#include <cmath>
#include <cstdint>

#include "ssf/errors.hpp"

namespace ssf {

namespace {

constexpr std::int64_t kMaxTerms = 20'000'000;

// Power series sum_n (a)_n (b)_n / ((c)_n n!) z^n. Truncates when the term
// magnitude stays below 1e-17 of the partial sum for three consecutive terms.
double series_2f1(double a, double b, double c, double z) {
    double sum = 1.0;
    double term = 1.0;
    int small_streak = 0;
    for (std::int64_t n = 0; n < kMaxTerms; ++n) {
        const double dn = static_cast<double>(n);
        term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) {
            if (++small_streak >= 3) return sum;
        } else {
            small_streak = 0;
        }
    }
    throw RangeError("hypergeometric series did not converge (argument too close to the "
                     "radius of convergence)");
}

} // namespace

double gauss_2f1(const Hyp2F1Request& request) {
    const double a = request.a, b = request.b, c = request.c, z = request.z;
    if (c <= 0.0 && c == std::floor(c))
        throw ParameterError("hypergeometric parameter c must not be a non-positive integer");
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(z))
        throw ParameterError("hypergeometric arguments must be finite");
    if (z > 0.5)
        throw RangeError("argument z > 0.5 is outside the supported region (z <= 0 or |z| <= 0.5)");
    if (z == 0.0) return 1.0;
    if (z >= -0.5) return series_2f1(a, b, c, z);
    // Pfaff: maps z < -0.5 to w = z/(z-1) in (1/3, 1).
    const double w = z / (z - 1.0);
    return std::pow(1.0 - z, -a) * series_2f1(a, c - b, c, w);
}

} // namespace ssf
