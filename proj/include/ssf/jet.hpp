#pragma once

#include <cmath>
#include <ostream>

#include "ssf/errors.hpp"

namespace ssf {

/// Truncated Taylor jet: value and first three derivatives of a scalar
/// function of one parameter. Arithmetic follows the Leibniz and
/// Faa di Bruno expansions up to order 3, so propagating jets through a
/// formula yields exact derivatives (no finite differences).
struct Jet3 {
    double v0{}; // f
    double v1{}; // f'
    double v2{}; // f''
    double v3{}; // f'''

    constexpr Jet3() = default;
    constexpr Jet3(double v0, double v1, double v2, double v3)
        : v0(v0), v1(v1), v2(v2), v3(v3) {}

    static constexpr Jet3 constant(double c) { return {c, 0.0, 0.0, 0.0}; }
    /// The jet of the independent variable itself at value s.
    static constexpr Jet3 variable(double s) { return {s, 1.0, 0.0, 0.0}; }

    constexpr Jet3 operator-() const { return {-v0, -v1, -v2, -v3}; }

    friend constexpr Jet3 operator+(const Jet3& a, const Jet3& b) {
        return {a.v0 + b.v0, a.v1 + b.v1, a.v2 + b.v2, a.v3 + b.v3};
    }
    friend constexpr Jet3 operator-(const Jet3& a, const Jet3& b) {
        return {a.v0 - b.v0, a.v1 - b.v1, a.v2 - b.v2, a.v3 - b.v3};
    }

    // Leibniz: (fg)^(k) = sum C(k,i) f^(i) g^(k-i), k <= 3.
    friend constexpr Jet3 operator*(const Jet3& a, const Jet3& b) {
        return {a.v0 * b.v0,
                a.v1 * b.v0 + a.v0 * b.v1,
                a.v2 * b.v0 + 2.0 * a.v1 * b.v1 + a.v0 * b.v2,
                a.v3 * b.v0 + 3.0 * a.v2 * b.v1 + 3.0 * a.v1 * b.v2 + a.v0 * b.v3};
    }

    // Solve the Leibniz expansion of q*b = a order by order.
    friend Jet3 operator/(const Jet3& a, const Jet3& b) {
        if (b.v0 == 0.0) throw DomainError("division by a value that is zero");
        Jet3 q;
        q.v0 = a.v0 / b.v0;
        q.v1 = (a.v1 - q.v0 * b.v1) / b.v0;
        q.v2 = (a.v2 - 2.0 * q.v1 * b.v1 - q.v0 * b.v2) / b.v0;
        q.v3 = (a.v3 - 3.0 * q.v2 * b.v1 - 3.0 * q.v1 * b.v2 - q.v0 * b.v3) / b.v0;
        return q;
    }

    friend constexpr Jet3 operator+(const Jet3& a, double c) { return a + constant(c); }
    friend constexpr Jet3 operator+(double c, const Jet3& a) { return constant(c) + a; }
    friend constexpr Jet3 operator-(const Jet3& a, double c) { return a - constant(c); }
    friend constexpr Jet3 operator-(double c, const Jet3& a) { return constant(c) - a; }
    friend constexpr Jet3 operator*(const Jet3& a, double c) {
        return {a.v0 * c, a.v1 * c, a.v2 * c, a.v3 * c};
    }
    friend constexpr Jet3 operator*(double c, const Jet3& a) { return a * c; }
    friend Jet3 operator/(const Jet3& a, double c) { return a / constant(c); }
    friend Jet3 operator/(double c, const Jet3& a) { return constant(c) / a; }

    friend std::ostream& operator<<(std::ostream& out, const Jet3& j) {
        return out << "(" << j.v0 << ", " << j.v1 << ", " << j.v2 << ", " << j.v3 << ")";
    }
};

/// Chain rule (Faa di Bruno) for y = f(u) given the derivatives of f at u.v0.
constexpr Jet3 jet_compose(double f0, double f1, double f2, double f3, const Jet3& u) {
    return {f0,
            f1 * u.v1,
            f1 * u.v2 + f2 * u.v1 * u.v1,
            f1 * u.v3 + 3.0 * f2 * u.v1 * u.v2 + f3 * u.v1 * u.v1 * u.v1};
}

inline Jet3 sin(const Jet3& u) {
    const double s = std::sin(u.v0), c = std::cos(u.v0);
    return jet_compose(s, c, -s, -c, u);
}

inline Jet3 cos(const Jet3& u) {
    const double s = std::sin(u.v0), c = std::cos(u.v0);
    return jet_compose(c, -s, -c, s, u);
}

inline Jet3 tan(const Jet3& u) {
    const double t = std::tan(u.v0);
    const double d = 1.0 + t * t; // sec^2
    return jet_compose(t, d, 2.0 * t * d, d * (2.0 + 6.0 * t * t), u);
}

inline Jet3 exp(const Jet3& u) {
    const double e = std::exp(u.v0);
    return jet_compose(e, e, e, e, u);
}

inline Jet3 log(const Jet3& u) {
    if (!(u.v0 > 0.0)) throw DomainError("ln of a non-positive value");
    const double inv = 1.0 / u.v0;
    return jet_compose(std::log(u.v0), inv, -inv * inv, 2.0 * inv * inv * inv, u);
}

inline Jet3 atan(const Jet3& u) {
    const double d = 1.0 / (1.0 + u.v0 * u.v0);
    // d/du atan = d, then -2u d^2 and (6u^2 - 2) d^3.
    return jet_compose(std::atan(u.v0), d, -2.0 * u.v0 * d * d,
                       (6.0 * u.v0 * u.v0 - 2.0) * d * d * d, u);
}

inline Jet3 sqrt(const Jet3& u) {
    if (u.v0 == 0.0 && u.v1 == 0.0 && u.v2 == 0.0 && u.v3 == 0.0) return Jet3{};
    if (!(u.v0 > 0.0)) throw DomainError("sqrt of a non-positive value");
    const double r = std::sqrt(u.v0);
    const double inv = 1.0 / u.v0;
    return jet_compose(r, 0.5 * r * inv, -0.25 * r * inv * inv,
                       0.375 * r * inv * inv * inv, u);
}

/// Integer powers use repeated multiplication so negative bases keep their
/// sign; everything else routes through exp(e * ln b), which requires b > 0.
inline Jet3 pow(const Jet3& base, const Jet3& exponent) {
    const bool constant_exponent =
        exponent.v1 == 0.0 && exponent.v2 == 0.0 && exponent.v3 == 0.0;
    if (constant_exponent && exponent.v0 == std::floor(exponent.v0) &&
        std::abs(exponent.v0) <= 1024.0) {
        long long n = static_cast<long long>(exponent.v0);
        const bool negative = n < 0;
        if (negative) n = -n;
        Jet3 result = Jet3::constant(1.0);
        Jet3 square = base;
        while (n > 0) {
            if (n & 1) result = result * square;
            square = square * square;
            n >>= 1;
        }
        return negative ? Jet3::constant(1.0) / result : result;
    }
    if (!(base.v0 > 0.0))
        throw DomainError("pow with non-integer exponent requires a positive base");
    return exp(exponent * log(base));
}

inline Jet3 pow(const Jet3& base, double exponent) {
    return pow(base, Jet3::constant(exponent));
}

/// Jet of the derivative function: (v1, v2, v3, ?). The top coefficient of
/// the result is unknown (set to 0) and must not be consumed; truncated
/// Taylor arithmetic never feeds high coefficients into lower ones, so
/// orders 0..2 of the result stay exact.
constexpr Jet3 derivative_shift(const Jet3& u) { return {u.v1, u.v2, u.v3, 0.0}; }

inline bool jet_finite(const Jet3& u) {
    return std::isfinite(u.v0) && std::isfinite(u.v1) && std::isfinite(u.v2) &&
           std::isfinite(u.v3);
}

} // namespace ssf
