#pragma once

namespace ssf {

/// Evaluation request for the Gauss hypergeometric function 2F1(a,b;c;z).
/// Supported arguments: the whole half-line z <= 0 and small positive
/// z <= 0.5. c must not be a non-positive integer.
struct Hyp2F1Request {
    double a{};
    double b{};
    double c{};
    double z{};
};

/// 2F1(a,b;c;z). Uses the defining power series for |z| <= 0.5; for z < -0.5
/// it routes through the Pfaff transformation
///   2F1(a,b;c;z) = (1-z)^(-a) 2F1(a, c-b; c; z/(z-1)),
/// whose mapped argument lies in (0,1). Throws ParameterError when c is a
/// non-positive integer and RangeError for z > 0.5 or when the series fails
/// to converge.
double gauss_2f1(const Hyp2F1Request& request);

inline double gauss_2f1(double a, double b, double c, double z) {
    return gauss_2f1(Hyp2F1Request{a, b, c, z});
}

} // namespace ssf
