#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ssf/grid.hpp"
#include "ssf/manifold.hpp"

namespace ssf {

struct FrenetTolerances {
    double eps_geo = 1e-7;   // curvature at or below this means order 1
    double eps_tor = 1e-7;   // torsion at or below this means order 2
    double eps_const = 1e-6; // relative constancy threshold for circle/helix
    double speed_tol = 1e-6; // allowed |g(T,T) - 1|
};

/// Frenet data of a curve at one parameter value, built with the
/// semi-symmetric connection: T = gamma', kappa = |nabla~_T T|,
/// N = nabla~_T T / kappa, tau = |nabla~_T N + kappa T|, B the unit vector
/// in that direction. N, tau and B are present only where the order admits
/// them.
struct FrenetSample {
    double s{};
    FrameVector T;
    double kappa{};
    std::optional<FrameVector> N;
    std::optional<double> tau;
    std::optional<FrameVector> B;
    int order = 1; // 1 geodesic, 2 when nabla~_T N is parallel to T, 3 otherwise
};

enum class CurveKind { Geodesic, Circle, Helix, GenericOrder2, GenericOrder3 };

const char* curve_kind_name(CurveKind kind);

struct CurveClassification {
    int order = 1;
    CurveKind kind = CurveKind::Geodesic;
    std::pair<double, double> kappa_range{0.0, 0.0};
    std::optional<std::pair<double, double>> tau_range;
    std::vector<double> singular_points; // isolated grid points where the order drops
};

/// Computes the full Frenet apparatus at s. Throws NotUnitSpeedError when
/// |g(T,T) - 1| exceeds tols.speed_tol.
FrenetSample apparatus_at(const ManifoldModel& model, const CurveExpr& curve, double s,
                          const FrenetTolerances& tols = {});

/// nabla~_T nabla~_T T, computed by differentiating the frame components of
/// nabla~_T T (this consumes gamma''') and applying the covariant engine
/// once more. For order-3 curves it equals -kappa^2 T + kappa' N
/// + kappa tau B.
FrameVector second_covariant(const ManifoldModel& model, const CurveExpr& curve, double s,
                             const FrenetTolerances& tols = {});

/// Classifies the curve over a sample grid. Isolated points where the
/// pointwise order drops below the interval order are reported as singular
/// and excluded from the order and constancy decisions.
CurveClassification classify_interval(const ManifoldModel& model, const CurveExpr& curve,
                                      const GridRange& range, const FrenetTolerances& tols = {});

/// Measured speed sqrt(g(gamma', gamma')) at s.
double curve_speed(const ManifoldModel& model, const CurveExpr& curve, double s);

/// Geodesic defect |nabla~_T T| of a curve known only through position,
/// velocity and acceleration at one parameter value. No unit-speed gate.
double geodesic_defect(const ManifoldModel& model, const ChartPoint& position,
                       const CoordVector& velocity, const CoordVector& acceleration);

} // namespace ssf
