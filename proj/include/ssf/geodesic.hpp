#pragma once

#include <span>
#include <vector>

#include "ssf/expr.hpp"
#include "ssf/frenet.hpp"
#include "ssf/grid.hpp"
#include "ssf/manifold.hpp"

namespace ssf {

struct GeodesicState {
    ChartPoint position;
    CoordVector velocity; // chart-coordinate velocity (gamma_1', gamma_2', gamma_3')
};

/// |g(gamma', gamma') - 1| at the state; the unit-speed defect.
double unit_speed_deviation(const ManifoldModel& model, const GeodesicState& state);

/// Acceleration demanded by the geodesic equation of the semi-symmetric
/// connection, solved for (gamma_1'', gamma_2'', gamma_3''). The Sasakian
/// model assembles and solves its 3x3 affine system numerically.
CoordVector geodesic_acceleration(const ManifoldModel& model, const GeodesicState& state);

struct TrajectorySample {
    double s{};
    GeodesicState state;
    double residual{}; // |nabla~_T T| with the acceleration taken from the equation
};

/// Classic fixed-step fourth-order Runge-Kutta integration of the geodesic
/// system over the grid, starting from `initial` at range.start. Validates
/// the unit-speed constraint of the initial state.
std::vector<TrajectorySample> integrate_geodesic(const ManifoldModel& model,
                                                 const GeodesicState& initial,
                                                 const GridRange& range,
                                                 double speed_tol = 1e-6);

/// Position, velocity and acceleration of an analytic curve at one parameter
/// value, for residual evaluation without an expression tree.
struct CurveStateSample {
    ChartPoint position;
    CoordVector velocity;
    CoordVector acceleration;
};

// --- Euclidean closed-form geodesics -------------------------------------

/// Constants of the Euclidean geodesic family
///   gamma_1 = e^{-c1} c2 arctan(e^{s-c1}) + c3,
///   gamma_2 = e^{-c1} c4 arctan(e^{s-c1}) + c5,
///   gamma_3 = -s + ln(e^{2s} + e^{2c1}) + c6,
/// subject to 4 e^{2 c1} = c2^2 + c4^2 (which makes the curve unit-speed).
struct E3GeodesicParams {
    E3GeodesicParams(double c1, double c2, double c3, double c4, double c5, double c6);
    double c1, c2, c3, c4, c5, c6;
};

/// The family member as an expression tree, so derivatives come from jet
/// evaluation rather than hand-differentiated formulas.
CurveExpr e3_closed_form_curve(const E3GeodesicParams& params);

ChartPoint e3_closed_form(const E3GeodesicParams& params, double s);

CurveStateSample e3_closed_form_sample(const E3GeodesicParams& params, double s);

GeodesicState e3_closed_form_state(const E3GeodesicParams& params, double s);

// --- Sasakian Riccati first integral --------------------------------------

struct R3RiccatiParams {
    double c1{};
};

/// f(s) = 2 (e^{2s} - e^{4 c1}) / (e^{2s} + e^{4 c1}); satisfies
/// 2 f' = 4 - f^2 identically.
double r3_riccati_f(const R3RiccatiParams& params, double s);

/// The quantity f = gamma_3' - gamma_1' gamma_2 that obeys the Riccati
/// equation along Sasakian geodesics.
double r3_twist(const GeodesicState& state);

/// Fits the single constant c1 so that r3_riccati_f matches the twist along
/// the trajectory, anchoring at the sample whose twist is farthest from the
/// degenerate values +-2.
R3RiccatiParams r3_riccati_fit(std::span<const TrajectorySample> samples);

// --- Hyperbolic closed-form geodesics -------------------------------------

/// Constants of the hyperbolic geodesic family
///   gamma_3 = c2 e^s / sqrt(e^{c3+4s} + 1),
///   gamma_1 = k1 + (2 c2 e^{3s+c3/2} / (3 sqrt(1+c1^2))) 2F1(3/4,3/2;7/4;-e^{4s+c3}),
///   gamma_2 = l1 + c1 (gamma_1 - k1),
/// with c2 > 0. gamma_2 carries the weight c1 relative to gamma_1, which is
/// what the unit-speed identity (gamma_1')^2 + (gamma_2')^2 + (gamma_3')^2
/// = gamma_3^2 requires.
struct H3GeodesicParams {
    H3GeodesicParams(double c1, double c2, double c3, double k1, double l1);
    double c1, c2, c3, k1, l1;
};

ChartPoint h3_closed_form(const H3GeodesicParams& params, double s);

CurveStateSample h3_closed_form_sample(const H3GeodesicParams& params, double s);

GeodesicState h3_closed_form_state(const H3GeodesicParams& params, double s);

/// Variant with equal weights on gamma_1 and gamma_2 (both carrying
/// 1/sqrt(1+c1^2)); not unit-speed unless c1 = +-1. Exposed so its geodesic
/// defect can be measured and reported.
CurveStateSample h3_equal_weight_sample(const H3GeodesicParams& params, double s);

// --- Residuals -------------------------------------------------------------

/// kappa(s) = |nabla~_T T| of the curve; zero characterizes geodesics.
/// Validates unit speed at s.
double geodesic_residual(const ManifoldModel& model, const CurveExpr& curve, double s,
                         double speed_tol = 1e-6);

/// Geodesic defect of an analytic sample; no unit-speed gate.
double geodesic_residual(const ManifoldModel& model, const CurveStateSample& sample);

} // namespace ssf
