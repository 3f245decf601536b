#include "ssf/frenet.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ssf {

namespace {

Jet3 frame_norm_squared(const std::array<Jet3, 3>& v) {
    return v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
}

FrameVector value_of(const std::array<Jet3, 3>& v) {
    return {v[0].v0, v[1].v0, v[2].v0};
}

void require_unit_speed(double speed_sq, double s, double speed_tol) {
    if (std::abs(speed_sq - 1.0) > speed_tol) {
        const double speed = std::sqrt(std::max(speed_sq, 0.0));
        throw NotUnitSpeedError("curve is not unit-speed at s = " + std::to_string(s) +
                                    " (measured speed " + std::to_string(speed) + ")",
                                speed);
    }
}

struct Apparatus {
    CurveFrameState state;
    std::array<Jet3, 3> accel; // nabla~_T T, trustworthy to order 1
    double kappa{};
};

Apparatus apparatus_jets(const ManifoldModel& model, const CurveExpr& curve, double s,
                         const FrenetTolerances& tols) {
    Apparatus app;
    app.state = curve_frame_state(model, curve, s);
    require_unit_speed(frame_norm_squared(app.state.tangent).v0, s, tols.speed_tol);
    app.accel = ss_derivative_jets(model, app.state.tangent, app.state.tangent);
    app.kappa = norm(value_of(app.accel));
    return app;
}

} // namespace

const char* curve_kind_name(CurveKind kind) {
    switch (kind) {
        case CurveKind::Geodesic: return "geodesic";
        case CurveKind::Circle: return "circle";
        case CurveKind::Helix: return "helix";
        case CurveKind::GenericOrder2: return "generic-order-2";
        case CurveKind::GenericOrder3: return "generic-order-3";
    }
    return "?";
}

FrenetSample apparatus_at(const ManifoldModel& model, const CurveExpr& curve, double s,
                          const FrenetTolerances& tols) {
    const Apparatus app = apparatus_jets(model, curve, s, tols);

    FrenetSample sample;
    sample.s = s;
    sample.T = value_of(app.state.tangent);
    sample.kappa = app.kappa;
    if (app.kappa <= tols.eps_geo) {
        sample.order = 1;
        return sample;
    }

    // N = nabla~_T T / kappa as jets; dividing by the kappa jet carries the
    // -kappa'/kappa^2 term of nabla~_T N automatically.
    const Jet3 kappa_jet = sqrt(frame_norm_squared(app.accel));
    const std::array<Jet3, 3> normal = {app.accel[0] / kappa_jet, app.accel[1] / kappa_jet,
                                        app.accel[2] / kappa_jet};
    sample.N = value_of(normal);

    const std::array<Jet3, 3> dN = ss_derivative_jets(model, normal, app.state.tangent);
    const FrameVector tau_b = value_of(dN) + app.kappa * sample.T;
    const double tau = norm(tau_b);
    if (tau <= tols.eps_tor) {
        sample.order = 2;
        return sample;
    }
    sample.order = 3;
    sample.tau = tau;
    sample.B = tau_b / tau;
    return sample;
}

FrameVector second_covariant(const ManifoldModel& model, const CurveExpr& curve, double s,
                             const FrenetTolerances& tols) {
    const Apparatus app = apparatus_jets(model, curve, s, tols);
    return value_of(ss_derivative_jets(model, app.accel, app.state.tangent));
}

CurveClassification classify_interval(const ManifoldModel& model, const CurveExpr& curve,
                                      const GridRange& range, const FrenetTolerances& tols) {
    const std::vector<double> grid = range.points();
    if (grid.empty()) throw EmptyRangeError("classification range contains no grid points");

    std::vector<FrenetSample> samples;
    samples.reserve(grid.size());
    for (double s : grid) samples.push_back(apparatus_at(model, curve, s, tols));

    int max_order = 1;
    for (const FrenetSample& sample : samples) max_order = std::max(max_order, sample.order);

    // A point is singular when its order drops below the interval order while
    // both neighbors attain it: an isolated curvature zero, or an isolated
    // torsion zero on an otherwise order-3 curve.
    const std::size_t n = samples.size();
    std::vector<bool> singular(n, false);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (samples[i].order < max_order && samples[i - 1].order == max_order &&
            samples[i + 1].order == max_order)
            singular[i] = true;
    }

    CurveClassification result;
    for (std::size_t i = 0; i < n; ++i)
        if (singular[i]) result.singular_points.push_back(samples[i].s);

    double kappa_min = 0.0, kappa_max = 0.0, tau_min = 0.0, tau_max = 0.0;
    bool first = true, first_tau = true;
    int order = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (singular[i]) continue;
        const FrenetSample& sample = samples[i];
        order = std::max(order, sample.order);
        kappa_min = first ? sample.kappa : std::min(kappa_min, sample.kappa);
        kappa_max = first ? sample.kappa : std::max(kappa_max, sample.kappa);
        first = false;
        if (sample.tau) {
            tau_min = first_tau ? *sample.tau : std::min(tau_min, *sample.tau);
            tau_max = first_tau ? *sample.tau : std::max(tau_max, *sample.tau);
            first_tau = false;
        }
    }
    result.order = order;
    result.kappa_range = {kappa_min, kappa_max};
    if (!first_tau) result.tau_range = {{tau_min, tau_max}};

    const auto constant = [&](double lo, double hi) {
        return hi - lo <= tols.eps_const * std::max(1.0, std::abs(hi));
    };
    switch (order) {
        case 1:
            result.kind = CurveKind::Geodesic;
            break;
        case 2:
            result.kind = (kappa_min > tols.eps_geo && constant(kappa_min, kappa_max))
                              ? CurveKind::Circle
                              : CurveKind::GenericOrder2;
            break;
        default:
            result.kind = (constant(kappa_min, kappa_max) && result.tau_range &&
                           constant(tau_min, tau_max))
                              ? CurveKind::Helix
                              : CurveKind::GenericOrder3;
            break;
    }
    return result;
}

double curve_speed(const ManifoldModel& model, const CurveExpr& curve, double s) {
    const CurveFrameState state = curve_frame_state(model, curve, s);
    return std::sqrt(std::max(frame_norm_squared(state.tangent).v0, 0.0));
}

double geodesic_defect(const ManifoldModel& model, const ChartPoint& position,
                       const CoordVector& velocity, const CoordVector& acceleration) {
    model.require_domain(position);
    // Coordinate jets with the known orders; the cubic coefficient is unused.
    const std::array<Jet3, 3> gamma = {Jet3{position.x, velocity.x, acceleration.x, 0.0},
                                       Jet3{position.y, velocity.y, acceleration.y, 0.0},
                                       Jet3{position.z, velocity.z, acceleration.z, 0.0}};
    const std::array<Jet3, 3> vel = {derivative_shift(gamma[0]), derivative_shift(gamma[1]),
                                     derivative_shift(gamma[2])};
    const std::array<Jet3, 3> tangent = frame_component_jets(model.id(), gamma, vel);
    const std::array<Jet3, 3> accel = ss_derivative_jets(model, tangent, tangent);
    return norm(value_of(accel));
}

} // namespace ssf
