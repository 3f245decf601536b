#include "ssf/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ssf/hyp2f1.hpp"

namespace ssf {

namespace {

CoordVector operator+(const CoordVector& a, const CoordVector& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
}

CoordVector operator*(double c, const CoordVector& a) { return {c * a.x, c * a.y, c * a.z}; }

// Components of nabla~_T T for the Sasakian model, as affine functions of the
// acceleration. The xi-component's quadratic part is
// -(1/2)(gamma_1')^2 - (1/2)(gamma_2')^2, which is what the frame engine
// yields; it also makes the twist obey 2f' = 4 - f^2.
std::array<double, 3> r3_geodesic_equations(const ChartPoint& p, const CoordVector& v,
                                            const CoordVector& a) {
    const double y = p.y;
    const double lambda =
        a.y - 0.5 * y * v.x * v.y - y * v.x * v.x + v.x * v.z + 0.5 * v.y * v.z;
    const double mu = a.x + y * v.x * v.y - 0.5 * y * v.x * v.x + 0.5 * v.x * v.z - v.y * v.z;
    const double nu = -0.5 * v.x * v.x - 0.5 * v.y * v.y + a.z - a.x * y - v.x * v.y;
    return {lambda, mu, nu};
}

// Solves the 3x3 system by Gaussian elimination with partial pivoting.
CoordVector solve3(std::array<std::array<double, 3>, 3> m, std::array<double, 3> rhs) {
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int row = col + 1; row < 3; ++row)
            if (std::abs(m[row][col]) > std::abs(m[pivot][col])) pivot = row;
        std::swap(m[col], m[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        if (m[col][col] == 0.0) throw Error("singular geodesic system");
        for (int row = col + 1; row < 3; ++row) {
            const double f = m[row][col] / m[col][col];
            for (int k = col; k < 3; ++k) m[row][k] -= f * m[col][k];
            rhs[row] -= f * rhs[col];
        }
    }
    std::array<double, 3> x{};
    for (int row = 2; row >= 0; --row) {
        double acc = rhs[row];
        for (int k = row + 1; k < 3; ++k) acc -= m[row][k] * x[k];
        x[row] = acc / m[row][row];
    }
    return {x[0], x[1], x[2]};
}

CoordVector r3_acceleration(const GeodesicState& state) {
    // The equations are affine in the acceleration: extract the matrix and
    // offset numerically instead of transcribing an inverse by hand.
    const std::array<double, 3> base =
        r3_geodesic_equations(state.position, state.velocity, CoordVector{});
    std::array<std::array<double, 3>, 3> matrix{};
    for (int k = 0; k < 3; ++k) {
        const CoordVector unit{k == 0 ? 1.0 : 0.0, k == 1 ? 1.0 : 0.0, k == 2 ? 1.0 : 0.0};
        const std::array<double, 3> column =
            r3_geodesic_equations(state.position, state.velocity, unit);
        for (int row = 0; row < 3; ++row) matrix[row][k] = column[row] - base[row];
    }
    return solve3(matrix, {-base[0], -base[1], -base[2]});
}

} // namespace

double unit_speed_deviation(const ManifoldModel& model, const GeodesicState& state) {
    return std::abs(model.metric(state.position, state.velocity, state.velocity) - 1.0);
}

CoordVector geodesic_acceleration(const ManifoldModel& model, const GeodesicState& state) {
    const ChartPoint& p = state.position;
    const CoordVector& v = state.velocity;
    switch (model.id()) {
        case ModelId::E3:
            return {-v.x * v.z, -v.y * v.z, 1.0 - v.z * v.z};
        case ModelId::R3m3:
            return r3_acceleration(state);
        case ModelId::H3m1:
            model.require_domain(p);
            return {3.0 * v.x * v.z / p.z, 3.0 * v.y * v.z / p.z,
                    (v.z * v.z - 2.0 * v.x * v.x - 2.0 * v.y * v.y) / p.z};
    }
    throw Error("unreachable");
}

std::vector<TrajectorySample> integrate_geodesic(const ManifoldModel& model,
                                                 const GeodesicState& initial,
                                                 const GridRange& range, double speed_tol) {
    const std::vector<double> grid = range.points();
    const double deviation = unit_speed_deviation(model, initial);
    if (deviation > speed_tol) {
        const double speed =
            std::sqrt(std::max(model.metric(initial.position, initial.velocity, initial.velocity), 0.0));
        throw NotUnitSpeedError("initial state is not unit-speed (measured speed " +
                                    std::to_string(speed) + ")",
                                speed);
    }

    const auto derivative = [&](const GeodesicState& state) {
        return std::pair{state.velocity, geodesic_acceleration(model, state)};
    };
    const auto advance = [](const GeodesicState& state, double h,
                            const std::pair<CoordVector, CoordVector>& slope) {
        GeodesicState next;
        next.position = {state.position.x + h * slope.first.x, state.position.y + h * slope.first.y,
                         state.position.z + h * slope.first.z};
        next.velocity = state.velocity + h * slope.second;
        return next;
    };

    std::vector<TrajectorySample> samples;
    samples.reserve(grid.size());
    GeodesicState state = initial;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const CoordVector accel = geodesic_acceleration(model, state);
        samples.push_back({grid[k], state, geodesic_defect(model, state.position, state.velocity, accel)});
        if (k + 1 == grid.size()) break;

        const double h = grid[k + 1] - grid[k];
        const auto k1 = derivative(state);
        const auto k2 = derivative(advance(state, 0.5 * h, k1));
        const auto k3 = derivative(advance(state, 0.5 * h, k2));
        const auto k4 = derivative(advance(state, h, k3));
        const CoordVector dpos =
            (1.0 / 6.0) * (k1.first + 2.0 * k2.first + 2.0 * k3.first + k4.first);
        const CoordVector dvel =
            (1.0 / 6.0) * (k1.second + 2.0 * k2.second + 2.0 * k3.second + k4.second);
        state = advance(state, h, {dpos, dvel});
    }
    return samples;
}

// --- Euclidean closed form --------------------------------------------------

E3GeodesicParams::E3GeodesicParams(double c1, double c2, double c3, double c4, double c5,
                                   double c6)
    : c1(c1), c2(c2), c3(c3), c4(c4), c5(c5), c6(c6) {
    const double lhs = 4.0 * std::exp(2.0 * c1);
    const double rhs = c2 * c2 + c4 * c4;
    if (std::abs(lhs - rhs) > 1e-9 * std::max(1.0, lhs))
        throw ConstraintError("constants must satisfy 4 e^{2 c1} = c2^2 + c4^2 (got " +
                              std::to_string(lhs) + " vs " + std::to_string(rhs) + ")");
}

CurveExpr e3_closed_form_curve(const E3GeodesicParams& params) {
    const auto arctan_term = [&](double scale, double offset) {
        // scale * arctan(exp(s - c1)) + offset
        return make_add(make_mul(make_constant(scale),
                                 make_call(UnaryFn::Atan,
                                           make_call(UnaryFn::Exp,
                                                     make_sub(make_variable(),
                                                              make_constant(params.c1))))),
                        make_constant(offset));
    };
    CurveExpr curve;
    curve.components[0] = arctan_term(std::exp(-params.c1) * params.c2, params.c3);
    curve.components[1] = arctan_term(std::exp(-params.c1) * params.c4, params.c5);
    // -s + ln(e^{2s} + e^{2 c1}) + c6
    curve.components[2] = make_add(
        make_add(make_neg(make_variable()),
                 make_call(UnaryFn::Log,
                           make_add(make_call(UnaryFn::Exp,
                                              make_mul(make_constant(2.0), make_variable())),
                                    make_constant(std::exp(2.0 * params.c1))))),
        make_constant(params.c6));
    curve.source_text = print_curve(curve);
    return curve;
}

CurveStateSample e3_closed_form_sample(const E3GeodesicParams& params, double s) {
    const std::array<Jet3, 3> jets = eval_jet3(e3_closed_form_curve(params), s);
    return {{jets[0].v0, jets[1].v0, jets[2].v0},
            {jets[0].v1, jets[1].v1, jets[2].v1},
            {jets[0].v2, jets[1].v2, jets[2].v2}};
}

ChartPoint e3_closed_form(const E3GeodesicParams& params, double s) {
    return e3_closed_form_sample(params, s).position;
}

GeodesicState e3_closed_form_state(const E3GeodesicParams& params, double s) {
    const CurveStateSample sample = e3_closed_form_sample(params, s);
    return {sample.position, sample.velocity};
}

// --- Sasakian Riccati first integral ----------------------------------------

double r3_riccati_f(const R3RiccatiParams& params, double s) {
    // 2 (e^{2s} - e^{4 c1}) / (e^{2s} + e^{4 c1}) without overflow.
    return 2.0 * std::tanh(s - 2.0 * params.c1);
}

double r3_twist(const GeodesicState& state) {
    return state.velocity.z - state.velocity.x * state.position.y;
}

R3RiccatiParams r3_riccati_fit(std::span<const TrajectorySample> samples) {
    if (samples.empty()) throw EmptyRangeError("cannot fit the Riccati constant to no samples");
    const TrajectorySample* anchor = &samples[0];
    for (const TrajectorySample& sample : samples)
        if (std::abs(r3_twist(sample.state)) < std::abs(r3_twist(anchor->state))) anchor = &sample;
    const double f = r3_twist(anchor->state);
    if (std::abs(f) >= 2.0)
        throw ConstraintError("twist at the anchor sample is degenerate (|f| >= 2)");
    return {0.5 * (anchor->s - std::atanh(0.5 * f))};
}

// --- Hyperbolic closed form --------------------------------------------------

H3GeodesicParams::H3GeodesicParams(double c1, double c2, double c3, double k1, double l1)
    : c1(c1), c2(c2), c3(c3), k1(k1), l1(l1) {
    if (!(c2 > 0.0)) throw ConstraintError("constant c2 must be positive");
}

namespace {

CurveStateSample h3_sample(const H3GeodesicParams& params, double s, double weight1,
                           double weight2) {
    const double big_x = std::exp(4.0 * s + params.c3);
    const double den = 1.0 + big_x;
    const double z = params.c2 * std::exp(s) / std::sqrt(den);
    const double dz = z * (1.0 - big_x) / den;
    const double ddz = z * ((1.0 - big_x) * (1.0 - big_x) - 8.0 * big_x) / (den * den);

    // First integrals: gamma_1' and gamma_2' are proportional to gamma_3^3.
    const double q = 2.0 * std::exp(0.5 * params.c3) / (params.c2 * params.c2);
    const double dx = weight1 * q * z * z * z;
    const double ddx = 3.0 * weight1 * q * z * z * dz;
    const double dy = weight2 * q * z * z * z;
    const double ddy = 3.0 * weight2 * q * z * z * dz;

    const double f21 = gauss_2f1(0.75, 1.5, 1.75, -big_x);
    const double coef = 2.0 * params.c2 * std::exp(3.0 * s + 0.5 * params.c3) / 3.0;
    const double x = params.k1 + weight1 * coef * f21;
    const double y = params.l1 + weight2 * coef * f21;

    const CurveStateSample sample{{x, y, z}, {dx, dy, dz}, {ddx, ddy, ddz}};
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z) || !std::isfinite(dz) ||
        !std::isfinite(ddz))
        throw DomainError("hyperbolic closed form is non-finite at s = " + std::to_string(s));
    return sample;
}

} // namespace

CurveStateSample h3_closed_form_sample(const H3GeodesicParams& params, double s) {
    const double root = std::sqrt(1.0 + params.c1 * params.c1);
    return h3_sample(params, s, 1.0 / root, params.c1 / root);
}

CurveStateSample h3_equal_weight_sample(const H3GeodesicParams& params, double s) {
    const double root = std::sqrt(1.0 + params.c1 * params.c1);
    return h3_sample(params, s, 1.0 / root, 1.0 / root);
}

ChartPoint h3_closed_form(const H3GeodesicParams& params, double s) {
    return h3_closed_form_sample(params, s).position;
}

GeodesicState h3_closed_form_state(const H3GeodesicParams& params, double s) {
    const CurveStateSample sample = h3_closed_form_sample(params, s);
    return {sample.position, sample.velocity};
}

// --- Residuals ----------------------------------------------------------------

double geodesic_residual(const ManifoldModel& model, const CurveExpr& curve, double s,
                         double speed_tol) {
    FrenetTolerances tols;
    tols.speed_tol = speed_tol;
    return apparatus_at(model, curve, s, tols).kappa;
}

double geodesic_residual(const ManifoldModel& model, const CurveStateSample& sample) {
    return geodesic_defect(model, sample.position, sample.velocity, sample.acceleration);
}

} // namespace ssf
