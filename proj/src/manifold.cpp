#include "ssf/manifold.hpp"

#include <string>

#include "ssf/errors.hpp"

namespace ssf {

namespace {

using Table = std::array<std::array<FrameVector, 3>, 3>;

constexpr FrameVector kZero{0.0, 0.0, 0.0};

// Euclidean space, frame e1 = d/dx, e2 = d/dy, e3 = d/dz, U = e3.
constexpr Table kE3Lc = {{
    {{kZero, kZero, kZero}},
    {{kZero, kZero, kZero}},
    {{kZero, kZero, kZero}},
}};
constexpr Table kE3Ss = {{
    {{{0, 0, -1}, kZero, {1, 0, 0}}},
    {{kZero, {0, 0, -1}, {0, 1, 0}}},
    {{kZero, kZero, kZero}},
}};

// Sasakian R^3(-3), frame X = 2 d/dy, Y = 2(d/dx + y d/dz), xi = 2 d/dz,
// U = xi.
constexpr Table kR3Lc = {{
    {{kZero, {0, 0, 1}, {0, -1, 0}}},
    {{{0, 0, -1}, kZero, {1, 0, 0}}},
    {{{0, -1, 0}, {1, 0, 0}, kZero}},
}};
constexpr Table kR3Ss = {{
    {{{0, 0, -1}, {0, 0, 1}, {1, -1, 0}}},
    {{{0, 0, -1}, {0, 0, -1}, {1, 1, 0}}},
    {{{0, -1, 0}, {1, 0, 0}, kZero}},
}};

// Hyperbolic half-space H^3(-1), frame e1 = z d/dx, e2 = z d/dy,
// e3 = -z d/dz, U = e3.
constexpr Table kH3Lc = {{
    {{{0, 0, -1}, kZero, {1, 0, 0}}},
    {{kZero, {0, 0, -1}, {0, 1, 0}}},
    {{kZero, kZero, kZero}},
}};
constexpr Table kH3Ss = {{
    {{{0, 0, -2}, kZero, {2, 0, 0}}},
    {{kZero, {0, 0, -2}, {0, 2, 0}}},
    {{kZero, kZero, kZero}},
}};

void check_index(int i, int j) {
    if (i < 0 || i > 2 || j < 0 || j > 2) throw ParameterError("frame index out of range");
}

constexpr FrameVector unit_frame(int k) {
    return {k == 0 ? 1.0 : 0.0, k == 1 ? 1.0 : 0.0, k == 2 ? 1.0 : 0.0};
}

} // namespace

ManifoldModel::ManifoldModel(ModelId id, std::string_view name, const Table& lc, const Table& ss)
    : id_(id), name_(name), lc_(lc), ss_(ss) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) bracket_[i][j] = lc_[i][j] - lc_[j][i];
}

const ManifoldModel& ManifoldModel::e3() {
    static const ManifoldModel model(ModelId::E3, "e3", kE3Lc, kE3Ss);
    return model;
}

const ManifoldModel& ManifoldModel::r3m3() {
    static const ManifoldModel model(ModelId::R3m3, "r3m3", kR3Lc, kR3Ss);
    return model;
}

const ManifoldModel& ManifoldModel::h3m1() {
    static const ManifoldModel model(ModelId::H3m1, "h3m1", kH3Lc, kH3Ss);
    return model;
}

const ManifoldModel& ManifoldModel::by_name(std::string_view name) {
    if (name == "e3") return e3();
    if (name == "r3m3") return r3m3();
    if (name == "h3m1") return h3m1();
    throw ParameterError("unknown manifold '" + std::string(name) + "' (expected e3, r3m3 or h3m1)");
}

bool ManifoldModel::in_domain(const ChartPoint& p) const {
    return id_ != ModelId::H3m1 || p.z > 0.0;
}

void ManifoldModel::require_domain(const ChartPoint& p) const {
    if (!in_domain(p))
        throw DomainError("point with z = " + std::to_string(p.z) +
                          " outside the half-space z > 0");
}

double ManifoldModel::metric(const ChartPoint& p, const CoordVector& v,
                             const CoordVector& w) const {
    require_domain(p);
    switch (id_) {
        case ModelId::E3:
            return v.x * w.x + v.y * w.y + v.z * w.z;
        case ModelId::R3m3: {
            // g = 1/4 (dx^2 + dy^2) + eta (x) eta, eta = 1/2 (dz - y dx)
            const double eta_v = 0.5 * (v.z - p.y * v.x);
            const double eta_w = 0.5 * (w.z - p.y * w.x);
            return 0.25 * (v.x * w.x + v.y * w.y) + eta_v * eta_w;
        }
        case ModelId::H3m1:
            return (v.x * w.x + v.y * w.y + v.z * w.z) / (p.z * p.z);
    }
    throw Error("unreachable");
}

CoordVector ManifoldModel::frame_field(const ChartPoint& p, int k) const {
    check_index(k, 0);
    require_domain(p);
    switch (id_) {
        case ModelId::E3:
            return k == 0 ? CoordVector{1, 0, 0} : k == 1 ? CoordVector{0, 1, 0}
                                                          : CoordVector{0, 0, 1};
        case ModelId::R3m3:
            return k == 0 ? CoordVector{0, 2, 0}
                          : k == 1 ? CoordVector{2, 0, 2 * p.y} : CoordVector{0, 0, 2};
        case ModelId::H3m1:
            return k == 0 ? CoordVector{p.z, 0, 0}
                          : k == 1 ? CoordVector{0, p.z, 0} : CoordVector{0, 0, -p.z};
    }
    throw Error("unreachable");
}

FrameVector ManifoldModel::coordinate_to_frame(const ChartPoint& p, const CoordVector& v) const {
    require_domain(p);
    switch (id_) {
        case ModelId::E3:
            return {v.x, v.y, v.z};
        case ModelId::R3m3:
            return {0.5 * v.y, 0.5 * v.x, 0.5 * (v.z - p.y * v.x)};
        case ModelId::H3m1:
            return {v.x / p.z, v.y / p.z, -v.z / p.z};
    }
    throw Error("unreachable");
}

CoordVector ManifoldModel::frame_to_coordinate(const ChartPoint& p, const FrameVector& a) const {
    require_domain(p);
    switch (id_) {
        case ModelId::E3:
            return {a.a1, a.a2, a.a3};
        case ModelId::R3m3:
            return {2.0 * a.a2, 2.0 * a.a1, 2.0 * (a.a2 * p.y + a.a3)};
        case ModelId::H3m1:
            return {a.a1 * p.z, a.a2 * p.z, -a.a3 * p.z};
    }
    throw Error("unreachable");
}

FrameVector ManifoldModel::lc(int i, int j) const {
    check_index(i, j);
    return lc_[i][j];
}

FrameVector ManifoldModel::ss(int i, int j) const {
    check_index(i, j);
    return ss_[i][j];
}

FrameVector ManifoldModel::ss_from_lc(int i, int j) const {
    check_index(i, j);
    const FrameVector e_i = unit_frame(i);
    const double omega_j = omega(unit_frame(j));
    const double g_ij = i == j ? 1.0 : 0.0;
    return lc_[i][j] + omega_j * e_i - g_ij * u_;
}

FrameVector ManifoldModel::bracket(int i, int j) const {
    check_index(i, j);
    return bracket_[i][j];
}

FrameVector ManifoldModel::ss_derivative_along(const FrameVector& value,
                                               const FrameVector& deriv,
                                               const FrameVector& tangent) const {
    FrameVector result = deriv;
    const double t[3] = {tangent.a1, tangent.a2, tangent.a3};
    const double v[3] = {value.a1, value.a2, value.a3};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) result = result + (t[i] * v[j]) * ss_[i][j];
    return result;
}

double ManifoldModel::torsion_check(int i, int j) const {
    check_index(i, j);
    const FrameVector e_i = unit_frame(i);
    const FrameVector e_j = unit_frame(j);
    const FrameVector torsion = ss_[i][j] - ss_[j][i] - bracket_[i][j];
    const FrameVector expected = omega(e_j) * e_i - omega(e_i) * e_j;
    return norm(torsion - expected);
}

std::array<Jet3, 3> frame_component_jets(ModelId id, const std::array<Jet3, 3>& position,
                                         const std::array<Jet3, 3>& velocity) {
    switch (id) {
        case ModelId::E3:
            return velocity;
        case ModelId::R3m3:
            return {0.5 * velocity[1], 0.5 * velocity[0],
                    0.5 * (velocity[2] - velocity[0] * position[1])};
        case ModelId::H3m1:
            return {velocity[0] / position[2], velocity[1] / position[2],
                    -velocity[2] / position[2]};
    }
    throw Error("unreachable");
}

CurveFrameState curve_frame_state(const ManifoldModel& model, const CurveExpr& curve, double s) {
    const std::array<Jet3, 3> gamma = eval_jet3(curve, s);
    CurveFrameState state;
    state.s = s;
    state.point = {gamma[0].v0, gamma[1].v0, gamma[2].v0};
    model.require_domain(state.point);
    const std::array<Jet3, 3> velocity = {derivative_shift(gamma[0]), derivative_shift(gamma[1]),
                                          derivative_shift(gamma[2])};
    state.tangent = frame_component_jets(model.id(), gamma, velocity);
    return state;
}

std::array<Jet3, 3> ss_derivative_jets(const ManifoldModel& model,
                                       const std::array<Jet3, 3>& field,
                                       const std::array<Jet3, 3>& tangent) {
    std::array<Jet3, 3> result = {derivative_shift(field[0]), derivative_shift(field[1]),
                                  derivative_shift(field[2])};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const FrameVector c = model.ss(i, j);
            const Jet3 weight = tangent[i] * field[j];
            result[0] = result[0] + weight * c.a1;
            result[1] = result[1] + weight * c.a2;
            result[2] = result[2] + weight * c.a3;
        }
    }
    return result;
}

} // namespace ssf
