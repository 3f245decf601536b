#pragma once

#include <array>
#include <cmath>
#include <string_view>

#include "ssf/expr.hpp"
#include "ssf/jet.hpp"

namespace ssf {

enum class ModelId { E3, R3m3, H3m1 };

struct ChartPoint {
    double x{}, y{}, z{};
};

/// Tangent vector in chart coordinates (components along d/dx, d/dy, d/dz).
struct CoordVector {
    double x{}, y{}, z{};
};

/// Tangent vector in the model's g-orthonormal frame, so the g-norm is the
/// Euclidean norm of the components.
struct FrameVector {
    double a1{}, a2{}, a3{};

    friend constexpr FrameVector operator+(const FrameVector& a, const FrameVector& b) {
        return {a.a1 + b.a1, a.a2 + b.a2, a.a3 + b.a3};
    }
    friend constexpr FrameVector operator-(const FrameVector& a, const FrameVector& b) {
        return {a.a1 - b.a1, a.a2 - b.a2, a.a3 - b.a3};
    }
    constexpr FrameVector operator-() const { return {-a1, -a2, -a3}; }
    friend constexpr FrameVector operator*(double c, const FrameVector& a) {
        return {c * a.a1, c * a.a2, c * a.a3};
    }
    friend constexpr FrameVector operator*(const FrameVector& a, double c) { return c * a; }
    friend constexpr FrameVector operator/(const FrameVector& a, double c) {
        return {a.a1 / c, a.a2 / c, a.a3 / c};
    }
};

constexpr double dot(const FrameVector& a, const FrameVector& b) {
    return a.a1 * b.a1 + a.a2 * b.a2 + a.a3 * b.a3;
}

inline double norm(const FrameVector& a) { return std::sqrt(dot(a, a)); }

/// One of the three model spaces, with its metric, orthonormal frame field,
/// Levi-Civita connection table, distinguished unit field U and the induced
/// semi-symmetric connection table.
///
/// The connection acts on the frame by nabla~_{f_i} f_j = nabla_{f_i} f_j
/// + omega(f_j) f_i - g(f_i, f_j) U with omega(V) = g(V, U). Both tables are
/// stored as constants; `ss_from_lc` recomputes the semi-symmetric one from
/// the Levi-Civita one so tests can audit the transcription.
class ManifoldModel {
public:
    static const ManifoldModel& e3();
    static const ManifoldModel& r3m3();
    static const ManifoldModel& h3m1();
    static const ManifoldModel& by_name(std::string_view name); // "e3" | "r3m3" | "h3m1"

    ModelId id() const { return id_; }
    std::string_view name() const { return name_; }

    bool in_domain(const ChartPoint& p) const;
    void require_domain(const ChartPoint& p) const; // throws DomainError

    /// g_p(v, w) for chart-coordinate vectors.
    double metric(const ChartPoint& p, const CoordVector& v, const CoordVector& w) const;

    /// k-th frame field (k in 0..2) expressed in chart coordinates at p.
    CoordVector frame_field(const ChartPoint& p, int k) const;

    FrameVector coordinate_to_frame(const ChartPoint& p, const CoordVector& v) const;
    CoordVector frame_to_coordinate(const ChartPoint& p, const FrameVector& a) const;

    /// nabla_{f_i} f_j in frame components (constant over the model).
    FrameVector lc(int i, int j) const;
    /// nabla~_{f_i} f_j in frame components (constant over the model).
    FrameVector ss(int i, int j) const;
    /// lc(i,j) + omega(f_j) f_i - delta_ij U; must equal ss(i,j).
    FrameVector ss_from_lc(int i, int j) const;
    /// [f_i, f_j], derived from the torsion-free Levi-Civita table.
    FrameVector bracket(int i, int j) const;

    /// U in frame components.
    FrameVector u_frame() const { return u_; }
    /// omega(v) = g(v, U).
    double omega(const FrameVector& v) const { return dot(v, u_); }

    /// Covariant derivative along a curve of a field given by frame
    /// components `value` with ordinary s-derivatives `deriv`, where
    /// `tangent` holds the frame components of the curve velocity.
    FrameVector ss_derivative_along(const FrameVector& value, const FrameVector& deriv,
                                    const FrameVector& tangent) const;

    /// Frame norm of nabla~_{f_i} f_j - nabla~_{f_j} f_i - [f_i, f_j]
    /// - (omega(f_j) f_i - omega(f_i) f_j); zero for a torsion tensor of
    /// semi-symmetric form.
    double torsion_check(int i, int j) const;

private:
    using Table = std::array<std::array<FrameVector, 3>, 3>;

    ManifoldModel(ModelId id, std::string_view name, const Table& lc, const Table& ss);

    ModelId id_;
    std::string_view name_;
    Table lc_;
    Table ss_;
    Table bracket_;
    FrameVector u_{0.0, 0.0, 1.0}; // U is the third frame field in every model
};

/// Frame components of a velocity vector as jets, for curve-level covariant
/// derivatives. `position` and `velocity` are chart-coordinate jets; the
/// result is exact to one order below its inputs (the shift inside consumes
/// nothing here, but see ss_derivative_jets).
std::array<Jet3, 3> frame_component_jets(ModelId id, const std::array<Jet3, 3>& position,
                                         const std::array<Jet3, 3>& velocity);

/// Everything needed to form nabla~_T T and nabla~_T nabla~_T T at one
/// parameter value: the frame components of the velocity as jets carry
/// gamma', gamma'', gamma''' through the frame conversion. tangent[k].v3 is
/// not meaningful (see derivative_shift).
struct CurveFrameState {
    double s{};
    ChartPoint point;
    std::array<Jet3, 3> tangent;
};

/// Evaluates the curve, checks the model domain and builds the frame state.
/// Does not validate unit speed.
CurveFrameState curve_frame_state(const ManifoldModel& model, const CurveExpr& curve, double s);

/// Jet-level covariant derivative along the curve: component k of the result
/// is shift(field_k) + sum_{i,j} tangent_i field_j ss(i,j)_k. Each
/// application loses one trustworthy jet order.
std::array<Jet3, 3> ss_derivative_jets(const ManifoldModel& model,
                                       const std::array<Jet3, 3>& field,
                                       const std::array<Jet3, 3>& tangent);

} // namespace ssf
