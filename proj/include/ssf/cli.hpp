#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ssf/frenet.hpp"
#include "ssf/geodesic.hpp"
#include "ssf/grid.hpp"
#include "ssf/manifold.hpp"

namespace ssf {

enum class OutputFormat { Table, Csv, Json };

OutputFormat output_format_from_name(std::string_view name); // "table" | "csv" | "json"

/// Parses "start:end:step" with start < end and step > 0.
GridRange parse_range(const std::string& text);

/// Everything one command invocation needs.
struct RunConfig {
    const ManifoldModel* model = nullptr;
    std::optional<std::string> curve_text;
    GridRange range{0.0, 1.0, 0.1};
    FrenetTolerances tols;
    OutputFormat format = OutputFormat::Table;
    std::vector<double> constants;       // closed-form constants (--c)
    std::optional<ChartPoint> position;  // --pos
    std::optional<CoordVector> velocity; // --vel
    double k1 = 0.0;                     // --k
    double l1 = 0.0;                     // --l
};

enum class GeodesicMode { Integrate, ClosedForm, Verify };

// Exit codes, stable across releases.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitSpeed = 3;
inline constexpr int kExitDomain = 4;
inline constexpr int kExitConstraint = 5;

/// Frenet samples over the grid. Data rows go to `data`, diagnostics to `diag`.
int cmd_frame(const RunConfig& config, std::ostream& data, std::ostream& diag);

/// One classification record for the grid.
int cmd_classify(const RunConfig& config, std::ostream& data, std::ostream& diag);

/// Geodesic trajectories: numerical integration, closed-form evaluation, or
/// both with a cross-check report.
int cmd_geodesic(const RunConfig& config, GeodesicMode mode, std::ostream& data,
                 std::ostream& diag);

/// Shortest-exact then fixed 17-significant-digit formatting; '.' decimal
/// separator regardless of locale.
std::string format_full(double value);

} // namespace ssf
