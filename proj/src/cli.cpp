#include "ssf/cli.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace ssf {

using ordered_json = nlohmann::ordered_json;

std::string format_full(double value) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
    (void)ec;
    return std::string(buf, ptr);
}

static std::string format_short(double value) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 9);
    (void)ec;
    return std::string(buf, ptr);
}

OutputFormat output_format_from_name(std::string_view name) {
    if (name == "table") return OutputFormat::Table;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    throw ParameterError("unknown output format '" + std::string(name) +
                         "' (expected table, csv or json)");
}

GridRange parse_range(const std::string& text) {
    GridRange range;
    double* const fields[3] = {&range.start, &range.end, &range.step};
    std::size_t begin = 0;
    for (int k = 0; k < 3; ++k) {
        const std::size_t colon = k < 2 ? text.find(':', begin) : text.size();
        if (colon == std::string::npos)
            throw ParameterError("range must have the form start:end:step");
        const char* first = text.data() + begin;
        const char* last = text.data() + colon;
        auto [ptr, ec] = std::from_chars(first, last, *fields[k]);
        if (ec != std::errc() || ptr != last)
            throw ParameterError("range must have the form start:end:step");
        begin = colon + 1;
    }
    if (!(range.step > 0.0)) throw ParameterError("range step must be positive");
    if (!(range.start < range.end)) throw ParameterError("range start must precede range end");
    return range;
}

namespace {

int exit_code_for(const Error& error) {
    if (dynamic_cast<const NotUnitSpeedError*>(&error)) return kExitSpeed;
    if (dynamic_cast<const DomainError*>(&error) || dynamic_cast<const RangeError*>(&error))
        return kExitDomain;
    if (dynamic_cast<const ConstraintError*>(&error)) return kExitConstraint;
    if (dynamic_cast<const SyntaxError*>(&error) ||
        dynamic_cast<const UnknownFunctionError*>(&error) ||
        dynamic_cast<const ArityError*>(&error) || dynamic_cast<const ParameterError*>(&error) ||
        dynamic_cast<const StepError*>(&error) || dynamic_cast<const EmptyRangeError*>(&error))
        return kExitParse;
    return kExitFailure;
}

const ManifoldModel& require_model(const RunConfig& config) {
    if (config.model == nullptr) throw ParameterError("no manifold selected");
    return *config.model;
}

CurveExpr require_curve(const RunConfig& config) {
    if (!config.curve_text) throw ParameterError("this command requires --curve");
    return parse_curve(*config.curve_text);
}

/// Rejects curves that fail arc-length validation anywhere on the grid,
/// reporting the measured speed extremes.
void validate_unit_speed(const ManifoldModel& model, const CurveExpr& curve,
                         const std::vector<double>& grid, double speed_tol) {
    double speed_min = 0.0, speed_max = 0.0;
    bool first = true, failed = false;
    for (double s : grid) {
        const double speed = curve_speed(model, curve, s);
        speed_min = first ? speed : std::min(speed_min, speed);
        speed_max = first ? speed : std::max(speed_max, speed);
        first = false;
        if (std::abs(speed * speed - 1.0) > speed_tol) failed = true;
    }
    if (failed)
        throw NotUnitSpeedError("curve is not unit-speed on the grid (speed min " +
                                    format_short(speed_min) + ", max " + format_short(speed_max) +
                                    ")",
                                speed_max);
}

// --- frame output -----------------------------------------------------------

constexpr const char* kFrameHeader = "s,order,kappa,tau,T1,T2,T3,N1,N2,N3,B1,B2,B3";

void write_frame_csv(std::ostream& out, const std::vector<FrenetSample>& samples) {
    out << kFrameHeader << '\n';
    for (const FrenetSample& sample : samples) {
        out << format_full(sample.s) << ',' << sample.order << ',' << format_full(sample.kappa)
            << ',';
        if (sample.tau) out << format_full(*sample.tau);
        out << ',' << format_full(sample.T.a1) << ',' << format_full(sample.T.a2) << ','
            << format_full(sample.T.a3) << ',';
        if (sample.N)
            out << format_full(sample.N->a1) << ',' << format_full(sample.N->a2) << ','
                << format_full(sample.N->a3);
        else
            out << ",,";
        out << ',';
        if (sample.B)
            out << format_full(sample.B->a1) << ',' << format_full(sample.B->a2) << ','
                << format_full(sample.B->a3);
        else
            out << ",,";
        out << '\n';
    }
}

void write_frame_json(std::ostream& out, const std::vector<FrenetSample>& samples) {
    ordered_json rows = ordered_json::array();
    for (const FrenetSample& sample : samples) {
        ordered_json row;
        row["s"] = sample.s;
        row["order"] = sample.order;
        row["kappa"] = sample.kappa;
        if (sample.tau) row["tau"] = *sample.tau;
        row["T1"] = sample.T.a1;
        row["T2"] = sample.T.a2;
        row["T3"] = sample.T.a3;
        if (sample.N) {
            row["N1"] = sample.N->a1;
            row["N2"] = sample.N->a2;
            row["N3"] = sample.N->a3;
        }
        if (sample.B) {
            row["B1"] = sample.B->a1;
            row["B2"] = sample.B->a2;
            row["B3"] = sample.B->a3;
        }
        rows.push_back(std::move(row));
    }
    out << rows.dump(2) << '\n';
}

void write_frame_table(std::ostream& out, const std::vector<FrenetSample>& samples) {
    out << "       s  order        kappa          tau   frame (T; N; B)\n";
    for (const FrenetSample& sample : samples) {
        std::ostringstream line;
        line.setf(std::ios::left);
        line << format_short(sample.s) << "  " << sample.order << "  "
             << format_short(sample.kappa) << "  " << (sample.tau ? format_short(*sample.tau) : "-")
             << "  (" << format_short(sample.T.a1) << ", " << format_short(sample.T.a2) << ", "
             << format_short(sample.T.a3) << ")";
        if (sample.N)
            line << "; (" << format_short(sample.N->a1) << ", " << format_short(sample.N->a2)
                 << ", " << format_short(sample.N->a3) << ")";
        if (sample.B)
            line << "; (" << format_short(sample.B->a1) << ", " << format_short(sample.B->a2)
                 << ", " << format_short(sample.B->a3) << ")";
        out << line.str() << '\n';
    }
}

// --- trajectory output --------------------------------------------------------

constexpr const char* kTrajectoryHeader = "s,x,y,z,vx,vy,vz,residual";

struct TrajectoryRow {
    double s;
    ChartPoint position;
    CoordVector velocity;
    double residual;
};

void write_trajectory_csv(std::ostream& out, const std::vector<TrajectoryRow>& rows) {
    out << kTrajectoryHeader << '\n';
    for (const TrajectoryRow& row : rows) {
        out << format_full(row.s) << ',' << format_full(row.position.x) << ','
            << format_full(row.position.y) << ',' << format_full(row.position.z) << ','
            << format_full(row.velocity.x) << ',' << format_full(row.velocity.y) << ','
            << format_full(row.velocity.z) << ',' << format_full(row.residual) << '\n';
    }
}

void write_trajectory_json(std::ostream& out, const std::vector<TrajectoryRow>& rows) {
    ordered_json array = ordered_json::array();
    for (const TrajectoryRow& row : rows) {
        ordered_json entry;
        entry["s"] = row.s;
        entry["x"] = row.position.x;
        entry["y"] = row.position.y;
        entry["z"] = row.position.z;
        entry["vx"] = row.velocity.x;
        entry["vy"] = row.velocity.y;
        entry["vz"] = row.velocity.z;
        entry["residual"] = row.residual;
        array.push_back(std::move(entry));
    }
    out << array.dump(2) << '\n';
}

void write_trajectory_table(std::ostream& out, const std::vector<TrajectoryRow>& rows) {
    out << "       s   position (x, y, z)   velocity (vx, vy, vz)   residual\n";
    for (const TrajectoryRow& row : rows) {
        out << format_short(row.s) << "  (" << format_short(row.position.x) << ", "
            << format_short(row.position.y) << ", " << format_short(row.position.z) << ")  ("
            << format_short(row.velocity.x) << ", " << format_short(row.velocity.y) << ", "
            << format_short(row.velocity.z) << ")  " << format_short(row.residual) << '\n';
    }
}

void write_trajectory(std::ostream& out, OutputFormat format,
                      const std::vector<TrajectoryRow>& rows) {
    switch (format) {
        case OutputFormat::Csv: write_trajectory_csv(out, rows); break;
        case OutputFormat::Json: write_trajectory_json(out, rows); break;
        case OutputFormat::Table: write_trajectory_table(out, rows); break;
    }
}

// --- classification output -----------------------------------------------------

void write_classification(std::ostream& out, OutputFormat format,
                          const CurveClassification& result) {
    switch (format) {
        case OutputFormat::Csv: {
            out << "order,kind,kappa_min,kappa_max,tau_min,tau_max,singular_points\n";
            out << result.order << ',' << curve_kind_name(result.kind) << ','
                << format_full(result.kappa_range.first) << ','
                << format_full(result.kappa_range.second) << ',';
            if (result.tau_range)
                out << format_full(result.tau_range->first) << ','
                    << format_full(result.tau_range->second);
            else
                out << ',';
            out << ',';
            for (std::size_t i = 0; i < result.singular_points.size(); ++i) {
                if (i) out << ';';
                out << format_full(result.singular_points[i]);
            }
            out << '\n';
            break;
        }
        case OutputFormat::Json: {
            ordered_json entry;
            entry["order"] = result.order;
            entry["kind"] = curve_kind_name(result.kind);
            entry["kappa_min"] = result.kappa_range.first;
            entry["kappa_max"] = result.kappa_range.second;
            if (result.tau_range) {
                entry["tau_min"] = result.tau_range->first;
                entry["tau_max"] = result.tau_range->second;
            }
            entry["singular_points"] = result.singular_points;
            out << entry.dump(2) << '\n';
            break;
        }
        case OutputFormat::Table: {
            out << "order: " << result.order << '\n';
            out << "kind: " << curve_kind_name(result.kind) << '\n';
            out << "kappa: [" << format_short(result.kappa_range.first) << ", "
                << format_short(result.kappa_range.second) << "]\n";
            if (result.tau_range)
                out << "tau: [" << format_short(result.tau_range->first) << ", "
                    << format_short(result.tau_range->second) << "]\n";
            out << "singular points:";
            if (result.singular_points.empty()) out << " (none)";
            for (double s : result.singular_points) out << ' ' << format_short(s);
            out << '\n';
            break;
        }
    }
}

// --- geodesic command helpers ----------------------------------------------------

std::vector<TrajectoryRow> rows_from_trajectory(const std::vector<TrajectorySample>& samples) {
    std::vector<TrajectoryRow> rows;
    rows.reserve(samples.size());
    for (const TrajectorySample& sample : samples)
        rows.push_back({sample.s, sample.state.position, sample.state.velocity, sample.residual});
    return rows;
}

std::vector<double> require_constants(const RunConfig& config, std::size_t count,
                                      const char* what) {
    if (config.constants.size() != count)
        throw ParameterError(std::string("expected ") + std::to_string(count) +
                             " constants for " + what + ", got " +
                             std::to_string(config.constants.size()));
    return config.constants;
}

GeodesicState require_state(const RunConfig& config) {
    if (!config.position || !config.velocity)
        throw ParameterError("this mode requires --pos and --vel");
    return {*config.position, *config.velocity};
}

E3GeodesicParams e3_params(const RunConfig& config) {
    const std::vector<double> c = require_constants(config, 6, "the e3 closed form");
    return {c[0], c[1], c[2], c[3], c[4], c[5]};
}

H3GeodesicParams h3_params(const RunConfig& config) {
    const std::vector<double> c = require_constants(config, 3, "the h3m1 closed form");
    return {c[0], c[1], c[2], config.k1, config.l1};
}

void report_riccati(const std::vector<TrajectorySample>& samples, std::ostream& diag) {
    const R3RiccatiParams fit = r3_riccati_fit(samples);
    double sup_error = 0.0;
    for (const TrajectorySample& sample : samples)
        sup_error = std::max(sup_error,
                             std::abs(r3_twist(sample.state) - r3_riccati_f(fit, sample.s)));
    diag << "riccati_c1=" << format_full(fit.c1) << '\n';
    diag << "riccati_fit_error=" << format_full(sup_error) << '\n';
}

std::vector<TrajectoryRow> closed_form_rows(const ManifoldModel& model, const RunConfig& config,
                                            double& max_residual) {
    std::vector<TrajectoryRow> rows;
    max_residual = 0.0;
    const auto push = [&](double s, const CurveStateSample& sample) {
        const double residual = geodesic_residual(model, sample);
        max_residual = std::max(max_residual, residual);
        rows.push_back({s, sample.position, sample.velocity, residual});
    };
    if (model.id() == ModelId::E3) {
        const E3GeodesicParams params = e3_params(config);
        const CurveExpr curve = e3_closed_form_curve(params);
        for (double s : config.range.points()) {
            const std::array<Jet3, 3> jets = eval_jet3(curve, s);
            push(s, {{jets[0].v0, jets[1].v0, jets[2].v0},
                     {jets[0].v1, jets[1].v1, jets[2].v1},
                     {jets[0].v2, jets[1].v2, jets[2].v2}});
        }
    } else if (model.id() == ModelId::H3m1) {
        const H3GeodesicParams params = h3_params(config);
        for (double s : config.range.points()) push(s, h3_closed_form_sample(params, s));
    } else {
        throw ParameterError("no closed-form positions for r3m3; use 'integrate' or 'verify' "
                             "(the Riccati first integral is reported there)");
    }
    return rows;
}

} // namespace

int cmd_frame(const RunConfig& config, std::ostream& data, std::ostream& diag) {
    try {
        const ManifoldModel& model = require_model(config);
        const CurveExpr curve = require_curve(config);
        const std::vector<double> grid = config.range.points();
        validate_unit_speed(model, curve, grid, config.tols.speed_tol);
        std::vector<FrenetSample> samples;
        samples.reserve(grid.size());
        for (double s : grid) samples.push_back(apparatus_at(model, curve, s, config.tols));
        switch (config.format) {
            case OutputFormat::Csv: write_frame_csv(data, samples); break;
            case OutputFormat::Json: write_frame_json(data, samples); break;
            case OutputFormat::Table: write_frame_table(data, samples); break;
        }
        return kExitOk;
    } catch (const Error& error) {
        diag << "error: " << error.what() << '\n';
        return exit_code_for(error);
    }
}

int cmd_classify(const RunConfig& config, std::ostream& data, std::ostream& diag) {
    try {
        const ManifoldModel& model = require_model(config);
        const CurveExpr curve = require_curve(config);
        const std::vector<double> grid = config.range.points();
        validate_unit_speed(model, curve, grid, config.tols.speed_tol);
        const CurveClassification result = classify_interval(model, curve, config.range, config.tols);
        write_classification(data, config.format, result);
        return kExitOk;
    } catch (const Error& error) {
        diag << "error: " << error.what() << '\n';
        return exit_code_for(error);
    }
}

int cmd_geodesic(const RunConfig& config, GeodesicMode mode, std::ostream& data,
                 std::ostream& diag) {
    try {
        const ManifoldModel& model = require_model(config);
        switch (mode) {
            case GeodesicMode::Integrate: {
                const std::vector<TrajectorySample> trajectory =
                    integrate_geodesic(model, require_state(config), config.range,
                                       config.tols.speed_tol);
                if (model.id() == ModelId::R3m3) report_riccati(trajectory, diag);
                write_trajectory(data, config.format, rows_from_trajectory(trajectory));
                return kExitOk;
            }
            case GeodesicMode::ClosedForm: {
                double max_residual = 0.0;
                const std::vector<TrajectoryRow> rows = closed_form_rows(model, config, max_residual);
                diag << "max_residual=" << format_full(max_residual) << '\n';
                write_trajectory(data, config.format, rows);
                return kExitOk;
            }
            case GeodesicMode::Verify: {
                if (model.id() == ModelId::R3m3) {
                    // The closed form here is the Riccati first integral; verify
                    // it against an integrated trajectory.
                    const std::vector<TrajectorySample> trajectory =
                        integrate_geodesic(model, require_state(config), config.range,
                                           config.tols.speed_tol);
                    double max_residual = 0.0;
                    for (const TrajectorySample& sample : trajectory)
                        max_residual = std::max(max_residual, sample.residual);
                    diag << "max_residual=" << format_full(max_residual) << '\n';
                    report_riccati(trajectory, diag);
                    write_trajectory(data, config.format, rows_from_trajectory(trajectory));
                    return kExitOk;
                }
                double max_residual = 0.0;
                const std::vector<TrajectoryRow> rows = closed_form_rows(model, config, max_residual);
                const GeodesicState initial{rows.front().position, rows.front().velocity};
                const std::vector<TrajectorySample> trajectory =
                    integrate_geodesic(model, initial, config.range, config.tols.speed_tol);
                double max_gap = 0.0;
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    const ChartPoint& a = rows[i].position;
                    const ChartPoint& b = trajectory[i].state.position;
                    max_gap = std::max({max_gap, std::abs(a.x - b.x), std::abs(a.y - b.y),
                                        std::abs(a.z - b.z)});
                }
                diag << "max_residual=" << format_full(max_residual) << '\n';
                diag << "max_gap=" << format_full(max_gap) << '\n';
                write_trajectory(data, config.format, rows);
                return kExitOk;
            }
        }
        throw Error("unreachable");
    } catch (const Error& error) {
        diag << "error: " << error.what() << '\n';
        return exit_code_for(error);
    }
}

} // namespace ssf
