#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ssf/cli.hpp"

namespace {

struct CommonArgs {
    std::string manifold;
    std::string range = "0:1:0.1";
    std::string format = "table";
    std::string out_path;
    std::string curve;
    double tol_geo = ssf::FrenetTolerances{}.eps_geo;
    double tol_const = ssf::FrenetTolerances{}.eps_const;
    double tol_speed = ssf::FrenetTolerances{}.speed_tol;
};

void add_common_options(CLI::App* cmd, CommonArgs& args, bool with_curve) {
    cmd->add_option("--manifold", args.manifold, "model space: e3, r3m3 or h3m1")->required();
    cmd->add_option("--range", args.range, "sample grid start:end:step")
        ->capture_default_str();
    cmd->add_option("--output", args.format, "output format: table, csv or json")
        ->capture_default_str();
    cmd->add_option("--out", args.out_path, "write data to this file instead of stdout");
    cmd->add_option("--tol-geo", args.tol_geo, "curvature threshold for order 1")
        ->capture_default_str();
    cmd->add_option("--tol-const", args.tol_const, "relative constancy threshold")
        ->capture_default_str();
    cmd->add_option("--tol-speed", args.tol_speed, "allowed |g(T,T) - 1|")
        ->capture_default_str();
    if (with_curve)
        cmd->add_option("--curve", args.curve,
                        "curve \"g1(s), g2(s), g3(s)\" over +,-,*,/,^ and "
                        "sin, cos, tan, exp, ln, arctan, sqrt")
            ->required();
}

int build_config(const CommonArgs& args, ssf::RunConfig& config, std::ostream& diag) {
    try {
        config.model = &ssf::ManifoldModel::by_name(args.manifold);
        config.range = ssf::parse_range(args.range);
        config.format = ssf::output_format_from_name(args.format);
        config.tols.eps_geo = args.tol_geo;
        config.tols.eps_tor = args.tol_geo;
        config.tols.eps_const = args.tol_const;
        config.tols.speed_tol = args.tol_speed;
        if (!args.curve.empty()) config.curve_text = args.curve;
        return ssf::kExitOk;
    } catch (const ssf::Error& error) {
        diag << "error: " << error.what() << '\n';
        return ssf::kExitParse;
    }
}

template <typename Fn>
int with_output(const CommonArgs& args, std::ostream& diag, Fn&& fn) {
    if (args.out_path.empty()) return fn(std::cout);
    std::ofstream file(args.out_path);
    if (!file) {
        diag << "error: cannot open '" << args.out_path << "' for writing\n";
        return ssf::kExitFailure;
    }
    return fn(file);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Semi-symmetric Frenet frames, curvatures and geodesics on three model "
                 "3-manifolds (e3, r3m3, h3m1)"};
    app.require_subcommand(1);

    CommonArgs frame_args;
    CLI::App* frame = app.add_subcommand("frame", "Frenet apparatus along a curve");
    add_common_options(frame, frame_args, true);

    CommonArgs classify_args;
    CLI::App* classify = app.add_subcommand("classify", "order and kind of a curve");
    add_common_options(classify, classify_args, true);

    CLI::App* geodesic = app.add_subcommand("geodesic", "geodesic integration and closed forms");
    geodesic->require_subcommand(1);

    struct GeodesicArgs {
        CommonArgs common;
        std::vector<double> constants;
        std::vector<double> position;
        std::vector<double> velocity;
        double k1 = 0.0;
        double l1 = 0.0;
    };
    const auto add_geodesic_options = [](CLI::App* cmd, GeodesicArgs& args, bool state,
                                         bool constants) {
        add_common_options(cmd, args.common, false);
        if (state) {
            cmd->add_option("--pos", args.position, "initial position x,y,z")->delimiter(',');
            cmd->add_option("--vel", args.velocity, "initial velocity vx,vy,vz")->delimiter(',');
        }
        if (constants) {
            cmd->add_option("--c", args.constants,
                            "closed-form constants (e3: c1..c6; h3m1: c1,c2,c3)")
                ->delimiter(',');
            cmd->add_option("--k", args.k1, "h3m1 additive constant k1")->capture_default_str();
            cmd->add_option("--l", args.l1, "h3m1 additive constant l1")->capture_default_str();
        }
    };

    GeodesicArgs integrate_args;
    CLI::App* integrate = geodesic->add_subcommand("integrate", "RK4 from an initial state");
    add_geodesic_options(integrate, integrate_args, true, false);

    GeodesicArgs closed_args;
    CLI::App* closed = geodesic->add_subcommand("closed-form", "evaluate a closed-form family");
    add_geodesic_options(closed, closed_args, false, true);

    GeodesicArgs verify_args;
    CLI::App* verify = geodesic->add_subcommand(
        "verify", "closed form vs integration with residual and gap report");
    add_geodesic_options(verify, verify_args, true, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return ssf::kExitParse;
    }

    const auto run_geodesic = [&](GeodesicArgs& args, ssf::GeodesicMode mode) {
        ssf::RunConfig config;
        const int status = build_config(args.common, config, std::cerr);
        if (status != ssf::kExitOk) return status;
        config.constants = args.constants;
        config.k1 = args.k1;
        config.l1 = args.l1;
        if (args.position.size() == 3)
            config.position = ssf::ChartPoint{args.position[0], args.position[1], args.position[2]};
        else if (!args.position.empty()) {
            std::cerr << "error: --pos needs exactly three components\n";
            return ssf::kExitParse;
        }
        if (args.velocity.size() == 3)
            config.velocity =
                ssf::CoordVector{args.velocity[0], args.velocity[1], args.velocity[2]};
        else if (!args.velocity.empty()) {
            std::cerr << "error: --vel needs exactly three components\n";
            return ssf::kExitParse;
        }
        return with_output(args.common, std::cerr, [&](std::ostream& data) {
            return ssf::cmd_geodesic(config, mode, data, std::cerr);
        });
    };

    if (frame->parsed()) {
        ssf::RunConfig config;
        const int status = build_config(frame_args, config, std::cerr);
        if (status != ssf::kExitOk) return status;
        return with_output(frame_args, std::cerr, [&](std::ostream& data) {
            return ssf::cmd_frame(config, data, std::cerr);
        });
    }
    if (classify->parsed()) {
        ssf::RunConfig config;
        const int status = build_config(classify_args, config, std::cerr);
        if (status != ssf::kExitOk) return status;
        return with_output(classify_args, std::cerr, [&](std::ostream& data) {
            return ssf::cmd_classify(config, data, std::cerr);
        });
    }
    if (integrate->parsed()) return run_geodesic(integrate_args, ssf::GeodesicMode::Integrate);
    if (closed->parsed()) return run_geodesic(closed_args, ssf::GeodesicMode::ClosedForm);
    if (verify->parsed()) return run_geodesic(verify_args, ssf::GeodesicMode::Verify);
    return ssf::kExitParse;
}
