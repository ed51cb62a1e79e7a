// Command-line front end for the collet jaw model.
//
//   collet curve        [--config F] [--preset S1..S5] [--out curve.csv]
//   collet design-space --scenario chuck|adaptor --values v1,v2,... --out grid.csv [--json grid.json]
//   collet grip-range   [--config F] [--preset S] --out report.json
//   collet verify       [--config F] [--preset S] --elems N --out verify.csv
//   collet section      [--config F] [--preset S] --theta DEG
//
// Exit status: 0 success, 2 configuration or validation error, 3 numerical
// failure.

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "collet/config.hpp"
#include "collet/designspace.hpp"
#include "collet/errors.hpp"
#include "collet/oracle.hpp"
#include "collet/report.hpp"
#include "collet/section.hpp"
#include "collet/solver.hpp"

namespace {

using namespace collet;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct CommonOptions {
    std::string config_path;
    std::string preset_name;
    std::string dump_path;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--config", opts.config_path, "JSON run configuration");
    cmd->add_option("--preset", opts.preset_name, "Sample geometry S1..S5 (replaces the config geometry)");
    cmd->add_option("--dump-config", opts.dump_path, "Write the effective configuration to this file");
}

RunConfig effective_config(const CommonOptions& opts) {
    RunConfig cfg = opts.config_path.empty() ? RunConfig{} : load_config(opts.config_path);
    if (!opts.preset_name.empty()) {
        cfg.geometry = from_geometry(preset(opts.preset_name));
    }
    validate(cfg);
    if (!opts.dump_path.empty()) {
        atomic_write(resolve_output_path(opts.dump_path), to_json(cfg).dump(2) + "\n");
    }
    return cfg;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
    } else {
        atomic_write(resolve_output_path(out_path), content);
    }
}

int report_stop(const DeflectionCurve& curve) {
    if (curve.stop_reason == StopReason::no_solution) {
        std::cerr << "collet: numerical failure at " << curve.message << "\n";
        return kExitNumerical;
    }
    return kExitOk;
}

int run_curve(const CommonOptions& opts, const std::string& out) {
    const RunConfig cfg = effective_config(opts);
    const DeflectionCurve curve =
        march(to_geometry(cfg.geometry), delta_total(cfg), cfg.run.n_steps, cfg.run.clearance);
    emit(out, curve_csv(curve));
    return report_stop(curve);
}

int run_design_space(const CommonOptions& opts, const std::string& scenario, std::vector<double> values,
                     const std::string& out, const std::string& json_out) {
    CommonOptions base_opts = opts;
    if (base_opts.config_path.empty() && base_opts.preset_name.empty()) {
        base_opts.preset_name = "S3";
    }
    const RunConfig cfg = effective_config(base_opts);
    const Scenario sc = scenario.empty() ? cfg.sweep.scenario : parse_scenario(scenario);
    if (values.empty()) values = cfg.sweep.values;
    if (values.empty()) {
        throw ValidationError("design-space: no --values given and the config has no sweep values");
    }
    const DesignSpaceGrid grid =
        sweep(to_geometry(cfg.geometry), sc, values, delta_total(cfg), cfg.run.n_steps, cfg.run.clearance);
    emit(out, grid_csv(grid));
    if (!json_out.empty()) {
        atomic_write(resolve_output_path(json_out), grid_json(grid).dump(2) + "\n");
    }
    int status = kExitOk;
    for (std::size_t i = 0; i < grid.curves.size(); ++i) {
        if (grid.curves[i].stop_reason == StopReason::no_solution) {
            std::cerr << "collet: value " << format_number(values[i]) << ": " << grid.curves[i].message << "\n";
            status = kExitNumerical;
        }
    }
    return status;
}

int run_grip_range(const CommonOptions& opts, const std::string& out) {
    const RunConfig cfg = effective_config(opts);
    const ColletGeometry geom = to_geometry(cfg.geometry);
    const DeflectionCurve curve = march(geom, delta_total(cfg), cfg.run.n_steps, cfg.run.clearance);
    emit(out, grip_report_json(geom, curve).dump(2) + "\n");
    return report_stop(curve);
}

int run_verify(const CommonOptions& opts, std::optional<int> elems, const std::string& out) {
    const RunConfig cfg = effective_config(opts);
    const int n_elems = elems.value_or(cfg.oracle.n_elems);
    if (n_elems < 16) throw ValidationError("verify: --elems must be >= 16");
    const DeflectionCurve curve =
        march(to_geometry(cfg.geometry), delta_total(cfg), cfg.run.n_steps, cfg.run.clearance);
    const std::vector<StepCheck> checks = validate_curve(curve, n_elems);
    emit(out, verify_csv(checks));

    double worst = 0;
    for (const auto& c : checks) worst = std::max(worst, c.validation.tip_err);
    std::cerr << "verify: " << checks.size() << " steps, max tip error " << format_number(worst)
              << (worst <= cfg.oracle.tolerance ? " (within " : " (exceeds ") << format_number(cfg.oracle.tolerance)
              << ")\n";
    return report_stop(curve);
}

int run_section(const CommonOptions& opts, double theta_deg) {
    const RunConfig cfg = effective_config(opts);
    const ColletGeometry geom = to_geometry(cfg.geometry);
    const SectionProperties s = section_at(geom, initial_state(geom), theta_deg * std::numbers::pi / 180.0);
    std::cout << section_json(s).dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Collet jaw deflection model: curves, design spaces, grip ranges and FE verification"};
    app.require_subcommand(1);

    CommonOptions curve_opts, grid_opts, grip_opts, verify_opts, section_opts;
    std::string curve_out, grid_out, grid_json_out, grip_out, verify_out, scenario;
    std::vector<double> values;
    std::optional<int> elems;
    double theta_deg = 45.0;

    auto* curve_cmd = app.add_subcommand("curve", "Tip deflection versus adaptor displacement (CSV)");
    add_common(curve_cmd, curve_opts);
    curve_cmd->add_option("--out", curve_out, "Output CSV (stdout when omitted)");

    auto* grid_cmd = app.add_subcommand("design-space", "Sweep chuck width or adaptor diameter (CSV/JSON)");
    add_common(grid_cmd, grid_opts);
    grid_cmd->add_option("--scenario", scenario, "chuck | adaptor");
    grid_cmd->add_option("--values", values, "Swept values in mm")->delimiter(',');
    grid_cmd->add_option("--out", grid_out, "Output CSV (stdout when omitted)");
    grid_cmd->add_option("--json", grid_json_out, "Also write the full grid as JSON");

    auto* grip_cmd = app.add_subcommand("grip-range", "Min/max grippable knob diameter (JSON)");
    add_common(grip_cmd, grip_opts);
    grip_cmd->add_option("--out", grip_out, "Output JSON (stdout when omitted)");

    auto* verify_cmd = app.add_subcommand("verify", "Per-step analytical versus finite-element errors (CSV)");
    add_common(verify_cmd, verify_opts);
    verify_cmd->add_option("--elems", elems, "Number of frame elements");
    verify_cmd->add_option("--out", verify_out, "Output CSV (stdout when omitted)");

    auto* section_cmd = app.add_subcommand("section", "Cross-section properties at a station (JSON)");
    add_common(section_cmd, section_opts);
    section_cmd->add_option("--theta", theta_deg, "Station angle in degrees")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (*curve_cmd) return run_curve(curve_opts, curve_out);
        if (*grid_cmd) return run_design_space(grid_opts, scenario, values, grid_out, grid_json_out);
        if (*grip_cmd) return run_grip_range(grip_opts, grip_out);
        if (*verify_cmd) return run_verify(verify_opts, elems, verify_out);
        if (*section_cmd) return run_section(section_opts, theta_deg);
    } catch (const ValidationError& e) {
        std::cerr << "collet: " << e.what() << "\n";
        return kExitConfig;
    } catch (const NumericalError& e) {
        std::cerr << "collet: numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const Error& e) {
        std::cerr << "collet: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
