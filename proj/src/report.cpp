#include "collet/report.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <system_error>
#include <unistd.h>

namespace collet {

using nlohmann::json;

std::string format_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 9);
    return std::string(buf, res.ptr);
}

double round9(double v) {
    const std::string text = format_number(v);
    double out = 0;
    std::from_chars(text.data(), text.data() + text.size(), out);
    return out;
}

namespace {

void append_row(std::string& out, std::initializer_list<double> values) {
    bool first = true;
    for (double v : values) {
        if (!first) out += ',';
        out += format_number(v);
        first = false;
    }
    out += '\n';
}

json curve_rows_json(const DeflectionCurve& curve) {
    json rows = json::array();
    for (const auto& r : curve.rows) {
        rows.push_back({round9(r.delta_cum), round9(r.delta_tip_cum), round9(r.b), round9(r.beta),
                        round9(r.phi), round9(r.F_X), round9(r.F_Y)});
    }
    return rows;
}

}  // namespace

std::string curve_csv(const DeflectionCurve& curve) {
    std::string out = kCurveCsvHeader;
    out += '\n';
    for (const auto& r : curve.rows) {
        append_row(out, {r.delta_cum, r.delta_tip_cum, r.b, r.beta, r.phi, r.F_X, r.F_Y});
    }
    return out;
}

std::string grid_csv(const DesignSpaceGrid& grid) {
    std::string out = grid.scenario == Scenario::chuck_size ? "c_mm" : "d_mm";
    out += ",delta_mm,delta_tip_mm\n";
    for (std::size_t i = 0; i < grid.swept_values.size(); ++i) {
        for (std::size_t k = 0; k < grid.common_delta_grid.size(); ++k) {
            append_row(out, {grid.swept_values[i], grid.common_delta_grid[k], grid.resampled[i][k]});
        }
    }
    return out;
}

json grid_json(const DesignSpaceGrid& grid) {
    json curves = json::array();
    for (std::size_t i = 0; i < grid.curves.size(); ++i) {
        const auto& c = grid.curves[i];
        json entry = {{"value", round9(grid.swept_values[i])},
                      {"stop_reason", std::string(to_string(c.stop_reason))},
                      {"columns", {"delta_mm", "delta_tip_mm", "b_mm", "beta_rad", "phi_rad", "fx_n", "fy_n"}},
                      {"rows", curve_rows_json(c)}};
        if (!c.message.empty()) entry["message"] = c.message;
        curves.push_back(entry);
    }
    json common = json::array();
    for (double v : grid.common_delta_grid) common.push_back(round9(v));
    json resampled = json::array();
    for (const auto& tips : grid.resampled) {
        json row = json::array();
        for (double v : tips) row.push_back(round9(v));
        resampled.push_back(row);
    }
    return {{"scenario", std::string(to_string(grid.scenario))},
            {"common_delta_grid", common},
            {"resampled_delta_tip", resampled},
            {"curves", curves}};
}

json grip_report_json(const ColletGeometry& geom, const DeflectionCurve& curve) {
    const GripRange range = grip_range(geom, curve);
    return {{"min", round9(range.min_diameter)},
            {"max", round9(range.max_diameter)},
            {"tip_travel_mm", round9(curve.max_tip_travel())},
            {"interference_limit_mm", round9(interference_limit(geom))},
            {"stop_reason", std::string(to_string(curve.stop_reason))}};
}

std::string verify_csv(const std::vector<StepCheck>& checks) {
    std::string out = "step,delta_mm,delta_tip_mm,gap_mm,tip_step_mm,oracle_contact_mm,oracle_tip_mm,contact_err,tip_err,absolute\n";
    for (const auto& c : checks) {
        out += std::to_string(c.step);
        out += ',';
        const auto& v = c.validation;
        std::string tail;
        append_row(tail, {c.delta_cum, c.delta_tip_cum, c.solution.gap, c.solution.delta_tip_step, v.contact_v,
                          v.tip_v, v.contact_err, v.tip_err});
        tail.pop_back();
        out += tail;
        out += v.absolute ? ",1\n" : ",0\n";
    }
    return out;
}

json section_json(const SectionProperties& s) {
    return {{"theta_rad", round9(s.theta)}, {"R_bar_mm", round9(s.R_bar)}, {"alpha_rad", round9(s.alpha)},
            {"y_bar_mm", round9(s.y_bar)},  {"area_mm2", round9(s.area)},   {"I_zz_mm4", round9(s.I_zz)},
            {"I_c_mm4", round9(s.I_c)}};
}

std::filesystem::path resolve_output_path(const std::filesystem::path& path) {
    const char* dir = std::getenv("COLLET_OUTPUT_DIR");
    if (dir != nullptr && *dir != '\0' && path.is_relative()) {
        return std::filesystem::path(dir) / path;
    }
    return path;
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error("cannot write '" + tmp.string() + "'");
        }
        out << content;
        out.flush();
        if (!out) {
            throw Error("write to '" + tmp.string() + "' failed");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw Error("cannot move output into place at '" + path.string() + "'");
    }
}

}  // namespace collet
