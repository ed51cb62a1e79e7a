#pragma once

// CSV and JSON emitters. Numbers are written with 9 significant digits using
// the locale-independent std::to_chars; lines end with '\n'.

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "collet/designspace.hpp"
#include "collet/oracle.hpp"
#include "collet/section.hpp"
#include "collet/solver.hpp"

namespace collet {

inline constexpr const char* kCurveCsvHeader = "delta_mm,delta_tip_mm,b_mm,beta_rad,phi_rad,fx_n,fy_n";

/// Shortest 9-significant-digit text for v.
std::string format_number(double v);

/// v rounded to 9 significant digits, for JSON output.
double round9(double v);

std::string curve_csv(const DeflectionCurve& curve);

/// Long-format design grid: one row per (swept value, common-grid sample).
std::string grid_csv(const DesignSpaceGrid& grid);
nlohmann::json grid_json(const DesignSpaceGrid& grid);

nlohmann::json grip_report_json(const ColletGeometry& geom, const DeflectionCurve& curve);

std::string verify_csv(const std::vector<StepCheck>& checks);

nlohmann::json section_json(const SectionProperties& s);

/// Resolves relative output paths against $COLLET_OUTPUT_DIR when it is set.
std::filesystem::path resolve_output_path(const std::filesystem::path& path);

/// Writes `content` to a temporary sibling file and renames it over `path`.
void atomic_write(const std::filesystem::path& path, const std::string& content);

}  // namespace collet
