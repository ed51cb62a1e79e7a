#pragma once

// JSON run configuration. Angles are degrees in the file and are converted to
// radians only when a ColletGeometry is built.
//
//   {
//     "geometry": {"a": 34, "b0": 26.5, "c": 4, "d": 34, "t": 2,
//                  "gamma_deg": 11.46, "E": 1700, "leaves": 4,
//                  "rest_opening": 53, "pitch": 1},
//     "run":    {"delta_total": 2.0 | "revolutions": 2, "n_steps": 60, "clearance": 1.5},
//     "sweep":  {"scenario": "chuck" | "adaptor", "values": [3, 4, 6]},
//     "oracle": {"n_elems": 400, "tolerance": 0.1}
//   }
//
// Every block and key is optional; missing entries take the defaults below.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "collet/designspace.hpp"
#include "collet/geometry.hpp"

namespace collet {

struct GeometryConfig {
    double a = 34.0;
    double b0 = 26.5;
    double c = 4.0;
    double d = 34.0;
    double t = 2.0;
    double gamma_deg = 0.2 * 180.0 / 3.14159265358979323846;
    double E = 1700.0;
    int leaves = 4;
    double rest_opening = 53.0;
    double pitch = 1.0;

    friend bool operator==(const GeometryConfig&, const GeometryConfig&) = default;
};

struct RunBlock {
    std::optional<double> delta_total = 2.0;
    std::optional<double> revolutions;
    int n_steps = 60;
    double clearance = 1.5;

    friend bool operator==(const RunBlock&, const RunBlock&) = default;
};

struct SweepBlock {
    Scenario scenario = Scenario::chuck_size;
    std::vector<double> values;

    friend bool operator==(const SweepBlock&, const SweepBlock&) = default;
};

struct OracleBlock {
    int n_elems = 400;
    double tolerance = 0.10;

    friend bool operator==(const OracleBlock&, const OracleBlock&) = default;
};

struct RunConfig {
    GeometryConfig geometry;
    RunBlock run;
    SweepBlock sweep;
    OracleBlock oracle;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

ColletGeometry to_geometry(const GeometryConfig& g);
GeometryConfig from_geometry(const ColletGeometry& g);

/// Adaptor travel requested by the run block.
double delta_total(const RunConfig& config);

/// Validates blocks and geometry; throws ValidationError.
void validate(const RunConfig& config);

RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RunConfig& config);

/// Reads and validates a config file. Throws ValidationError when the file is
/// missing, malformed or invalid.
RunConfig load_config(const std::filesystem::path& path);

}  // namespace collet
