#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "collet/geometry.hpp"
#include "collet/solver.hpp"

namespace collet {

/// Which geometric field a sweep varies: chuck slot width c or adaptor diameter d.
enum class Scenario { chuck_size, adaptor_diameter };

std::string_view to_string(Scenario s);
/// Accepts "chuck"/"chuck_size" and "adaptor"/"adaptor_diameter".
Scenario parse_scenario(std::string_view text);

enum class Preset { S1, S2, S3, S4, S5 };

Preset parse_preset(std::string_view name);

/// Sample geometries S1..S5: a = 34, b = 26.5 with
///   S1: c = 3, d = 34;  S2: c = 6, d = 34;  S3: c = 4, d = 34;
///   S4: c = 4, d = 30;  S5: c = 4, d = 40.
/// Fields the samples do not fix use these assumptions: gamma = 0.2 rad,
/// t = 2 mm, E = 1700 MPa, 4 leaves, pitch 1 mm, rest opening 53 mm.
ColletGeometry preset(Preset name);
ColletGeometry preset(std::string_view name);

struct DesignSpaceGrid {
    Scenario scenario = Scenario::chuck_size;
    ColletGeometry base_geometry;
    std::vector<double> swept_values;
    std::vector<DeflectionCurve> curves;
    /// Shared adaptor-displacement grid for cross-curve comparison.
    std::vector<double> common_delta_grid;
    /// Tip deflection of each curve resampled onto common_delta_grid.
    std::vector<std::vector<double>> resampled;
};

inline constexpr int kCommonGridSamples = 200;

/// Copy of `base` with the scenario's field set to `value`.
ColletGeometry with_swept_value(const ColletGeometry& base, Scenario scenario, double value);

/// Marches every swept geometry (in parallel) and resamples the curves onto
/// kCommonGridSamples uniform samples up to the shortest curve's final
/// displacement. Output order follows `values`.
DesignSpaceGrid sweep(const ColletGeometry& base, Scenario scenario, const std::vector<double>& values,
                      double delta_total, int n_steps = kDefaultSteps,
                      double clearance = kDefaultClearance);

}  // namespace collet
