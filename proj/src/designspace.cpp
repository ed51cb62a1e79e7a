#include "collet/designspace.hpp"

#include <algorithm>
#include <future>
#include <limits>

namespace collet {

std::string_view to_string(Scenario s) {
    return s == Scenario::chuck_size ? "chuck_size" : "adaptor_diameter";
}

Scenario parse_scenario(std::string_view text) {
    if (text == "chuck" || text == "chuck_size") return Scenario::chuck_size;
    if (text == "adaptor" || text == "adaptor_diameter") return Scenario::adaptor_diameter;
    throw ValidationError("unknown scenario '" + std::string(text) + "' (expected chuck or adaptor)");
}

Preset parse_preset(std::string_view name) {
    if (name == "S1") return Preset::S1;
    if (name == "S2") return Preset::S2;
    if (name == "S3") return Preset::S3;
    if (name == "S4") return Preset::S4;
    if (name == "S5") return Preset::S5;
    throw ValidationError("unknown preset '" + std::string(name) + "' (expected S1..S5)");
}

ColletGeometry preset(Preset name) {
    ColletGeometry g;  // defaults carry the shared assumptions
    g.a = 34.0;
    g.b0 = 26.5;
    switch (name) {
        case Preset::S1: g.c = 3.0; g.d = 34.0; break;
        case Preset::S2: g.c = 6.0; g.d = 34.0; break;
        case Preset::S3: g.c = 4.0; g.d = 34.0; break;
        case Preset::S4: g.c = 4.0; g.d = 30.0; break;
        case Preset::S5: g.c = 4.0; g.d = 40.0; break;
    }
    return g;
}

ColletGeometry preset(std::string_view name) { return preset(parse_preset(name)); }

ColletGeometry with_swept_value(const ColletGeometry& base, Scenario scenario, double value) {
    ColletGeometry g = base;
    if (scenario == Scenario::chuck_size) {
        g.c = value;
    } else {
        g.d = value;
    }
    return g;
}

DesignSpaceGrid sweep(const ColletGeometry& base, Scenario scenario, const std::vector<double>& values,
                      double delta_total, int n_steps, double clearance) {
    if (values.empty()) {
        throw ValidationError("sweep: no values to sweep");
    }
    DesignSpaceGrid grid;
    grid.scenario = scenario;
    grid.base_geometry = base;
    grid.swept_values = values;

    std::vector<ColletGeometry> geometries;
    geometries.reserve(values.size());
    for (double v : values) {
        geometries.push_back(with_swept_value(base, scenario, v));
        validate(geometries.back());
    }

    std::vector<std::future<DeflectionCurve>> jobs;
    jobs.reserve(geometries.size());
    for (const auto& g : geometries) {
        jobs.push_back(std::async(std::launch::async,
                                  [g, delta_total, n_steps, clearance] { return march(g, delta_total, n_steps, clearance); }));
    }
    for (auto& job : jobs) {
        grid.curves.push_back(job.get());
    }

    double end = std::numeric_limits<double>::infinity();
    for (const auto& curve : grid.curves) {
        end = std::min(end, curve.last().delta_cum);
    }
    grid.common_delta_grid.resize(kCommonGridSamples);
    for (int i = 0; i < kCommonGridSamples; ++i) {
        grid.common_delta_grid[i] = end * i / (kCommonGridSamples - 1);
    }
    for (const auto& curve : grid.curves) {
        std::vector<double> tips;
        tips.reserve(kCommonGridSamples);
        for (double delta : grid.common_delta_grid) {
            tips.push_back(tip_at(curve, delta));
        }
        grid.resampled.push_back(std::move(tips));
    }
    return grid;
}

}  // namespace collet
