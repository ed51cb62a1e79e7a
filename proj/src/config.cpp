#include "collet/config.hpp"

#include <fstream>
#include <numbers>
#include <set>

namespace collet {

using nlohmann::json;

ColletGeometry to_geometry(const GeometryConfig& g) {
    ColletGeometry out;
    out.a = g.a;
    out.b0 = g.b0;
    out.c = g.c;
    out.d = g.d;
    out.t = g.t;
    out.gamma = g.gamma_deg * std::numbers::pi / 180.0;
    out.E = g.E;
    out.leaves = g.leaves;
    out.rest_opening = g.rest_opening;
    out.pitch = g.pitch;
    return out;
}

GeometryConfig from_geometry(const ColletGeometry& g) {
    GeometryConfig out;
    out.a = g.a;
    out.b0 = g.b0;
    out.c = g.c;
    out.d = g.d;
    out.t = g.t;
    out.gamma_deg = g.gamma * 180.0 / std::numbers::pi;
    out.E = g.E;
    out.leaves = g.leaves;
    out.rest_opening = g.rest_opening;
    out.pitch = g.pitch;
    return out;
}

double delta_total(const RunConfig& config) {
    if (config.run.delta_total) {
        return *config.run.delta_total;
    }
    return thread_to_displacement(config.geometry.pitch, config.run.revolutions.value_or(0.0));
}

void validate(const RunConfig& config) {
    const auto& run = config.run;
    if (run.delta_total.has_value() == run.revolutions.has_value()) {
        throw ValidationError("run block needs exactly one of delta_total or revolutions");
    }
    if (run.delta_total && !(*run.delta_total >= 0)) throw ValidationError("delta_total must be >= 0");
    if (run.revolutions && !(*run.revolutions >= 0)) throw ValidationError("revolutions must be >= 0");
    if (run.n_steps < 1) throw ValidationError("n_steps must be >= 1");
    if (!(run.clearance > 0)) throw ValidationError("clearance must be > 0");
    if (config.oracle.n_elems < 16) throw ValidationError("oracle n_elems must be >= 16");
    if (!(config.oracle.tolerance > 0)) throw ValidationError("oracle tolerance must be > 0");
    validate(to_geometry(config.geometry));
}

namespace {

void reject_unknown(const json& block, const std::set<std::string>& known, const std::string& where) {
    if (!block.is_object()) {
        throw ValidationError("config: '" + where + "' must be an object");
    }
    for (const auto& item : block.items()) {
        if (!known.contains(item.key())) {
            throw ValidationError("config: unknown key '" + item.key() + "' in '" + where + "'");
        }
    }
}

template <typename T>
void read(const json& block, const char* key, T& out) {
    if (block.contains(key)) {
        out = block.at(key).get<T>();
    }
}

}  // namespace

RunConfig config_from_json(const json& j) {
    RunConfig cfg;
    try {
        reject_unknown(j, {"geometry", "run", "sweep", "oracle"}, "root");
        if (j.contains("geometry")) {
            const json& g = j.at("geometry");
            reject_unknown(g, {"a", "b0", "c", "d", "t", "gamma_deg", "E", "leaves", "rest_opening", "pitch"},
                           "geometry");
            auto& G = cfg.geometry;
            read(g, "a", G.a);
            read(g, "b0", G.b0);
            read(g, "c", G.c);
            read(g, "d", G.d);
            read(g, "t", G.t);
            read(g, "gamma_deg", G.gamma_deg);
            read(g, "E", G.E);
            read(g, "leaves", G.leaves);
            read(g, "rest_opening", G.rest_opening);
            read(g, "pitch", G.pitch);
        }
        if (j.contains("run")) {
            const json& r = j.at("run");
            reject_unknown(r, {"delta_total", "revolutions", "n_steps", "clearance"}, "run");
            if (r.contains("delta_total") || r.contains("revolutions")) {
                cfg.run.delta_total.reset();
                if (r.contains("delta_total")) cfg.run.delta_total = r.at("delta_total").get<double>();
                if (r.contains("revolutions")) cfg.run.revolutions = r.at("revolutions").get<double>();
            }
            read(r, "n_steps", cfg.run.n_steps);
            read(r, "clearance", cfg.run.clearance);
        }
        if (j.contains("sweep")) {
            const json& s = j.at("sweep");
            reject_unknown(s, {"scenario", "values"}, "sweep");
            if (s.contains("scenario")) cfg.sweep.scenario = parse_scenario(s.at("scenario").get<std::string>());
            read(s, "values", cfg.sweep.values);
        }
        if (j.contains("oracle")) {
            const json& o = j.at("oracle");
            reject_unknown(o, {"n_elems", "tolerance"}, "oracle");
            read(o, "n_elems", cfg.oracle.n_elems);
            read(o, "tolerance", cfg.oracle.tolerance);
        }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("config: ") + e.what());
    }
    validate(cfg);
    return cfg;
}

json to_json(const RunConfig& cfg) {
    const auto& G = cfg.geometry;
    json j;
    j["geometry"] = {{"a", G.a},         {"b0", G.b0}, {"c", G.c},           {"d", G.d},
                     {"t", G.t},         {"gamma_deg", G.gamma_deg},         {"E", G.E},
                     {"leaves", G.leaves}, {"rest_opening", G.rest_opening}, {"pitch", G.pitch}};
    json run = {{"n_steps", cfg.run.n_steps}, {"clearance", cfg.run.clearance}};
    if (cfg.run.delta_total) run["delta_total"] = *cfg.run.delta_total;
    if (cfg.run.revolutions) run["revolutions"] = *cfg.run.revolutions;
    j["run"] = run;
    j["sweep"] = {{"scenario", cfg.sweep.scenario == Scenario::chuck_size ? "chuck" : "adaptor"},
                  {"values", cfg.sweep.values}};
    j["oracle"] = {{"n_elems", cfg.oracle.n_elems}, {"tolerance", cfg.oracle.tolerance}};
    return j;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open config file '" + path.string() + "'");
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError("config '" + path.string() + "' is not valid JSON: " + e.what());
    }
    return config_from_json(j);
}

}  // namespace collet
