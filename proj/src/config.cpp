#include "tdsts/config.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

namespace tdsts {

namespace {

using nlohmann::json;

void reject_unknown(const json& j, const std::string& ctx,
                    std::initializer_list<const char*> allowed) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) ok = true;
        if (!ok) throw ConfigError("unknown key '" + it.key() + "' in " + ctx);
    }
}

double number_at(const json& j, const std::string& ctx, const char* key,
                 double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number())
        throw ConfigError(std::string("field '") + key + "' in " + ctx +
                          " must be a number");
    return j[key].get<double>();
}

int int_at(const json& j, const std::string& ctx, const char* key, int fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number_integer())
        throw ConfigError(std::string("field '") + key + "' in " + ctx +
                          " must be an integer");
    return j[key].get<int>();
}

std::vector<double> parse_temps(const json& j, const std::string& ctx,
                                const OscillatorParams& osc) {
    if (!j.is_array()) throw ConfigError(ctx + " must be an array");
    std::vector<double> temps;
    int idx = 0;
    for (const auto& entry : j) {
        const std::string ectx = ctx + "[" + std::to_string(idx++) + "]";
        if (!entry.is_object()) throw ConfigError(ectx + " must be an object");
        reject_unknown(entry, ectx, {"T", "tau"});
        const bool has_T = entry.contains("T");
        const bool has_tau = entry.contains("tau");
        if (has_T == has_tau)
            throw ConfigError(ectx + " needs exactly one of 'T' or 'tau'");
        if (has_T)
            temps.push_back(number_at(entry, ectx, "T", 0.0));
        else
            temps.push_back(number_at(entry, ectx, "tau", 0.0) * osc.hbar * osc.omega /
                            osc.kb);
    }
    return temps;
}

StateSpec parse_state(const json& j) {
    reject_unknown(j, "state", {"units", "alpha", "squeeze", "temps"});
    StateSpec s;

    if (j.contains("units")) {
        const auto& u = j["units"];
        reject_unknown(u, "state.units", {"m", "omega", "hbar", "kb"});
        s.osc.m = number_at(u, "state.units", "m", 1.0);
        s.osc.omega = number_at(u, "state.units", "omega", 1.0);
        s.osc.hbar = number_at(u, "state.units", "hbar", 1.0);
        s.osc.kb = number_at(u, "state.units", "kb", 1.0);
    }

    if (j.contains("alpha")) {
        const auto& a = j["alpha"];
        reject_unknown(a, "state.alpha", {"re", "im", "mod", "arg"});
        const bool cartesian = a.contains("re") || a.contains("im");
        const bool polar = a.contains("mod") || a.contains("arg");
        if (cartesian && polar)
            throw ConfigError("state.alpha: give {re, im} or {mod, arg}, not both");
        if (polar)
            s.alpha = Displacement::polar(number_at(a, "state.alpha", "mod", 0.0),
                                          number_at(a, "state.alpha", "arg", 0.0));
        else
            s.alpha = Displacement{number_at(a, "state.alpha", "re", 0.0),
                                   number_at(a, "state.alpha", "im", 0.0)};
    }

    if (j.contains("squeeze")) {
        const auto& z = j["squeeze"];
        reject_unknown(z, "state.squeeze", {"r", "phi"});
        s.z.r = number_at(z, "state.squeeze", "r", 0.0);
        double phi = number_at(z, "state.squeeze", "phi", 0.0);
        phi = std::fmod(phi, 2.0 * std::numbers::pi);
        if (phi < 0.0) phi += 2.0 * std::numbers::pi;
        s.z.phi = phi;
    }

    if (j.contains("temps")) {
        const auto& tp = j["temps"];
        reject_unknown(tp, "state.temps", {"input", "detector"});
        if (tp.contains("input"))
            s.thermal.input_temps = parse_temps(tp["input"], "state.temps.input", s.osc);
        if (tp.contains("detector"))
            s.thermal.detector_temps =
                parse_temps(tp["detector"], "state.temps.detector", s.osc);
    }

    try {
        s.validate();
    } catch (const std::domain_error& e) {
        throw ConfigError(std::string("state: ") + e.what());
    }
    return s;
}

}  // namespace

double TimeGrid::at(int i) const {
    if (count <= 1) return start;
    return start + (stop - start) * static_cast<double>(i) /
                       static_cast<double>(count - 1);
}

RunConfig parse_config_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config root must be an object");
    reject_unknown(j, "config",
                   {"state", "time_grid", "grids", "oracle", "output"});

    RunConfig cfg;
    if (j.contains("state")) cfg.state = parse_state(j["state"]);

    if (j.contains("time_grid")) {
        const auto& tg = j["time_grid"];
        reject_unknown(tg, "time_grid", {"start", "stop", "count"});
        cfg.time_grid.start = number_at(tg, "time_grid", "start", 0.0);
        cfg.time_grid.stop = number_at(tg, "time_grid", "stop", cfg.time_grid.start);
        cfg.time_grid.count = int_at(tg, "time_grid", "count", 1);
        if (cfg.time_grid.count < 1)
            throw ConfigError("time_grid.count must be >= 1");
    }

    if (j.contains("grids")) {
        const auto& g = j["grids"];
        reject_unknown(g, "grids", {"x", "p"});
        for (const char* axis : {"x", "p"}) {
            if (!g.contains(axis)) continue;
            const auto& gs = g[axis];
            const std::string ctx = std::string("grids.") + axis;
            reject_unknown(gs, ctx, {"halfwidth_sigmas", "points"});
            GridSpec& dst = (*axis == 'x') ? cfg.grid_x : cfg.grid_p;
            dst.halfwidth_sigmas = number_at(gs, ctx, "halfwidth_sigmas", 8.0);
            dst.points = int_at(gs, ctx, "points", 201);
            if (dst.points < 2) throw ConfigError(ctx + ".points must be >= 2");
            if (!(dst.halfwidth_sigmas > 0.0))
                throw ConfigError(ctx + ".halfwidth_sigmas must be > 0");
        }
    }

    if (j.contains("oracle")) {
        const auto& o = j["oracle"];
        reject_unknown(o, "oracle", {"fock_cutoff", "quad_points"});
        cfg.oracle.fock_cutoff = int_at(o, "oracle", "fock_cutoff", 60);
        cfg.oracle.quad_points = int_at(o, "oracle", "quad_points", 2001);
        if (cfg.oracle.fock_cutoff < 8)
            throw ConfigError("oracle.fock_cutoff must be >= 8");
        if (cfg.oracle.quad_points < 101 || cfg.oracle.quad_points % 2 == 0)
            throw ConfigError("oracle.quad_points must be odd and >= 101");
    }

    if (j.contains("output")) {
        const auto& o = j["output"];
        reject_unknown(o, "output", {"format", "path"});
        if (o.contains("format")) {
            if (!o["format"].is_string())
                throw ConfigError("output.format must be a string");
            cfg.output.format = o["format"].get<std::string>();
            if (cfg.output.format != "csv" && cfg.output.format != "json")
                throw ConfigError("output.format must be 'csv' or 'json'");
        }
        if (o.contains("path")) {
            if (!o["path"].is_string())
                throw ConfigError("output.path must be a string");
            cfg.output.path = o["path"].get<std::string>();
        }
    }

    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    RunConfig cfg = parse_config_text(ss.str());
    if (const char* env = std::getenv("TDSTS_FOCK_CUTOFF")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 8)
            throw ConfigError("TDSTS_FOCK_CUTOFF must be an integer >= 8");
        cfg.oracle.fock_cutoff = static_cast<int>(v);
    }
    return cfg;
}

}  // namespace tdsts
