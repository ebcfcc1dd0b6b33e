#include "wolfpack/config.hpp"

#include <fstream>
#include <set>

#include "json.hpp"

#include "wolfpack/csvfmt.hpp"

namespace wolfpack {

namespace {

using nlohmann::json;

void reject_unknown(const json& j, const std::set<std::string>& allowed,
                    const std::string& where) {
    for (const auto& item : j.items()) {
        if (!allowed.count(item.key()))
            throw ConfigError("config: unknown key '" + where + item.key() + "'");
    }
}

template <typename T>
void read(const json& j, const char* key, T& out, const std::string& where) {
    if (!j.contains(key)) return;
    try {
        out = j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError("config: bad value for '" + where + key + "'");
    }
}

void read_bounds(const json& j, const char* key, double& lo, double& hi,
                 const std::string& where) {
    if (!j.contains(key)) return;
    const json& v = j.at(key);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        throw ConfigError("config: '" + where + key + "' must be [min, max]");
    lo = v[0].get<double>();
    hi = v[1].get<double>();
    if (!(lo < hi)) throw ConfigError("config: '" + where + key + "' needs min < max");
}

}  // namespace

AppConfig load_config(const std::string& path) {
    AppConfig config;
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    json root;
    try {
        root = json::parse(in);
    } catch (const json::exception& e) {
        throw ConfigError("config: " + path + " is not valid JSON: " + e.what());
    }
    if (!root.is_object()) throw ConfigError("config: top level must be an object");
    reject_unknown(root, {"optimizer", "space", "model", "sweep", "sites"}, "");

    if (root.contains("optimizer")) {
        const json& j = root["optimizer"];
        reject_unknown(j, {"variant", "agents", "iters", "seed", "repeats", "runs", "jobs", "hc"},
                       "optimizer.");
        auto& o = config.optimizer;
        read(j, "variant", o.variant, "optimizer.");
        read(j, "agents", o.agents, "optimizer.");
        read(j, "iters", o.iters, "optimizer.");
        if (j.contains("seed")) {
            read(j, "seed", o.seed, "optimizer.");
            o.seed_from_file = true;
        }
        read(j, "repeats", o.repeats, "optimizer.");
        read(j, "runs", o.runs, "optimizer.");
        read(j, "jobs", o.jobs, "optimizer.");
        if (j.contains("hc")) {
            const json& h = j["hc"];
            reject_unknown(h, {"g", "window", "threshold", "max_iters", "warmup"},
                           "optimizer.hc.");
            read(h, "g", o.hc.resolution, "optimizer.hc.");
            read(h, "window", o.hc.window, "optimizer.hc.");
            read(h, "threshold", o.hc.threshold, "optimizer.hc.");
            read(h, "max_iters", o.hc.max_local_iters, "optimizer.hc.");
            read(h, "warmup", o.hc.warmup_fraction, "optimizer.hc.");
        }
    }
    if (root.contains("space")) {
        const json& j = root["space"];
        reject_unknown(j, {"h", "t", "k", "c"}, "space.");
        auto& s = config.space;
        read_bounds(j, "h", s.h_min, s.h_max, "space.");
        read_bounds(j, "t", s.t_min, s.t_max, "space.");
        read_bounds(j, "k", s.k_min, s.k_max, "space.");
        read_bounds(j, "c", s.c_min, s.c_max, "space.");
    }
    if (root.contains("model")) {
        const json& j = root["model"];
        reject_unknown(j,
                       {"coeffs", "inertia", "flap_mass", "cg_z", "restoring", "t_end", "ramp",
                        "dt", "memory", "theta_limit_deg"},
                       "model.");
        auto& m = config.model;
        read(j, "coeffs", m.coeffs, "model.");
        read(j, "inertia", m.inertia, "model.");
        read(j, "flap_mass", m.flap_mass, "model.");
        read(j, "cg_z", m.cg_z, "model.");
        read(j, "restoring", m.restoring, "model.");
        read(j, "t_end", m.t_end, "model.");
        read(j, "ramp", m.ramp, "model.");
        read(j, "dt", m.dt, "model.");
        read(j, "memory", m.memory, "model.");
        read(j, "theta_limit_deg", m.theta_limit_deg, "model.");
    }
    if (root.contains("sweep")) {
        const json& j = root["sweep"];
        reject_unknown(j, {"vary", "n1", "n2", "fix"}, "sweep.");
        auto& s = config.sweep;
        if (j.contains("vary")) {
            const json& v = j["vary"];
            if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_string())
                throw ConfigError("config: 'sweep.vary' must be two variable names");
            s.vary1 = v[0].get<std::string>();
            s.vary2 = v[1].get<std::string>();
        }
        read(j, "n1", s.n1, "sweep.");
        read(j, "n2", s.n2, "sweep.");
        if (j.contains("fix")) {
            const json& f = j["fix"];
            reject_unknown(f, {"H", "T", "K", "C"}, "sweep.fix.");
            read(f, "H", s.fix_h, "sweep.fix.");
            read(f, "T", s.fix_t, "sweep.fix.");
            read(f, "K", s.fix_k, "sweep.fix.");
            read(f, "C", s.fix_c, "sweep.fix.");
        }
    }
    if (root.contains("sites")) {
        const json& j = root["sites"];
        reject_unknown(j, {"data"}, "sites.");
        read(j, "data", config.sites.data, "sites.");
    }
    return config;
}

void apply_override(AppConfig& config, const std::string& assignment) {
    const std::size_t eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0)
        throw ConfigError("--set expects section.key=value, got '" + assignment + "'");
    const std::string key = assignment.substr(0, eq);
    const std::string text = assignment.substr(eq + 1);

    auto as_double = [&](double& out) {
        if (!parse_double(text, out))
            throw ConfigError("--set " + key + ": '" + text + "' is not a number");
    };
    auto as_int = [&](int& out) {
        double v = 0.0;
        as_double(v);
        out = static_cast<int>(v);
    };
    auto as_u64 = [&](std::uint64_t& out) {
        try {
            out = std::stoull(text);
        } catch (...) {
            throw ConfigError("--set " + key + ": '" + text + "' is not an integer");
        }
    };

    auto& o = config.optimizer;
    auto& s = config.space;
    auto& m = config.model;
    auto& w = config.sweep;
    if (key == "optimizer.variant") o.variant = text;
    else if (key == "optimizer.agents") as_int(o.agents);
    else if (key == "optimizer.iters") as_int(o.iters);
    else if (key == "optimizer.seed") { as_u64(o.seed); o.seed_from_file = true; }
    else if (key == "optimizer.repeats") as_int(o.repeats);
    else if (key == "optimizer.runs") as_int(o.runs);
    else if (key == "optimizer.jobs") as_int(o.jobs);
    else if (key == "optimizer.hc.g") as_int(o.hc.resolution);
    else if (key == "optimizer.hc.window") as_int(o.hc.window);
    else if (key == "optimizer.hc.threshold") as_double(o.hc.threshold);
    else if (key == "optimizer.hc.max_iters") as_int(o.hc.max_local_iters);
    else if (key == "optimizer.hc.warmup") as_double(o.hc.warmup_fraction);
    else if (key == "space.h.min") as_double(s.h_min);
    else if (key == "space.h.max") as_double(s.h_max);
    else if (key == "space.t.min") as_double(s.t_min);
    else if (key == "space.t.max") as_double(s.t_max);
    else if (key == "space.k.min") as_double(s.k_min);
    else if (key == "space.k.max") as_double(s.k_max);
    else if (key == "space.c.min") as_double(s.c_min);
    else if (key == "space.c.max") as_double(s.c_max);
    else if (key == "model.coeffs") m.coeffs = text;
    else if (key == "model.inertia") as_double(m.inertia);
    else if (key == "model.flap_mass") as_double(m.flap_mass);
    else if (key == "model.cg_z") as_double(m.cg_z);
    else if (key == "model.restoring") as_double(m.restoring);
    else if (key == "model.t_end") as_double(m.t_end);
    else if (key == "model.ramp") as_double(m.ramp);
    else if (key == "model.dt") as_double(m.dt);
    else if (key == "model.memory") as_double(m.memory);
    else if (key == "model.theta_limit_deg") as_double(m.theta_limit_deg);
    else if (key == "sweep.vary1") w.vary1 = text;
    else if (key == "sweep.vary2") w.vary2 = text;
    else if (key == "sweep.n1") as_int(w.n1);
    else if (key == "sweep.n2") as_int(w.n2);
    else if (key == "sweep.fix.H") as_double(w.fix_h);
    else if (key == "sweep.fix.T") as_double(w.fix_t);
    else if (key == "sweep.fix.K") as_double(w.fix_k);
    else if (key == "sweep.fix.C") as_double(w.fix_c);
    else if (key == "sites.data") config.sites.data = text;
    else throw ConfigError("--set: unknown config key '" + key + "'");
}

SearchSpace space_from_config(const AppConfig& config) {
    const auto& s = config.space;
    return SearchSpace({s.h_min, s.t_min, s.k_min, s.c_min},
                       {s.h_max, s.t_max, s.k_max, s.c_max}, {"m", "s", "MNm/rad", "MNsm/rad"});
}

wec::WecContext context_from_config(const AppConfig& config) {
    wec::WecContext ctx;
    const auto& m = config.model;
    ctx.coeffs = (m.coeffs == "synthetic") ? wec::synthetic_coeffs_default()
                                           : wec::load_coeffs_csv(m.coeffs);
    ctx.body.inertia = m.inertia;
    ctx.body.flap_mass = m.flap_mass;
    ctx.body.cg_z = m.cg_z;
    ctx.body.restoring = m.restoring;
    ctx.sim.t_end = m.t_end;
    ctx.sim.ramp = m.ramp;
    ctx.sim.dt = m.dt;
    ctx.sim.memory = m.memory;
    ctx.theta_limit_deg = m.theta_limit_deg;
    return ctx;
}

}  // namespace wolfpack
