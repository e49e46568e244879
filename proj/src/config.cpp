#include "rsv/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace rsv {

using nlohmann::json;

std::string to_string(RunMode m) {
    switch (m) {
        case RunMode::simulate: return "simulate";
        case RunMode::picard: return "picard";
        case RunMode::mms_convergence: return "mms_convergence";
        case RunMode::operator_probe: return "operator_probe";
    }
    return "unknown";
}

Gravity GravitySpec::build() const {
    if (kind == "constant") return constant_gravity(g0);
    if (kind == "oscillating") return oscillating_gravity(g0, amplitude, omega);
    throw ConfigError("gravity.kind must be 'constant' or 'oscillating', got '" +
                      kind + "'");
}

namespace {

void reject_unknown(const json& obj, const std::string& where,
                    const std::set<std::string>& allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!allowed.count(it.key()))
            throw ConfigError("unknown key '" + where + it.key() + "'");
    }
}

double get_num(const json& obj, const std::string& key, double def) {
    if (!obj.contains(key)) return def;
    if (!obj[key].is_number())
        throw ConfigError("key '" + key + "' must be a number");
    return obj[key].get<double>();
}

int get_int(const json& obj, const std::string& key, int def) {
    if (!obj.contains(key)) return def;
    if (!obj[key].is_number_integer())
        throw ConfigError("key '" + key + "' must be an integer");
    return obj[key].get<int>();
}

std::string get_str(const json& obj, const std::string& key, const std::string& def) {
    if (!obj.contains(key)) return def;
    if (!obj[key].is_string())
        throw ConfigError("key '" + key + "' must be a string");
    return obj[key].get<std::string>();
}

// Scenario params: every key other than "kind" is a numeric parameter passed
// through to the preset.
ParamMap collect_params(const json& obj, const std::string& where) {
    ParamMap out;
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (it.key() == "kind") continue;
        if (!it.value().is_number())
            throw ConfigError("scenario parameter '" + where + it.key() +
                              "' must be a number");
        out[it.key()] = it.value().get<double>();
    }
    return out;
}

void validate(const RunConfig& cfg) {
    if (!(cfg.L > 0.0)) throw ConfigError("grid.L must satisfy L > 0");
    if (cfg.n < 8) throw ConfigError("grid.n must satisfy n >= 8");
    if (cfg.eps < 0.0) throw ConfigError("physics.eps must satisfy eps >= 0");
    if (!(cfg.gravity.g0 > 0.0))
        throw ConfigError("gravity.g0 must satisfy g0 > 0");
    if (!(cfg.control.cfl > 0.0 && cfg.control.cfl <= 1.0))
        throw ConfigError("control.cfl must lie in (0, 1]");
    if (!(cfg.control.t_end > 0.0))
        throw ConfigError("control.t_end must satisfy t_end > 0");
    if (cfg.control.record_every < 1)
        throw ConfigError("control.record_every must be >= 1");

    const auto& bp = cfg.scenario.bathymetry_params;
    const double d_bar = bp.count("d_bar") ? bp.at("d_bar") : 1.0;
    if (!(d_bar > 0.0)) throw ConfigError("bathymetry d_bar must satisfy d_bar > 0");
    if (cfg.scenario.bathymetry_kind != "flat") {
        const double amp = bp.count("amplitude") ? bp.at("amplitude") : 0.2;
        if (amp >= d_bar)
            throw ConfigError(
                "bathymetry amplitude must stay below d_bar (depth positivity "
                "inf d > 0)");
    }
    // Kind names checked eagerly so a typo fails before any compute.
    bathymetry_kind_from_string(cfg.scenario.bathymetry_kind);
    initial_kind_from_string(cfg.scenario.initial_kind);

    if (cfg.mms.ref_n < 8) throw ConfigError("mms.ref_n must be >= 8");
    for (int n : cfg.mms.grids) {
        if (n < 8) throw ConfigError("mms.grids entries must be >= 8");
        if (cfg.mms.ref_n % n != 0)
            throw ConfigError("mms.ref_n must be a multiple of every mms grid size");
    }
    if (cfg.picard.iterations < 2)
        throw ConfigError("picard.iterations must be >= 2");
    if (cfg.probe.samples < 1) throw ConfigError("probe.samples must be >= 1");
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    if (!root.is_object()) throw ConfigError("config root must be a JSON object");

    reject_unknown(root, "",
                   {"grid", "scenario", "physics", "control", "mode", "output",
                    "mms", "picard", "probe"});

    RunConfig cfg;

    if (root.contains("grid")) {
        const json& g = root["grid"];
        reject_unknown(g, "grid.", {"L", "n"});
        cfg.L = get_num(g, "L", cfg.L);
        cfg.n = get_int(g, "n", cfg.n);
    }

    if (root.contains("scenario")) {
        const json& s = root["scenario"];
        reject_unknown(s, "scenario.", {"initial", "bathymetry"});
        if (s.contains("initial")) {
            cfg.scenario.initial_kind = get_str(s["initial"], "kind", "lake_at_rest");
            cfg.scenario.initial_params = collect_params(s["initial"], "scenario.initial.");
        }
        if (s.contains("bathymetry")) {
            cfg.scenario.bathymetry_kind = get_str(s["bathymetry"], "kind", "flat");
            cfg.scenario.bathymetry_params =
                collect_params(s["bathymetry"], "scenario.bathymetry.");
        }
    }

    if (root.contains("physics")) {
        const json& p = root["physics"];
        reject_unknown(p, "physics.", {"eps", "gravity"});
        cfg.eps = get_num(p, "eps", cfg.eps);
        if (p.contains("gravity")) {
            const json& gv = p["gravity"];
            reject_unknown(gv, "physics.gravity.", {"kind", "g0", "amplitude", "omega"});
            cfg.gravity.kind = get_str(gv, "kind", "constant");
            cfg.gravity.g0 = get_num(gv, "g0", cfg.gravity.g0);
            cfg.gravity.amplitude = get_num(gv, "amplitude", 0.0);
            cfg.gravity.omega = get_num(gv, "omega", 0.0);
        }
    }

    if (root.contains("control")) {
        const json& c = root["control"];
        reject_unknown(c, "control.",
                       {"cfl", "t_end", "dt_max", "record_every", "sup_wx_factor",
                        "inf_h_factor"});
        cfg.control.cfl = get_num(c, "cfl", cfg.control.cfl);
        cfg.control.t_end = get_num(c, "t_end", cfg.control.t_end);
        cfg.control.dt_max = get_num(c, "dt_max", cfg.control.dt_max);
        cfg.control.record_every = get_int(c, "record_every", cfg.control.record_every);
        cfg.control.thresholds.sup_wx_factor =
            get_num(c, "sup_wx_factor", cfg.control.thresholds.sup_wx_factor);
        cfg.control.thresholds.inf_h_factor =
            get_num(c, "inf_h_factor", cfg.control.thresholds.inf_h_factor);
    }

    if (root.contains("mode")) {
        const std::string m = root["mode"].get<std::string>();
        if (m == "simulate") cfg.mode = RunMode::simulate;
        else if (m == "picard") cfg.mode = RunMode::picard;
        else if (m == "mms_convergence") cfg.mode = RunMode::mms_convergence;
        else if (m == "operator_probe") cfg.mode = RunMode::operator_probe;
        else throw ConfigError("unknown mode '" + m + "'");
    }

    if (root.contains("output")) {
        const json& o = root["output"];
        reject_unknown(o, "output.", {"directory", "formats", "snapshot_every"});
        cfg.output.directory = get_str(o, "directory", cfg.output.directory);
        cfg.output.snapshot_every = get_int(o, "snapshot_every", 0);
        if (o.contains("formats")) {
            cfg.output.csv = false;
            cfg.output.json = false;
            for (const auto& f : o["formats"]) {
                const std::string fs = f.get<std::string>();
                if (fs == "csv") cfg.output.csv = true;
                else if (fs == "json") cfg.output.json = true;
                else throw ConfigError("output.formats entries must be 'csv' or 'json'");
            }
        }
    }

    if (root.contains("mms")) {
        const json& m = root["mms"];
        reject_unknown(m, "mms.", {"amplitude", "mode", "omega", "t_end", "grids", "ref_n"});
        cfg.mms.amplitude = get_num(m, "amplitude", cfg.mms.amplitude);
        cfg.mms.mode = get_int(m, "mode", cfg.mms.mode);
        cfg.mms.omega = get_num(m, "omega", cfg.mms.omega);
        cfg.mms.t_end = get_num(m, "t_end", cfg.mms.t_end);
        cfg.mms.ref_n = get_int(m, "ref_n", cfg.mms.ref_n);
        if (m.contains("grids")) {
            cfg.mms.grids.clear();
            for (const auto& v : m["grids"]) cfg.mms.grids.push_back(v.get<int>());
        }
    }

    if (root.contains("picard")) {
        const json& p = root["picard"];
        reject_unknown(p, "picard.", {"T", "iterations"});
        cfg.picard.T = get_num(p, "T", cfg.picard.T);
        cfg.picard.iterations = get_int(p, "iterations", cfg.picard.iterations);
    }

    if (root.contains("probe")) {
        const json& p = root["probe"];
        reject_unknown(p, "probe.", {"seed", "samples", "n", "eps"});
        cfg.probe.seed = static_cast<unsigned long long>(get_num(p, "seed", 1));
        cfg.probe.samples = get_int(p, "samples", cfg.probe.samples);
        cfg.probe.n = get_int(p, "n", cfg.probe.n);
        cfg.probe.eps = get_num(p, "eps", cfg.probe.eps);
    }

    validate(cfg);
    return cfg;
}

RunConfig parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

std::string config_to_json(const RunConfig& cfg) {
    json root;
    root["grid"] = {{"L", cfg.L}, {"n", cfg.n}};
    json init = {{"kind", cfg.scenario.initial_kind}};
    for (const auto& [k, v] : cfg.scenario.initial_params) init[k] = v;
    json bathy = {{"kind", cfg.scenario.bathymetry_kind}};
    for (const auto& [k, v] : cfg.scenario.bathymetry_params) bathy[k] = v;
    root["scenario"] = {{"initial", init}, {"bathymetry", bathy}};
    root["physics"] = {{"eps", cfg.eps},
                       {"gravity",
                        {{"kind", cfg.gravity.kind},
                         {"g0", cfg.gravity.g0},
                         {"amplitude", cfg.gravity.amplitude},
                         {"omega", cfg.gravity.omega}}}};
    root["control"] = {{"cfl", cfg.control.cfl},
                       {"t_end", cfg.control.t_end},
                       {"dt_max", cfg.control.dt_max},
                       {"record_every", cfg.control.record_every},
                       {"sup_wx_factor", cfg.control.thresholds.sup_wx_factor},
                       {"inf_h_factor", cfg.control.thresholds.inf_h_factor}};
    root["mode"] = to_string(cfg.mode);
    std::vector<std::string> formats;
    if (cfg.output.csv) formats.push_back("csv");
    if (cfg.output.json) formats.push_back("json");
    root["output"] = {{"directory", cfg.output.directory},
                      {"formats", formats},
                      {"snapshot_every", cfg.output.snapshot_every}};
    root["mms"] = {{"amplitude", cfg.mms.amplitude}, {"mode", cfg.mms.mode},
                   {"omega", cfg.mms.omega},         {"t_end", cfg.mms.t_end},
                   {"grids", cfg.mms.grids},         {"ref_n", cfg.mms.ref_n}};
    root["picard"] = {{"T", cfg.picard.T}, {"iterations", cfg.picard.iterations}};
    root["probe"] = {{"seed", cfg.probe.seed},
                     {"samples", cfg.probe.samples},
                     {"n", cfg.probe.n},
                     {"eps", cfg.probe.eps}};
    return root.dump(2);
}

}  // namespace rsv
