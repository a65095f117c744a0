#include "risradar/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "risradar/errors.hpp"

namespace risradar {

namespace {

using nlohmann::json;

/// line:column of a byte offset, for parse diagnostics.
std::string locate(const std::string& text, size_t byte) {
    size_t line = 1;
    size_t col = 1;
    const size_t end = std::min(byte, text.size());
    for (size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

[[noreturn]] void fail(const std::string& name, const std::string& message) {
    throw ConfigError(name + ": " + message);
}

const json& member(const std::string& name, const json& obj, const std::string& path,
                   const char* key) {
    if (!obj.is_object()) {
        fail(name, path + ": expected an object");
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
        fail(name, path + "." + key + ": missing required field");
    }
    return *it;
}

double number(const std::string& name, const json& v, const std::string& path) {
    if (!v.is_number()) {
        fail(name, path + ": expected a number");
    }
    const double x = v.get<double>();
    if (!std::isfinite(x)) {
        fail(name, path + ": must be finite");
    }
    return x;
}

int integer(const std::string& name, const json& v, const std::string& path) {
    if (!v.is_number_integer()) {
        fail(name, path + ": expected an integer");
    }
    return v.get<int>();
}

Vec3 vec3(const std::string& name, const json& v, const std::string& path) {
    if (!v.is_array() || v.size() != 3) {
        fail(name, path + ": expected [x, y, z]");
    }
    return Vec3{number(name, v[0], path + "[0]"), number(name, v[1], path + "[1]"),
                number(name, v[2], path + "[2]")};
}

void reject_unknown_keys(const std::string& name, const json& obj, const std::string& path,
                         const std::set<std::string>& allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!allowed.count(it.key())) {
            fail(name, path + "." + it.key() + ": unknown field");
        }
    }
}

PatternModel pattern_model(const std::string& name, const json& v, const std::string& path,
                           double gain_db) {
    const double gain = db_to_linear(gain_db);
    if (v.is_null()) {
        return PatternModel::cosine_from_hpbw(kPi / 4.0, gain);
    }
    reject_unknown_keys(name, v, path, {"kind", "hpbw_deg", "exponent_q"});
    const json& kind = member(name, v, path, "kind");
    if (!kind.is_string()) {
        fail(name, path + ".kind: expected a string");
    }
    const std::string k = kind.get<std::string>();
    if (k == "isotropic") {
        return PatternModel::isotropic(gain);
    }
    if (k != "cosine_exponent") {
        fail(name, path + ".kind: expected 'isotropic' or 'cosine_exponent'");
    }
    const bool has_hpbw = v.contains("hpbw_deg");
    const bool has_q = v.contains("exponent_q");
    if (has_hpbw == has_q) {
        fail(name, path + ": cosine_exponent needs exactly one of hpbw_deg or exponent_q");
    }
    if (has_hpbw) {
        const double hpbw = number(name, v["hpbw_deg"], path + ".hpbw_deg");
        if (hpbw <= 0.0 || hpbw >= 180.0) {
            fail(name, path + ".hpbw_deg: must lie in (0, 180)");
        }
        return PatternModel::cosine_from_hpbw(hpbw * kPi / 180.0, gain);
    }
    const double q = number(name, v["exponent_q"], path + ".exponent_q");
    if (q < 0.0) {
        fail(name, path + ".exponent_q: must be >= 0");
    }
    return PatternModel::cosine(q, gain);
}

} // namespace

LoadedScenario load_scenario_text(const std::string& text, const std::string& name) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(name, "parse error at " + locate(text, e.byte > 0 ? e.byte - 1 : 0) + ": " + e.what());
    }
    if (!doc.is_object()) {
        fail(name, "top level: expected an object");
    }
    reject_unknown_keys(name, doc, "document",
                        {"wavelength_m", "radar", "panels", "target", "noise"});

    LoadedScenario loaded;
    Scenario& s = loaded.scenario;

    const double lambda = number(name, member(name, doc, "document", "wavelength_m"), "wavelength_m");
    if (lambda <= 0.0) {
        fail(name, "wavelength_m: must be positive");
    }
    s.wavelength_m = lambda;

    // --- radar ---
    const json& radar = member(name, doc, "document", "radar");
    reject_unknown_keys(name, radar, "radar", {"position", "pt_dbw", "gt_db", "pattern", "boresight"});
    s.radar.position = vec3(name, member(name, radar, "radar", "position"), "radar.position");
    s.radar.pt_w = db_to_linear(number(name, member(name, radar, "radar", "pt_dbw"), "radar.pt_dbw"));
    const double gt_db = number(name, member(name, radar, "radar", "gt_db"), "radar.gt_db");
    if (gt_db < 0.0) {
        fail(name, "radar.gt_db: must be >= 0");
    }
    s.radar.pattern = pattern_model(name, radar.contains("pattern") ? radar["pattern"] : json(),
                                    "radar.pattern", gt_db);

    // --- panels ---
    const json& panels = member(name, doc, "document", "panels");
    if (!panels.is_array() || panels.empty() || panels.size() > 2) {
        fail(name, "panels: expected an array of 1 or 2 panel objects, got " +
                       std::to_string(panels.is_array() ? panels.size() : 0));
    }
    for (size_t i = 0; i < panels.size(); ++i) {
        const std::string path = "panels[" + std::to_string(i) + "]";
        const json& p = panels[i];
        reject_unknown_keys(name, p, path,
                            {"frame", "rows", "cols", "spacing_fraction_of_lambda", "gain_db", "eta",
                             "phasing_mode", "pattern"});
        const json& frame_json = member(name, p, path, "frame");
        reject_unknown_keys(name, frame_json, path + ".frame", {"origin", "u_axis", "v_axis"});
        PanelFrame frame;
        try {
            frame = make_panel_frame(
                vec3(name, member(name, frame_json, path + ".frame", "origin"), path + ".frame.origin"),
                vec3(name, member(name, frame_json, path + ".frame", "u_axis"), path + ".frame.u_axis"),
                vec3(name, member(name, frame_json, path + ".frame", "v_axis"), path + ".frame.v_axis"));
        } catch (const GeometryError& e) {
            fail(name, path + ".frame: " + e.what());
        }
        const int rows = integer(name, member(name, p, path, "rows"), path + ".rows");
        const int cols = integer(name, member(name, p, path, "cols"), path + ".cols");
        if (rows < 1 || cols < 1) {
            fail(name, path + ".rows/cols: must be >= 1");
        }
        const double frac = number(name, member(name, p, path, "spacing_fraction_of_lambda"),
                                   path + ".spacing_fraction_of_lambda");
        if (frac <= 0.0) {
            fail(name, path + ".spacing_fraction_of_lambda: must be positive");
        }
        const double gain_db = number(name, member(name, p, path, "gain_db"), path + ".gain_db");
        if (gain_db < 0.0) {
            fail(name, path + ".gain_db: must be >= 0");
        }
        const double eta = number(name, member(name, p, path, "eta"), path + ".eta");
        if (eta < 0.0 || eta > 1.0) {
            fail(name, path + ".eta: must lie in [0, 1]");
        }
        const json& mode_json = member(name, p, path, "phasing_mode");
        if (!mode_json.is_string()) {
            fail(name, path + ".phasing_mode: expected a string");
        }
        const std::string mode_str = mode_json.get<std::string>();
        PhasingMode mode;
        if (mode_str == "uniform_zero") {
            mode = PhasingMode::uniform_zero;
        } else if (mode_str == "round_trip_conjugate") {
            mode = PhasingMode::round_trip_conjugate;
        } else if (mode_str == "explicit") {
            fail(name, path + ".phasing_mode: explicit phase grids cannot be loaded from a config "
                            "document; supply them through the API");
        } else {
            fail(name, path + ".phasing_mode: expected 'uniform_zero' or 'round_trip_conjugate'");
        }
        const double spacing = frac * lambda;
        const PatternModel pattern =
            pattern_model(name, p.contains("pattern") ? p["pattern"] : json(), path + ".pattern", gain_db);
        s.panels.push_back(make_uniform_panel(frame, rows, cols, spacing, spacing, eta, pattern, mode));
        if (!spacing_within_recommended(s.panels.back(), lambda)) {
            std::ostringstream w;
            w << path << ": cell pitch " << spacing << " m lies outside the customary [lambda/10, lambda/2] band";
            loaded.warnings.push_back(w.str());
        }
    }

    // --- target ---
    const json& target = member(name, doc, "document", "target");
    reject_unknown_keys(name, target, "target", {"position", "rcs_m2"});
    s.target.position = vec3(name, member(name, target, "target", "position"), "target.position");
    s.target.rcs_m2 = number(name, member(name, target, "target", "rcs_m2"), "target.rcs_m2");
    if (s.target.rcs_m2 <= 0.0) {
        fail(name, "target.rcs_m2: must be positive");
    }

    // --- noise ---
    const json& noise = member(name, doc, "document", "noise");
    reject_unknown_keys(name, noise, "noise", {"t0_k", "b_hz", "l_db", "pulses"});
    s.noise.t0_k = number(name, member(name, noise, "noise", "t0_k"), "noise.t0_k");
    s.noise.bandwidth_hz = number(name, member(name, noise, "noise", "b_hz"), "noise.b_hz");
    const double l_db = number(name, member(name, noise, "noise", "l_db"), "noise.l_db");
    if (l_db < 0.0) {
        fail(name, "noise.l_db: must be >= 0");
    }
    s.noise.loss_linear = db_to_linear(l_db);
    s.noise.pulses = integer(name, member(name, noise, "noise", "pulses"), "noise.pulses");
    if (s.noise.t0_k <= 0.0 || s.noise.bandwidth_hz <= 0.0) {
        fail(name, "noise.t0_k and noise.b_hz must be positive");
    }
    if (s.noise.pulses < 1) {
        fail(name, "noise.pulses: must be >= 1");
    }

    // Default the radar boresight onto panel 1's center when unspecified.
    if (radar.contains("boresight")) {
        const Vec3 bs = vec3(name, radar["boresight"], "radar.boresight");
        try {
            s.radar.boresight = normalized(bs);
        } catch (const GeometryError&) {
            fail(name, "radar.boresight: must be a nonzero vector");
        }
    } else {
        try {
            s.radar.boresight = normalized(s.panels[0].center() - s.radar.position);
        } catch (const GeometryError&) {
            fail(name, "radar.position: coincides with panel 1's center");
        }
    }

    return loaded;
}

LoadedScenario load_scenario_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError(path + ": cannot open file");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_scenario_text(buffer.str(), path);
}

} // namespace risradar
