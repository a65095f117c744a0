#include <doctest.h>

#include <string>

#include "risradar/config.hpp"
#include "risradar/errors.hpp"
#include "risradar/linkbudget.hpp"
#include "risradar/numerics.hpp"

using namespace risradar;

namespace {

std::string valid_doc(const std::string& panels_json) {
    return R"({
  "wavelength_m": 0.2142,
  "radar": {
    "position": [0.0, 0.0, 250.0],
    "pt_dbw": 30.0,
    "gt_db": 30.0,
    "pattern": {"kind": "cosine_exponent", "hpbw_deg": 45.0}
  },
  "panels": )" + panels_json + R"(,
  "target": {"position": [0.0, 0.0, -450.0], "rcs_m2": 0.02},
  "noise": {"t0_k": 290.0, "b_hz": 1.0e6, "l_db": 0.0, "pulses": 1}
})";
}

std::string panel_json(const std::string& overrides = "") {
    return R"({
    "frame": {"origin": [-0.5355, -0.5355, 0.0], "u_axis": [1, 0, 0], "v_axis": [0, 1, 0]},
    "rows": 10, "cols": 10,
    "spacing_fraction_of_lambda": 0.5,
    "gain_db": 4.0, "eta": 0.8,
    "phasing_mode": "round_trip_conjugate")" +
           overrides + "}";
}

std::string second_panel_json() {
    return R"({
    "frame": {"origin": [0.5355, -0.5355, 50.0], "u_axis": [-1, 0, 0], "v_axis": [0, 1, 0]},
    "rows": 10, "cols": 10,
    "spacing_fraction_of_lambda": 0.5,
    "gain_db": 4.0, "eta": 0.8,
    "phasing_mode": "round_trip_conjugate"})";
}

} // namespace

TEST_CASE("a valid dual document loads with linear units") {
    const std::string doc = valid_doc("[" + panel_json() + "," + second_panel_json() + "]");
    const LoadedScenario loaded = load_scenario_text(doc, "test");
    const Scenario& s = loaded.scenario;
    CHECK(s.panels.size() == 2);
    CHECK(s.radar.pt_w == doctest::Approx(1000.0).epsilon(1e-12));
    CHECK(s.radar.pattern.gain == doctest::Approx(1000.0).epsilon(1e-12));
    CHECK(s.panels[0].pattern.gain == doctest::Approx(db_to_linear(4.0)).epsilon(1e-12));
    CHECK(s.panels[0].cell_dx_m == doctest::Approx(0.1071).epsilon(1e-12));
    CHECK(s.noise.loss_linear == doctest::Approx(1.0));
    CHECK(loaded.warnings.empty());

    // Loaded geometry evaluates end to end.
    const CascadeResult res = dual_ris_received_power(apply_phasing(s));
    CHECK(res.pr_w > 0.0);
}

TEST_CASE("the default boresight points at panel 1's center") {
    const std::string doc = valid_doc("[" + panel_json() + "," + second_panel_json() + "]");
    const Scenario s = load_scenario_text(doc, "test").scenario;
    CHECK(s.radar.boresight.z == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("three panels are rejected with the field named") {
    const std::string doc =
        valid_doc("[" + panel_json() + "," + second_panel_json() + "," + panel_json() + "]");
    try {
        load_scenario_text(doc, "test");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("panels") != std::string::npos);
    }
}

TEST_CASE("schema violations name the offending field") {
    CHECK_THROWS_WITH_AS(
        load_scenario_text(valid_doc("[" + panel_json(", \"eta\": 1.5") + "]"), "test"),
        doctest::Contains("eta"), ConfigError);

    CHECK_THROWS_WITH_AS(
        load_scenario_text(valid_doc("[" + panel_json(", \"mystery\": 1") + "]"), "test"),
        doctest::Contains("mystery"), ConfigError);

    std::string doc = valid_doc("[" + panel_json() + "]");
    const std::string needle = "\"l_db\": 0.0";
    doc.replace(doc.find(needle), needle.size(), "\"l_db\": -3.0");
    CHECK_THROWS_WITH_AS(load_scenario_text(doc, "test"), doctest::Contains("l_db"), ConfigError);
}

TEST_CASE("explicit phasing cannot come from a document") {
    std::string panel = panel_json();
    panel.replace(panel.find("round_trip_conjugate"), 20, "explicit");
    CHECK_THROWS_WITH_AS(load_scenario_text(valid_doc("[" + panel + "]"), "test"),
                         doctest::Contains("phasing_mode"), ConfigError);
}

TEST_CASE("parse errors are line anchored") {
    const std::string broken = "{\n  \"wavelength_m\": 0.2142,\n  \"radar\": [,\n}";
    try {
        load_scenario_text(broken, "broken.json");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("broken.json") != std::string::npos);
        CHECK(msg.find("line 3") != std::string::npos);
    }
}

TEST_CASE("eta outside the unit interval and bad vectors are rejected") {
    std::string doc = valid_doc("[" + panel_json() + "]");
    doc.replace(doc.find("[0.0, 0.0, 250.0]"), 17, "[0.0, 0.0]");
    CHECK_THROWS_WITH_AS(load_scenario_text(doc, "test"), doctest::Contains("radar.position"),
                         ConfigError);
}

TEST_CASE("a cell pitch outside the customary band only warns") {
    std::string panel = panel_json();
    panel.replace(panel.find("0.5,"), 4, "0.8,");
    const LoadedScenario loaded = load_scenario_text(valid_doc("[" + panel + "]"), "test");
    REQUIRE(loaded.warnings.size() == 1);
    CHECK(loaded.warnings[0].find("pitch") != std::string::npos);
}

TEST_CASE("missing file raises ConfigError") {
    CHECK_THROWS_AS(load_scenario_file("/nonexistent/nope.json"), ConfigError);
}
