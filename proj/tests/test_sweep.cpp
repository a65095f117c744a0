#include <doctest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "risradar/errors.hpp"
#include "risradar/numerics.hpp"
#include "risradar/sweep.hpp"

using namespace risradar;

namespace {

Scenario base_dual(int n = 10) {
    DualPresetParams p;
    p.cells_per_side = n;
    p.r1_m = 250.0;
    p.r_ris_m = 50.0;
    p.r2_m = 500.0;
    return make_aligned_dual_scenario(p);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) {
        fields.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
        fields.push_back("");
    }
    return fields;
}

} // namespace

TEST_CASE("run_sweep yields one row per value, in order") {
    SweepSpec spec;
    spec.base = base_dual();
    spec.axis = SweepAxis::ris_target_distance;
    spec.values = {100.0, 200.0, 300.0, 400.0, 500.0};
    const auto rows = run_sweep(spec);
    REQUIRE(rows.size() == 5);
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].axis_value == spec.values[i]);
        CHECK(rows[i].error.empty());
    }
}

TEST_CASE("closed-form SNR falls monotonically with target distance") {
    SweepSpec spec;
    spec.base = base_dual();
    spec.axis = SweepAxis::ris_target_distance;
    for (int i = 0; i < 30; ++i) {
        spec.values.push_back(50.0 * (i + 1));
    }
    const auto rows = run_sweep(spec);
    for (size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].snr_dual_db < rows[i - 1].snr_dual_db);
    }
}

TEST_CASE("cells-per-side sweep reproduces the published single-vs-dual deltas") {
    SweepSpec spec;
    spec.base = base_dual();
    spec.axis = SweepAxis::cells_per_side;
    spec.values = {10, 19, 28, 37, 46};
    spec.compare_single_dual = true;
    const auto rows = run_sweep(spec);
    const double expected_delta[] = {-44.62, -22.32, -8.85, 0.84, 8.4};
    REQUIRE(rows.size() == 5);
    for (size_t i = 0; i < rows.size(); ++i) {
        REQUIRE(rows[i].has_single);
        const double delta = rows[i].snr_dual_db - rows[i].snr_single_db;
        CHECK(std::abs(delta - expected_delta[i]) <= 0.05);
    }
}

TEST_CASE("pulse sweep scales SNR linearly and leaves geometry flags alone") {
    SweepSpec spec;
    spec.base = base_dual();
    spec.axis = SweepAxis::pulses;
    spec.values = {1, 40, 80};
    const auto rows = run_sweep(spec);
    REQUIRE(rows.size() == 3);
    CHECK(rows[1].snr_dual_db - rows[0].snr_dual_db == doctest::Approx(16.0206).epsilon(1e-4));
    CHECK(rows[2].snr_dual_db - rows[1].snr_dual_db == doctest::Approx(3.0103).epsilon(1e-4));
    CHECK(rows[0].far_field_ok == rows[2].far_field_ok);
}

TEST_CASE("far-field flag flips exactly once along an increasing distance axis") {
    SweepSpec spec;
    spec.base = base_dual(10); // panel far field at 10.71 m
    spec.axis = SweepAxis::ris_target_distance;
    for (int i = 1; i <= 40; ++i) {
        spec.values.push_back(0.5 * i + 1.0);
    }
    const auto rows = run_sweep(spec);
    int transitions = 0;
    for (size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].far_field_ok != rows[i - 1].far_field_ok) {
            ++transitions;
            CHECK(rows[i].far_field_ok); // only false -> true
        }
    }
    CHECK(transitions == 1);
}

TEST_CASE("per-point geometry failures are recorded in-row and do not abort") {
    SweepSpec spec;
    spec.base = base_dual();
    spec.base.target.position = spec.base.panels[1].center(); // degenerate base
    spec.axis = SweepAxis::pulses;                            // axis cannot repair it
    spec.values = {1, 2};
    const auto rows = run_sweep(spec);
    REQUIRE(rows.size() == 2);
    CHECK_FALSE(rows[0].error.empty());
    CHECK(std::isnan(rows[0].snr_dual_db));

    // A distance axis cannot re-place a target sitting exactly on the
    // panel center either: the ray direction is undefined, so those
    // points also degrade to error rows.
    spec.axis = SweepAxis::ris_target_distance;
    spec.values = {100.0, 200.0};
    const auto rows2 = run_sweep(spec);
    REQUIRE(rows2.size() == 2);
    CHECK_FALSE(rows2[0].error.empty());
    CHECK_FALSE(rows2[1].error.empty());
}

TEST_CASE("sweep spec validation") {
    SweepSpec spec;
    spec.base = base_dual();
    spec.axis = SweepAxis::ris_target_distance;
    spec.values = {};
    CHECK_THROWS_AS(run_sweep(spec), std::invalid_argument);
    spec.values = {10.0, 10.0};
    CHECK_THROWS_AS(run_sweep(spec), std::invalid_argument);
    spec.values = {10.0, 5.0};
    CHECK_THROWS_AS(run_sweep(spec), std::invalid_argument);
}

TEST_CASE("rerunning a spec reproduces identical rows") {
    SweepSpec spec;
    spec.base = base_dual();
    spec.axis = SweepAxis::ris_target_distance;
    spec.values = {60.0, 150.0, 450.0};
    spec.compare_single_dual = true;
    spec.mode = EvalMode::element_sum;
    const auto a = run_sweep(spec);
    const auto b = run_sweep(spec);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].error.empty());
        CHECK(a[i].snr_dual_db == b[i].snr_dual_db);
        CHECK(a[i].snr_single_db == b[i].snr_single_db);
        CHECK(a[i].pr_dual_w == b[i].pr_dual_w);
    }
    CHECK(emit_csv(a) == emit_csv(b));
}

TEST_CASE("table2_report carries all five configurations") {
    const auto rows =
        table2_report(kDefaultWavelengthM, kDefaultWavelengthM / 2.0, db_to_linear(4.0), 0.8, 50.0);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].approx_side_m == 1);
    CHECK(rows[4].approx_side_m == 5);
    CHECK(std::abs(rows[0].far_field_m - 10.7142) <= 0.01);
    CHECK(std::abs(rows[2].far_field_m - 83.9664) <= 0.01);
    CHECK(std::abs(rows[4].far_field_m - 226.6236) <= 0.01);
    CHECK(std::abs(rows[0].ris_effect_db - -44.62) <= 0.05);
    CHECK(std::abs(rows[2].ris_effect_db - -8.85) <= 0.05);
    CHECK(std::abs(rows[4].ris_effect_db - 8.4) <= 0.05);
}

TEST_CASE("CSV emission: structure, quoting discipline, and determinism") {
    SweepSpec spec;
    spec.base = base_dual();
    spec.axis = SweepAxis::ris_target_distance;
    spec.values = {320.0};
    const auto rows = run_sweep(spec);
    const std::string csv = emit_csv(rows);

    std::istringstream in(csv);
    std::string header, line, extra;
    REQUIRE(std::getline(in, header));
    REQUIRE(std::getline(in, line));
    CHECK_FALSE(std::getline(in, extra));
    CHECK(header == "axis_value,snr_single_db,snr_dual_db,pr_dual_w,path_loss_dual_db,far_field_ok");

    const auto fields = split_csv_line(line);
    REQUIRE(fields.size() == 6);
    CHECK(fields[0] == "320");
    CHECK(fields[1] == ""); // no single series requested
    CHECK(std::stod(fields[2]) == doctest::Approx(rows[0].snr_dual_db).epsilon(1e-5));
    CHECK(std::stod(fields[3]) == doctest::Approx(rows[0].pr_dual_w).epsilon(1e-5));
    CHECK(std::stod(fields[4]) == doctest::Approx(rows[0].path_loss_dual_db).epsilon(1e-5));
    CHECK(fields[5] == "true");

    CHECK(emit_csv(rows) == csv);
}

TEST_CASE("CSV leaves error-row numerics empty") {
    SweepSpec spec;
    spec.base = base_dual();
    spec.base.target.position = spec.base.panels[1].center();
    spec.axis = SweepAxis::pulses;
    spec.values = {1, 2};
    const auto rows = run_sweep(spec);
    REQUIRE_FALSE(rows[0].error.empty());
    std::istringstream in(emit_csv(rows));
    std::string line;
    std::getline(in, line); // header
    std::getline(in, line);
    const auto fields = split_csv_line(line);
    REQUIRE(fields.size() == 6);
    CHECK(fields[0] == "1");
    CHECK(fields[2] == "");
    CHECK(fields[3] == "");
    CHECK(fields[4] == "");
    CHECK(fields[5] == "false");
}

TEST_CASE("CSV round trip holds at formatting precision across a full sweep") {
    SweepSpec spec;
    spec.base = base_dual();
    spec.axis = SweepAxis::ris_target_distance;
    spec.values = {40.0, 90.0, 250.0, 700.0};
    spec.compare_single_dual = true;
    const auto rows = run_sweep(spec);
    std::istringstream in(emit_csv(rows));
    std::string line;
    std::getline(in, line); // header
    for (const SweepRow& row : rows) {
        REQUIRE(std::getline(in, line));
        const auto fields = split_csv_line(line);
        REQUIRE(fields.size() == 6);
        CHECK(std::stod(fields[0]) == doctest::Approx(row.axis_value).epsilon(1e-5));
        REQUIRE(std::isfinite(row.snr_single_db));
        CHECK(std::stod(fields[1]) == doctest::Approx(row.snr_single_db).epsilon(1e-5));
        CHECK(std::stod(fields[2]) == doctest::Approx(row.snr_dual_db).epsilon(1e-5));
    }
}

TEST_CASE("SVG emission: two series, markers, and determinism") {
    SweepSpec spec;
    spec.base = base_dual();
    spec.axis = SweepAxis::ris_target_distance;
    spec.values = {8.0, 100.0, 500.0}; // straddles the 10.71 m far-field marker
    spec.compare_single_dual = true;
    const auto rows = run_sweep(spec);

    SvgStyle style;
    style.log_x = true;
    style.vlines_x = {panel_far_field_distance(spec.base.panels[0], spec.base.wavelength_m)};
    const std::string svg = emit_svg_plot(rows, style);

    size_t polylines = 0;
    for (size_t pos = svg.find("<polyline"); pos != std::string::npos;
         pos = svg.find("<polyline", pos + 1)) {
        ++polylines;
    }
    CHECK(polylines == 2);
    CHECK(svg.find("stroke-dasharray") != std::string::npos);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(emit_svg_plot(rows, style) == svg);
}

TEST_CASE("SVG with a single series draws one polyline") {
    SweepSpec spec;
    spec.base = base_dual();
    spec.axis = SweepAxis::ris_target_distance;
    spec.values = {20.0, 100.0, 500.0};
    const auto rows = run_sweep(spec);
    const std::string svg = emit_svg_plot(rows, SvgStyle{});
    size_t polylines = 0;
    for (size_t pos = svg.find("<polyline"); pos != std::string::npos;
         pos = svg.find("<polyline", pos + 1)) {
        ++polylines;
    }
    CHECK(polylines == 1);
}

TEST_CASE("SVG needs at least two rows") {
    SweepSpec spec;
    spec.base = base_dual();
    spec.axis = SweepAxis::ris_target_distance;
    spec.values = {100.0};
    const auto rows = run_sweep(spec);
    CHECK_THROWS_AS(emit_svg_plot(rows, SvgStyle{}), Error);
}
