#include <doctest.h>

#include <cmath>
#include <random>

#include "risradar/errors.hpp"
#include "risradar/geometry.hpp"
#include "risradar/numerics.hpp"
#include "risradar/scenario.hpp"

using namespace risradar;

namespace {
PanelFrame xy_frame() {
    return make_panel_frame({0, 0, 0}, {1, 0, 0}, {0, 1, 0});
}
} // namespace

TEST_CASE("cell_center places 1-based cells at half-pitch offsets") {
    const PanelFrame f = xy_frame();
    const Vec3 c = cell_center(f, 1, 1, 0.2, 0.2);
    CHECK(c.x == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(c.y == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(c.z == doctest::Approx(0.0));

    const Vec3 far = cell_center(f, 10, 10, 0.107142, 0.107142);
    CHECK(far.x == doctest::Approx(1.017849).epsilon(1e-9));
    CHECK(far.y == doctest::Approx(1.017849).epsilon(1e-9));
}

TEST_CASE("cell_center follows a rotated frame") {
    // 90 degrees about z: u -> +y, v -> -x.
    const PanelFrame f = make_panel_frame({0, 0, 0}, {0, 1, 0}, {-1, 0, 0});
    const Vec3 c = cell_center(f, 1, 1, 0.2, 0.2);
    CHECK(c.x == doctest::Approx(-0.1).epsilon(1e-12));
    CHECK(c.y == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("cell_center rejects bad indices and dimensions") {
    const PanelFrame f = xy_frame();
    CHECK_THROWS_AS(cell_center(f, 0, 1, 0.2, 0.2), std::invalid_argument);
    CHECK_THROWS_AS(cell_center(f, 1, 1, 0.0, 0.2), std::invalid_argument);
}

TEST_CASE("make_panel_frame checks orthogonality and derives the normal") {
    CHECK_THROWS_AS(make_panel_frame({0, 0, 0}, {1, 0, 0}, {1, 1e-6, 0}), GeometryError);
    const PanelFrame f = make_panel_frame({0, 0, 0}, {2, 0, 0}, {0, 3, 0});
    CHECK(f.normal.z == doctest::Approx(1.0));
    CHECK(f.u_axis.norm() == doctest::Approx(1.0));
}

TEST_CASE("element_geometry on-normal and 3-4-5 cases") {
    const PanelFrame f = xy_frame();
    const ElementGeometry on_axis = element_geometry({0, 0, 0}, {0, 0, 5}, f);
    CHECK(on_axis.distance == doctest::Approx(5.0));
    CHECK(on_axis.theta == 0.0); // exact for an axis-aligned normal

    const ElementGeometry oblique = element_geometry({0, 0, 0}, {3, 0, 4}, f);
    CHECK(oblique.distance == doctest::Approx(5.0));
    CHECK(oblique.theta == doctest::Approx(0.6435011087932844).epsilon(1e-12));
    CHECK(oblique.phi == doctest::Approx(0.0));
}

TEST_CASE("element_geometry rejects coincident points") {
    const PanelFrame f = xy_frame();
    CHECK_THROWS_AS(element_geometry({1, 2, 0}, {1, 2, 0}, f), GeometryError);
}

TEST_CASE("mirror-symmetric cells are equidistant from an on-axis point") {
    const PanelFrame f = xy_frame();
    const Vec3 point{0, 0, 7.5};
    const ElementGeometry a = element_geometry({0.3, -0.2, 0}, point, f);
    const ElementGeometry b = element_geometry({-0.3, 0.2, 0}, point, f);
    CHECK(a.distance == doctest::Approx(b.distance).epsilon(1e-15));
}

TEST_CASE("element distance dominates the perpendicular plane distance") {
    const PanelFrame f = make_panel_frame({1, -2, 0.5}, {0, 1, 0}, {0, 0, 1});
    std::mt19937_64 rng(20240811);
    std::uniform_real_distribution<double> u(-30.0, 30.0);
    for (int i = 0; i < 300; ++i) {
        const Vec3 cell = f.origin + u(rng) * f.u_axis + u(rng) * f.v_axis;
        const Vec3 point{u(rng), u(rng), u(rng)};
        const double perp = std::abs((point - f.origin).dot(f.normal));
        if ((point - cell).norm() < 1e-9) {
            continue;
        }
        const ElementGeometry eg = element_geometry(cell, point, f);
        CHECK(eg.distance >= perp - 1e-12);
        CHECK(eg.theta >= 0.0);
        CHECK(eg.theta <= kPi);
        CHECK(eg.phi > -kPi);
        CHECK(eg.phi <= kPi);
    }
}

TEST_CASE("far_field_distance matches the published panel table") {
    const double lambda = kDefaultWavelengthM;
    const double spacing = lambda / 2.0;
    const int sides[] = {10, 19, 28, 37, 46};
    const double expected[] = {10.7142, 38.6631, 83.9664, 146.6199, 226.6236};
    for (int i = 0; i < 5; ++i) {
        CHECK(std::abs(far_field_distance(sides[i], spacing, lambda) - expected[i]) <= 0.01);
    }
    // Single-cell aperture degenerates to half a wavelength.
    CHECK(far_field_distance(1, spacing, lambda) == doctest::Approx(lambda / 2.0).epsilon(1e-12));
}

TEST_CASE("far_field_distance grows strictly and quadruples on doubling") {
    const double lambda = kDefaultWavelengthM;
    const double spacing = lambda / 2.0;
    double prev = 0.0;
    for (int n = 1; n <= 64; ++n) {
        const double ff = far_field_distance(n, spacing, lambda);
        CHECK(ff > prev);
        prev = ff;
    }
    for (int n : {3, 10, 23}) {
        const double once = far_field_distance(n, spacing, lambda);
        const double twice = far_field_distance(2 * n, spacing, lambda);
        CHECK(twice == doctest::Approx(4.0 * once).epsilon(1e-15));
    }
}

TEST_CASE("center_geometry reports the preset distances") {
    DualPresetParams p;
    p.cells_per_side = 8;
    p.r1_m = 250.0;
    p.r_ris_m = 50.0;
    p.r2_m = 120.0;
    const Scenario s = make_aligned_dual_scenario(p);
    const CenterGeometry cg = center_geometry(s);
    CHECK(cg.r1 == doctest::Approx(250.0).epsilon(1e-12));
    CHECK(cg.r_ris == doctest::Approx(50.0).epsilon(1e-12));
    CHECK(cg.r2 == doctest::Approx(120.0).epsilon(1e-12));
    CHECK(cg.theta_r == doctest::Approx(0.0));
    // Alignment condition of the preset: equal polar angles, opposite azimuth.
    CHECK(cg.theta_t == doctest::Approx(cg.theta_ris).epsilon(1e-9));
}

TEST_CASE("center_geometry alignment holds for bent presets") {
    DualPresetParams p;
    p.cells_per_side = 4;
    p.bend_ris1_rad = 30.0 * kPi / 180.0;
    p.bend_ris2_rad = 25.0 * kPi / 180.0;
    const Scenario s = make_aligned_dual_scenario(p);
    const CenterGeometry cg = center_geometry(s);
    CHECK(cg.theta_ris == doctest::Approx(p.bend_ris2_rad).epsilon(1e-9));
    CHECK(cg.theta_t == doctest::Approx(p.bend_ris2_rad).epsilon(1e-9));
    const double azimuth_gap = std::abs(mod_two_pi(cg.phi_t - cg.phi_ris));
    CHECK(azimuth_gap == doctest::Approx(kPi).epsilon(1e-9));
    CHECK(cg.theta_ris_at_1 == doctest::Approx(p.bend_ris1_rad).epsilon(1e-9));
}

TEST_CASE("swapping panel roles relabels the center geometry symmetrically") {
    DualPresetParams p;
    p.cells_per_side = 4;
    p.r1_m = 80.0;
    p.r_ris_m = 40.0;
    p.r2_m = 60.0;
    Scenario s = make_aligned_dual_scenario(p);
    const CenterGeometry cg = center_geometry(s);

    Scenario swapped = s;
    std::swap(swapped.panels[0], swapped.panels[1]);
    std::swap(swapped.radar.position, swapped.target.position);
    const CenterGeometry cg2 = center_geometry(swapped);
    CHECK(cg2.r_ris == doctest::Approx(cg.r_ris).epsilon(1e-12));
    CHECK(cg2.r1 == doctest::Approx((s.target.position - s.panels[1].center()).norm()).epsilon(1e-12));
    CHECK(cg2.r2 == doctest::Approx(cg.r1).epsilon(1e-12));
}

TEST_CASE("center_geometry rejects coincident nodes") {
    DualPresetParams p;
    p.cells_per_side = 4;
    Scenario s = make_aligned_dual_scenario(p);
    s.target.position = s.panels[1].center();
    CHECK_THROWS_AS(center_geometry(s), GeometryError);
}
