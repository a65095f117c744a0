#include "risradar/scenario.hpp"

#include <cmath>
#include <stdexcept>

#include "risradar/errors.hpp"

namespace risradar {

namespace {

void require_panels(const Scenario& s, size_t count, const char* what) {
    if (s.panels.size() != count) {
        throw std::invalid_argument(std::string(what) + " expects a scenario with " +
                                    std::to_string(count) + " panel(s), got " +
                                    std::to_string(s.panels.size()));
    }
}

std::vector<double> distance_grid(const RisPanel& panel, const Vec3& to_point) {
    std::vector<double> grid(static_cast<size_t>(panel.cell_count()));
    for (int j = 1; j <= panel.rows; ++j) {
        for (int k = 1; k <= panel.cols; ++k) {
            grid[panel.cell_index(j, k)] = (to_point - panel.cell_center(j, k)).norm();
        }
    }
    return grid;
}

PatternModel preset_ris_pattern(bool isotropic, double gain_db) {
    const double gain = db_to_linear(gain_db);
    if (isotropic) {
        return PatternModel::isotropic(gain);
    }
    return PatternModel::cosine_from_hpbw(kPi / 4.0, gain); // 45 deg HPBW
}

} // namespace

CenterGeometry center_geometry(const Scenario& scenario) {
    require_panels(scenario, 2, "center_geometry");
    const RisPanel& p1 = scenario.panels[0];
    const RisPanel& p2 = scenario.panels[1];
    const Vec3 c1 = p1.center();
    const Vec3 c2 = p2.center();

    CenterGeometry cg;
    const ElementGeometry to_radar = element_geometry(c1, scenario.radar.position, p1.frame);
    const ElementGeometry to_target = element_geometry(c2, scenario.target.position, p2.frame);
    const ElementGeometry to_p1 = element_geometry(c2, c1, p2.frame);
    const ElementGeometry to_p2 = element_geometry(c1, c2, p1.frame);

    cg.r1 = to_radar.distance;
    cg.theta_r = to_radar.theta;
    cg.phi_r = to_radar.phi;
    cg.r2 = to_target.distance;
    cg.theta_t = to_target.theta;
    cg.phi_t = to_target.phi;
    cg.r_ris = to_p1.distance;
    cg.theta_ris = to_p1.theta;
    cg.phi_ris = to_p1.phi;
    cg.theta_ris_at_1 = to_p2.theta;
    cg.phi_ris_at_1 = to_p2.phi;
    return cg;
}

SingleCenterGeometry single_center_geometry(const Scenario& scenario) {
    if (scenario.panels.empty()) {
        throw std::invalid_argument("single_center_geometry expects at least one panel");
    }
    const RisPanel& p1 = scenario.panels[0];
    const Vec3 c1 = p1.center();
    const ElementGeometry to_radar = element_geometry(c1, scenario.radar.position, p1.frame);
    const ElementGeometry to_target = element_geometry(c1, scenario.target.position, p1.frame);
    return SingleCenterGeometry{to_radar.distance, to_target.distance, to_radar.theta,
                                to_radar.phi,      to_target.theta,    to_target.phi};
}

double panel_far_field_distance(const RisPanel& panel, double wavelength_m) {
    const double side_u = panel.rows * panel.cell_dx_m;
    const double side_v = panel.cols * panel.cell_dy_m;
    const double side = std::max(side_u, side_v);
    return 2.0 * side * side / wavelength_m;
}

Scenario apply_phasing(const Scenario& scenario) {
    if (scenario.panels.empty() || scenario.panels.size() > 2) {
        throw std::invalid_argument("apply_phasing expects 1 or 2 panels");
    }
    Scenario out = scenario;
    for (size_t i = 0; i < out.panels.size(); ++i) {
        RisPanel& panel = out.panels[i];
        switch (panel.phasing) {
        case PhasingMode::uniform_zero: {
            std::fill(panel.phase_tx.begin(), panel.phase_tx.end(), 0.0);
            std::fill(panel.phase_rx.begin(), panel.phase_rx.end(), 0.0);
            break;
        }
        case PhasingMode::round_trip_conjugate: {
            // Inbound leg: the external endpoint this panel serves.
            // Outbound leg: the other panel's center, or the target when
            // the panel relays the radar signal directly.
            const Vec3 inbound = i == 0 ? scenario.radar.position : scenario.target.position;
            const Vec3 outbound = scenario.panels.size() == 2
                                      ? scenario.panels[1 - i].center()
                                      : scenario.target.position;
            panel = synthesize_conjugate_phases(panel, distance_grid(panel, inbound),
                                                distance_grid(panel, outbound), out.wavelength_m);
            break;
        }
        case PhasingMode::explicit_grids:
            break;
        }
    }
    return out;
}

Scenario make_aligned_dual_scenario(const DualPresetParams& p) {
    if (p.cells_per_side < 1) {
        throw std::invalid_argument("cells_per_side must be >= 1");
    }
    const double spacing = p.spacing_fraction * p.wavelength_m;
    const int n = p.cells_per_side;
    const double half_side = n * spacing / 2.0;

    // Panel 1 in the xy-plane, center at the world origin, normal +z.
    const PanelFrame f1 = make_panel_frame({-half_side, -half_side, 0.0}, {1, 0, 0}, {0, 1, 0});

    const double a = p.bend_ris1_rad;
    const Vec3 dir_12{std::sin(a), 0.0, std::cos(a)};
    const Vec3 c2 = p.r_ris_m * dir_12;

    // Panel 2's normal (polar angle psi in the xz-plane) makes the angle
    // bend_ris2 with the direction back to panel 1; the target goes on the
    // mirrored side at the same angle.
    const double psi = a + kPi - p.bend_ris2_rad;
    const Vec3 u2{std::cos(psi), 0.0, -std::sin(psi)};
    const Vec3 v2{0.0, 1.0, 0.0};
    const PanelFrame f2 = make_panel_frame(c2 - half_side * u2 - half_side * v2, u2, v2);

    const double out_angle = a + kPi - 2.0 * p.bend_ris2_rad;
    const Vec3 dir_target{std::sin(out_angle), 0.0, std::cos(out_angle)};

    Scenario s;
    s.wavelength_m = p.wavelength_m;
    s.radar.position = Vec3{0.0, 0.0, p.r1_m};
    s.radar.pt_w = db_to_linear(p.pt_dbw);
    s.radar.pattern = p.isotropic_patterns
                          ? PatternModel::isotropic(db_to_linear(p.gt_db))
                          : PatternModel::cosine_from_hpbw(kPi / 4.0, db_to_linear(p.gt_db));
    s.radar.boresight = Vec3{0.0, 0.0, -1.0};

    const PatternModel ris_pattern = preset_ris_pattern(p.isotropic_patterns, p.ris_gain_db);
    s.panels.push_back(make_uniform_panel(f1, n, n, spacing, spacing, p.eta, ris_pattern));
    s.panels.push_back(make_uniform_panel(f2, n, n, spacing, spacing, p.eta, ris_pattern));

    s.target.position = c2 + p.r2_m * dir_target;
    s.target.rcs_m2 = p.rcs_m2;
    s.noise = p.noise;
    return s;
}

Scenario make_aligned_single_scenario(const SinglePresetParams& p) {
    if (p.cells_per_side < 1) {
        throw std::invalid_argument("cells_per_side must be >= 1");
    }
    const double spacing = p.spacing_fraction * p.wavelength_m;
    const int n = p.cells_per_side;
    const double half_side = n * spacing / 2.0;
    const PanelFrame f1 = make_panel_frame({-half_side, -half_side, 0.0}, {1, 0, 0}, {0, 1, 0});

    Scenario s;
    s.wavelength_m = p.wavelength_m;
    s.radar.position = Vec3{0.0, 0.0, p.r1_m};
    s.radar.pt_w = db_to_linear(p.pt_dbw);
    s.radar.pattern = p.isotropic_patterns
                          ? PatternModel::isotropic(db_to_linear(p.gt_db))
                          : PatternModel::cosine_from_hpbw(kPi / 4.0, db_to_linear(p.gt_db));
    s.radar.boresight = Vec3{0.0, 0.0, -1.0};
    s.panels.push_back(make_uniform_panel(f1, n, n, spacing, spacing, p.eta,
                                          preset_ris_pattern(p.isotropic_patterns, p.ris_gain_db)));
    // Target on the panel normal, opposite side from the radar footprint
    // being irrelevant here: both legs sit at boresight.
    s.target.position = Vec3{0.0, 0.0, p.r2_m};
    s.target.rcs_m2 = p.rcs_m2;
    s.noise = p.noise;
    return s;
}

} // namespace risradar
