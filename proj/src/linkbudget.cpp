#include "risradar/linkbudget.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "risradar/errors.hpp"

namespace risradar {

namespace {

void require_two_panels(const Scenario& s, const char* what) {
    if (s.panels.size() != 2) {
        throw std::invalid_argument(std::string(what) + " requires a two-panel scenario");
    }
}

void require_one_panel(const Scenario& s, const char* what) {
    if (s.panels.empty()) {
        throw std::invalid_argument(std::string(what) + " requires at least one panel");
    }
}

/// F_rad toward a world point, measured off the radar boresight.
double radar_pattern_toward(const RadarNode& radar, const Vec3& point) {
    const Vec3 dir = point - radar.position;
    const double dist = dir.norm();
    if (dist <= 0.0) {
        throw GeometryError("radar coincides with an illuminated point");
    }
    const Vec3 bs = normalized(radar.boresight);
    const double cos_theta = std::clamp(dir.dot(bs) / dist, -1.0, 1.0);
    return evaluate(radar.pattern, std::acos(cos_theta), 0.0);
}

double mean_eta(const RisPanel& panel) {
    const double total = std::accumulate(panel.eta.begin(), panel.eta.end(), 0.0);
    return total / static_cast<double>(panel.cell_count());
}

double pow4(double x) {
    const double x2 = x * x;
    return x2 * x2;
}

CascadeResult assemble_result(const Scenario& scenario, double pr_w, double sum1_mag, double sum2_mag) {
    CascadeResult res;
    res.pr_w = pr_w;
    res.sum1_mag = sum1_mag;
    res.sum2_mag = sum2_mag;
    const SnrValue s = snr(pr_w, scenario.noise);
    res.snr_linear = s.linear;
    res.snr_db = s.db;
    // A silent transmitter degenerates to the same sentinel as total
    // cancellation rather than failing the whole evaluation.
    res.path_loss_db = scenario.radar.pt_w > 0.0 ? path_loss_db(scenario.radar.pt_w, pr_w)
                                                 : std::numeric_limits<double>::infinity();
    return res;
}

} // namespace

std::complex<double> w_sum_ris1(const Scenario& scenario) {
    require_two_panels(scenario, "w_sum_ris1");
    const RisPanel& panel = scenario.panels[0];
    const Vec3 other_center = scenario.panels[1].center();
    const double lambda = scenario.wavelength_m;

    CompensatedComplexSum sum;
    for (int j = 1; j <= panel.rows; ++j) {
        for (int k = 1; k <= panel.cols; ++k) {
            const int idx = panel.cell_index(j, k);
            const Vec3 cell = panel.cell_center(j, k);
            const ElementGeometry to_radar = element_geometry(cell, scenario.radar.position, panel.frame);
            const ElementGeometry to_other = element_geometry(cell, other_center, panel.frame);
            const double f = radar_pattern_toward(scenario.radar, cell) *
                             evaluate(panel.pattern, to_radar.theta, to_radar.phi) *
                             evaluate(panel.pattern, to_other.theta, to_other.phi);
            const double mag =
                std::sqrt(f) * panel.eta[idx] / (to_radar.distance * std::sqrt(to_other.distance));
            const double arg = kFourPi * to_radar.distance / lambda - panel.phase_tx[idx] +
                               kTwoPi * to_other.distance / lambda - panel.phase_rx[idx];
            sum.add(std::polar(mag, -arg));
        }
    }
    return sum.value();
}

std::complex<double> w_sum_ris2(const Scenario& scenario) {
    require_two_panels(scenario, "w_sum_ris2");
    const RisPanel& panel = scenario.panels[1];
    const Vec3 other_center = scenario.panels[0].center();
    const double lambda = scenario.wavelength_m;

    CompensatedComplexSum sum;
    for (int m = 1; m <= panel.rows; ++m) {
        for (int n = 1; n <= panel.cols; ++n) {
            const int idx = panel.cell_index(m, n);
            const Vec3 cell = panel.cell_center(m, n);
            const ElementGeometry to_target = element_geometry(cell, scenario.target.position, panel.frame);
            const ElementGeometry to_other = element_geometry(cell, other_center, panel.frame);
            const double f = evaluate(panel.pattern, to_other.theta, to_other.phi) *
                             evaluate(panel.pattern, to_target.theta, to_target.phi);
            const double mag =
                std::sqrt(f) * panel.eta[idx] / (to_target.distance * std::sqrt(to_other.distance));
            const double arg = kFourPi * to_target.distance / lambda - panel.phase_tx[idx] +
                               kTwoPi * to_other.distance / lambda - panel.phase_rx[idx];
            sum.add(std::polar(mag, -arg));
        }
    }
    return sum.value();
}

std::complex<double> v_sum_single(const Scenario& scenario) {
    require_one_panel(scenario, "v_sum_single");
    const RisPanel& panel = scenario.panels[0];
    const double lambda = scenario.wavelength_m;

    CompensatedComplexSum sum;
    for (int j = 1; j <= panel.rows; ++j) {
        for (int k = 1; k <= panel.cols; ++k) {
            const int idx = panel.cell_index(j, k);
            const Vec3 cell = panel.cell_center(j, k);
            const ElementGeometry to_radar = element_geometry(cell, scenario.radar.position, panel.frame);
            const ElementGeometry to_target = element_geometry(cell, scenario.target.position, panel.frame);
            const double f = radar_pattern_toward(scenario.radar, cell) *
                             evaluate(panel.pattern, to_radar.theta, to_radar.phi) *
                             evaluate(panel.pattern, to_target.theta, to_target.phi);
            // Both legs spread on this single hop, so the target distance
            // enters the amplitude in full (unlike the split inter-panel leg).
            const double mag = std::sqrt(f) * panel.eta[idx] / (to_radar.distance * to_target.distance);
            const double arg = kFourPi * to_radar.distance / lambda - panel.phase_tx[idx] +
                               kTwoPi * to_target.distance / lambda - panel.phase_rx[idx];
            sum.add(std::polar(mag, -arg));
        }
    }
    return sum.value();
}

CascadeResult dual_ris_received_power(const Scenario& scenario) {
    require_two_panels(scenario, "dual_ris_received_power");
    const RisPanel& p1 = scenario.panels[0];
    const RisPanel& p2 = scenario.panels[1];

    const std::complex<double> s1 = w_sum_ris1(scenario);
    const std::complex<double> s2 = w_sum_ris2(scenario);

    const double lambda = scenario.wavelength_m;
    const double gt = scenario.radar.pattern.gain;
    const double g1 = p1.pattern.gain;
    const double g2 = p2.pattern.gain;
    const double area1 = p1.cell_dx_m * p1.cell_dy_m;
    const double area2 = p2.cell_dx_m * p2.cell_dy_m;

    const double prefactor = scenario.radar.pt_w * scenario.target.rcs_m2 * lambda * lambda * gt * gt *
                             g1 * g1 * g2 * g2 * area1 * area1 * area2 * area2 / std::pow(kFourPi, 7);
    const double pr = prefactor * pow4(std::abs(s1)) * pow4(std::abs(s2));
    return assemble_result(scenario, pr, std::abs(s1), std::abs(s2));
}

CascadeResult single_ris_received_power(const Scenario& scenario) {
    require_one_panel(scenario, "single_ris_received_power");
    const RisPanel& p1 = scenario.panels[0];

    const std::complex<double> v = v_sum_single(scenario);

    const double lambda = scenario.wavelength_m;
    const double gt = scenario.radar.pattern.gain;
    const double g1 = p1.pattern.gain;
    const double area1 = p1.cell_dx_m * p1.cell_dy_m;

    const double prefactor = scenario.radar.pt_w * scenario.target.rcs_m2 * lambda * lambda * gt * gt *
                             g1 * g1 * area1 * area1 / std::pow(kFourPi, 5);
    const double pr = prefactor * pow4(std::abs(v));
    return assemble_result(scenario, pr, std::abs(v), 0.0);
}

double closed_form_ris_factor(double gain_linear, double rx_m, double ry_m, int rows, int cols,
                              double eta, double f_combine, double r_m) {
    if (r_m <= 0.0) {
        throw GeometryError("closed_form_ris_factor requires a positive link distance");
    }
    const double area = rx_m * ry_m;
    const double cells = static_cast<double>(rows) * static_cast<double>(cols);
    return gain_linear * gain_linear * area * area * pow4(cells) * pow4(eta) * f_combine * f_combine /
           (kFourPi * kFourPi * pow4(r_m));
}

double closed_form_max_dual(const Scenario& scenario) {
    require_two_panels(scenario, "closed_form_max_dual");
    const RisPanel& p1 = scenario.panels[0];
    const RisPanel& p2 = scenario.panels[1];
    const CenterGeometry cg = center_geometry(scenario);

    const double lambda = scenario.wavelength_m;
    const double gt = scenario.radar.pattern.gain;

    const double f_rad = radar_pattern_toward(scenario.radar, p1.center());
    const double f1 = f_rad * evaluate(p1.pattern, cg.theta_r, cg.phi_r) *
                      evaluate(p1.pattern, cg.theta_ris_at_1, cg.phi_ris_at_1);
    const double f2 = evaluate(p2.pattern, cg.theta_ris, cg.phi_ris) *
                      evaluate(p2.pattern, cg.theta_t, cg.phi_t);

    const double radar_bracket = scenario.radar.pt_w * gt * gt * lambda * lambda *
                                 scenario.target.rcs_m2 / (std::pow(kFourPi, 3) * pow4(cg.r1));
    const double ris1_bracket = closed_form_ris_factor(p1.pattern.gain, p1.cell_dx_m, p1.cell_dy_m,
                                                       p1.rows, p1.cols, mean_eta(p1), f1, cg.r2);
    const double ris2_bracket = closed_form_ris_factor(p2.pattern.gain, p2.cell_dx_m, p2.cell_dy_m,
                                                       p2.rows, p2.cols, mean_eta(p2), f2, cg.r_ris);
    return radar_bracket * ris1_bracket * ris2_bracket;
}

double closed_form_max_single(const Scenario& scenario) {
    require_one_panel(scenario, "closed_form_max_single");
    const RisPanel& p1 = scenario.panels[0];
    const SingleCenterGeometry cg = single_center_geometry(scenario);

    const double lambda = scenario.wavelength_m;
    const double gt = scenario.radar.pattern.gain;

    const double f_rad = radar_pattern_toward(scenario.radar, p1.center());
    const double f1 = f_rad * evaluate(p1.pattern, cg.theta_r, cg.phi_r) *
                      evaluate(p1.pattern, cg.theta_t, cg.phi_t);

    const double radar_bracket = scenario.radar.pt_w * gt * gt * lambda * lambda *
                                 scenario.target.rcs_m2 / (std::pow(kFourPi, 3) * pow4(cg.r1));
    const double ris1_bracket = closed_form_ris_factor(p1.pattern.gain, p1.cell_dx_m, p1.cell_dy_m,
                                                       p1.rows, p1.cols, mean_eta(p1), f1, cg.r2);
    return radar_bracket * ris1_bracket;
}

SnrValue snr(double pr_w, const NoiseModel& noise) {
    if (pr_w < 0.0) {
        throw std::invalid_argument("received power cannot be negative");
    }
    const double noise_power = kBoltzmann * noise.t0_k * noise.bandwidth_hz * noise.loss_linear;
    const double linear = pr_w * static_cast<double>(noise.pulses) / noise_power;
    return SnrValue{linear, linear_to_db(linear)};
}

double path_loss_db(double pt_w, double pr_w) {
    if (pt_w <= 0.0) {
        throw std::invalid_argument("transmit power must be positive");
    }
    if (pr_w <= 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return 10.0 * std::log10(pt_w / pr_w);
}

std::array<double, 7> intermediate_cascade(const Scenario& scenario) {
    require_two_panels(scenario, "intermediate_cascade");
    const RisPanel& p1 = scenario.panels[0];
    const RisPanel& p2 = scenario.panels[1];
    const double lambda = scenario.wavelength_m;
    const Vec3 c1 = p1.center();
    const Vec3 c2 = p2.center();

    // Reference cells: panel centers (1-based indices).
    const int jc = (p1.rows + 1) / 2;
    const int kc = (p1.cols + 1) / 2;
    const int mc = (p2.rows + 1) / 2;
    const int nc = (p2.cols + 1) / 2;
    const Vec3 ref1 = p1.cell_center(jc, kc);
    const Vec3 ref2 = p2.cell_center(mc, nc);

    const double gt = scenario.radar.pattern.gain;
    const double g1 = p1.pattern.gain;
    const double g2 = p2.pattern.gain;
    const double area1 = p1.cell_dx_m * p1.cell_dy_m;
    const double area2 = p2.cell_dx_m * p2.cell_dy_m;
    const double eta1_ref = p1.eta[p1.cell_index(jc, kc)];
    const double eta2_ref = p2.eta[p2.cell_index(mc, nc)];

    // Reference-cell geometry. Panel-to-panel distances follow the same
    // cell-to-opposite-center convention as the coherent sums.
    const ElementGeometry r1_radar = element_geometry(ref1, scenario.radar.position, p1.frame);
    const ElementGeometry r1_to_p2 = element_geometry(ref1, c2, p1.frame);
    const ElementGeometry r2_to_p1 = element_geometry(ref2, c1, p2.frame);
    const ElementGeometry r2_target = element_geometry(ref2, scenario.target.position, p2.frame);

    const double f_rad_ref = radar_pattern_toward(scenario.radar, ref1);
    const double f1_in_ref = evaluate(p1.pattern, r1_radar.theta, r1_radar.phi);
    const double f1_out_ref = evaluate(p1.pattern, r1_to_p2.theta, r1_to_p2.phi);
    const double f2_in_ref = evaluate(p2.pattern, r2_to_p1.theta, r2_to_p1.phi);
    const double f2_out_ref = evaluate(p2.pattern, r2_target.theta, r2_target.phi);

    // Forward coherent sum over panel 1 (one-way phasing, full spreading
    // over both legs) evaluated against panel 2's center.
    CompensatedComplexSum fwd1;
    for (int j = 1; j <= p1.rows; ++j) {
        for (int k = 1; k <= p1.cols; ++k) {
            const int idx = p1.cell_index(j, k);
            const Vec3 cell = p1.cell_center(j, k);
            const ElementGeometry to_radar = element_geometry(cell, scenario.radar.position, p1.frame);
            const ElementGeometry to_p2 = element_geometry(cell, c2, p1.frame);
            const double f = radar_pattern_toward(scenario.radar, cell) *
                             evaluate(p1.pattern, to_radar.theta, to_radar.phi) *
                             evaluate(p1.pattern, to_p2.theta, to_p2.phi);
            const double mag = std::sqrt(f) * p1.eta[idx] / (to_radar.distance * to_p2.distance);
            const double arg = kTwoPi * to_radar.distance / lambda - p1.phase_tx[idx] +
                               kTwoPi * to_p2.distance / lambda;
            fwd1.add(std::polar(mag, -arg));
        }
    }
    const double fwd1_sq = std::norm(fwd1.value());

    // Forward coherent sum over panel 2 toward the target.
    CompensatedComplexSum fwd2;
    // Round-trip sum over panel 2 (target leg twice, half the inter-panel leg).
    CompensatedComplexSum round2;
    for (int m = 1; m <= p2.rows; ++m) {
        for (int n = 1; n <= p2.cols; ++n) {
            const int idx = p2.cell_index(m, n);
            const Vec3 cell = p2.cell_center(m, n);
            const ElementGeometry to_target = element_geometry(cell, scenario.target.position, p2.frame);
            const ElementGeometry to_p1 = element_geometry(cell, c1, p2.frame);
            const double f = evaluate(p2.pattern, to_p1.theta, to_p1.phi) *
                             evaluate(p2.pattern, to_target.theta, to_target.phi);
            const double fwd_mag = std::sqrt(f) * p2.eta[idx] / to_target.distance;
            const double fwd_arg = kTwoPi * to_target.distance / lambda - p2.phase_tx[idx];
            fwd2.add(std::polar(fwd_mag, -fwd_arg));

            const double rt_mag =
                std::sqrt(f) * p2.eta[idx] / (to_target.distance * std::sqrt(to_p1.distance));
            const double rt_arg = kFourPi * to_target.distance / lambda - p2.phase_tx[idx] +
                                  kTwoPi * to_p1.distance / lambda - p2.phase_rx[idx];
            round2.add(std::polar(rt_mag, -rt_arg));
        }
    }
    const double fwd2_sq = std::norm(fwd2.value());
    const double round2_4 = pow4(std::abs(round2.value()));

    std::array<double, 7> stages{};
    const double pt = scenario.radar.pt_w;
    const double sigma = scenario.target.rcs_m2;

    // Radar to one panel-1 cell.
    stages[0] = pt * gt * f_rad_ref * f1_in_ref * area1 / (kFourPi * r1_radar.distance * r1_radar.distance);
    // That cell to one panel-2 cell.
    stages[1] = stages[0] * eta1_ref * eta1_ref * g1 * f1_out_ref * f2_in_ref * area2 /
                (kFourPi * r1_to_p2.distance * r1_to_p2.distance);
    // Full panel-1 array at one panel-2 cell.
    stages[2] = pt * gt * g1 * area1 * area2 * f2_in_ref / (kFourPi * kFourPi) * fwd1_sq;
    // Flux density directed by one panel-2 cell at the target.
    stages[3] = stages[2] * eta2_ref * eta2_ref * g2 * f2_out_ref /
                (kFourPi * r2_target.distance * r2_target.distance);
    // Flux density at the target from the full panel-2 array.
    stages[4] = pt * gt * g1 * g2 * area1 * area2 / std::pow(kFourPi, 3) * fwd1_sq * fwd2_sq;
    // Echo back at one panel-1 cell via one panel-2 cell.
    stages[5] = stages[4] * sigma / (kFourPi * r2_target.distance * r2_target.distance) * f2_out_ref *
                area2 * f1_out_ref * area1 * eta2_ref * eta2_ref * g2 /
                (kFourPi * r2_to_p1.distance * r2_to_p1.distance) * f2_in_ref;
    // Echo at one panel-1 cell from the full panel-2 array.
    stages[6] = pt * gt * sigma * g1 * g2 * g2 * area1 * area1 * area2 * area2 /
                std::pow(kFourPi, 5) * f1_out_ref * fwd1_sq * round2_4;
    return stages;
}

} // namespace risradar
