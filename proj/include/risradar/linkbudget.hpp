#pragma once

#include <array>
#include <complex>

#include "risradar/scenario.hpp"

namespace risradar {

/// Received power with its derived figures plus the coherent-sum
/// magnitudes of both panels for diagnostics. For one-panel evaluations
/// sum2_mag is 0. Total cancellation (pr == 0) reports +inf path loss and
/// -inf SNR instead of failing.
struct CascadeResult {
    double pr_w = 0.0;
    double snr_linear = 0.0;
    double snr_db = 0.0;
    double path_loss_db = 0.0;
    double sum1_mag = 0.0;
    double sum2_mag = 0.0;
};

/// Coherent sum over panel 1: per cell,
///   sqrt(F_rad * F_in * F_out) * eta / (r_radar * sqrt(r_panel2))
///   * exp(-i(4*pi*r_radar/lambda - phi + 2*pi*r_panel2/lambda - phi')),
/// where r_radar is the cell-to-radar distance and r_panel2 the distance
/// from the cell to panel 2's center. Accumulated row-major with
/// compensated summation so results are reproducible bit for bit.
std::complex<double> w_sum_ris1(const Scenario& scenario);

/// Same shape over panel 2 with the cell-to-target leg and the distance
/// back to panel 1's center; no radar pattern factor on this panel.
std::complex<double> w_sum_ris2(const Scenario& scenario);

/// Internal sum of the one-panel round trip: per cell,
///   sqrt(F_rad * F_in * F_out) * eta / (r_radar * r_target)
///   * exp(-i(4*pi*r_radar/lambda - phi + 2*pi*r_target/lambda - phi')).
std::complex<double> v_sum_single(const Scenario& scenario);

/// Two-panel round-trip received power:
///   Pt sigma lambda^2 Gt^2 G1^2 G2^2 (rx1 ry1)^2 (rx2 ry2)^2 / (4 pi)^7
///   * |sum1|^4 * |sum2|^4.
CascadeResult dual_ris_received_power(const Scenario& scenario);

/// One-panel round-trip received power:
///   Pt sigma lambda^2 Gt^2 G1^2 (rx1 ry1)^2 / (4 pi)^5 * |v_sum|^4.
CascadeResult single_ris_received_power(const Scenario& scenario);

/// One panel's contribution to the maximum-alignment closed form:
///   G^2 (rx ry)^2 (rows cols)^4 eta^4 F^2 / ((4 pi)^2 r^4).
/// Dimensionless linear factor; its dB value is the panel's net effect on
/// the link.
double closed_form_ris_factor(double gain_linear, double rx_m, double ry_m, int rows, int cols,
                              double eta, double f_combine, double r_m);

/// Maximum-alignment received power from center geometry alone, watts:
///   [Pt Gt^2 lambda^2 sigma / ((4 pi)^3 r1^4)]
///   * [panel-1 factor over r2] * [panel-2 factor over r_ris],
/// with each pattern product evaluated at the panel-center angles. Grids
/// enter through their mean amplitude.
double closed_form_max_dual(const Scenario& scenario);

/// One-panel counterpart: the first bracket times the panel factor over
/// the center-to-target distance.
double closed_form_max_single(const Scenario& scenario);

struct SnrValue {
    double linear = 0.0;
    double db = 0.0;
};

/// pr * pulses / (k T0 B L).
SnrValue snr(double pr_w, const NoiseModel& noise);

/// 10*log10(pt/pr); +inf when pr == 0.
double path_loss_db(double pt_w, double pr_w);

/// The seven stage powers of the forward/return cascade, evaluated at the
/// panel-center reference cells: radar to one panel-1 cell, on to one
/// panel-2 cell, the full panel-1 array at that cell, toward the target,
/// the full panel-2 array at the target, the echo back at one panel-1 cell,
/// and the full panel-2 array at that cell. Stages 4 and 5 are power flux
/// densities at the target; the others are cell powers. Distances between
/// the panels are measured cell-to-opposite-panel-center throughout,
/// matching the coherent sums.
std::array<double, 7> intermediate_cascade(const Scenario& scenario);

} // namespace risradar
