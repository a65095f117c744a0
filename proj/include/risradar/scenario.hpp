#pragma once

#include <vector>

#include "risradar/geometry.hpp"
#include "risradar/numerics.hpp"
#include "risradar/patterns.hpp"
#include "risradar/ris.hpp"

namespace risradar {

/// Default carrier wavelength, meters (L-band, ~1.4 GHz). Half of it is
/// the default cell pitch.
inline constexpr double kDefaultWavelengthM = 0.2142;

/// Monostatic radar node: one antenna for transmit and receive.
struct RadarNode {
    Vec3 position;
    double pt_w = 1.0;    ///< transmit power, watts, > 0
    PatternModel pattern; ///< gain G_t plus shape F_rad
    Vec3 boresight{0.0, 0.0, -1.0}; ///< unit pointing direction of F_rad
};

/// Point target described by its radar cross-section.
struct Target {
    Vec3 position;
    double rcs_m2 = 1.0; ///< sigma, square meters, > 0
};

/// Receiver noise and integration parameters for the SNR stage.
struct NoiseModel {
    double t0_k = 290.0;    ///< system temperature, kelvin
    double bandwidth_hz = 1e6;
    double loss_linear = 1.0; ///< system loss L, linear, >= 1
    int pulses = 1;           ///< coherently integrated pulse count, >= 1
};

/// Everything one evaluation needs: radar, one or two panels (panel 0 is
/// the radar-side surface), target, noise, carrier.
struct Scenario {
    RadarNode radar;
    std::vector<RisPanel> panels;
    Target target;
    NoiseModel noise;
    double wavelength_m = kDefaultWavelengthM;
};

/// Center-to-center distances and angles of a two-panel scenario.
/// Throws GeometryError on coincident placements.
CenterGeometry center_geometry(const Scenario& scenario);

/// Radar and target leg geometry of a one-panel scenario: r1/theta_r/phi_r
/// toward the radar and r2/theta_t/phi_t toward the target, both at the
/// panel center in the panel frame.
struct SingleCenterGeometry {
    double r1 = 0.0;
    double r2 = 0.0;
    double theta_r = 0.0;
    double phi_r = 0.0;
    double theta_t = 0.0;
    double phi_t = 0.0;
};

SingleCenterGeometry single_center_geometry(const Scenario& scenario);

/// Far-field distance of the panel's largest side at the given carrier.
double panel_far_field_distance(const RisPanel& panel, double wavelength_m);

/// Resolves each panel's phase grids against the scenario geometry:
/// panels in round_trip_conjugate mode get freshly synthesized grids
/// (inbound leg toward the radar or target, outbound leg toward the other
/// panel's center), uniform_zero panels get zeros, explicit grids pass
/// through untouched. Returns the updated scenario.
Scenario apply_phasing(const Scenario& scenario);

/// Parameters for the canonical maximum-alignment two-panel layout.
/// Panel 1 lies in the world xy-plane with its normal on +z and the radar
/// on that normal. Panel 2 sits bend_ris1 off panel 1's normal at r_ris;
/// its own normal is tilted so the panel-1 direction and the target
/// direction make equal angles bend_ris2 on opposite azimuths (the
/// alignment condition). Zero bends collapse everything onto one axis,
/// which keeps every pattern factor at its boresight value of 1.
struct DualPresetParams {
    int cells_per_side = 10;
    double r1_m = 250.0;
    double r_ris_m = 50.0;
    double r2_m = 500.0;
    double wavelength_m = kDefaultWavelengthM;
    double spacing_fraction = 0.5; ///< cell pitch as a fraction of lambda
    double bend_ris1_rad = 0.0;
    double bend_ris2_rad = 0.0;
    double eta = 0.8;
    double pt_dbw = 30.0;
    double gt_db = 30.0;
    double ris_gain_db = 4.0;
    double rcs_m2 = 0.02;
    bool isotropic_patterns = false; ///< default: cosine with 45 deg HPBW
    NoiseModel noise{};
};

Scenario make_aligned_dual_scenario(const DualPresetParams& p);

/// One-panel counterpart: radar on the panel normal at r1, target on the
/// normal at r2 (boresight alignment on both legs).
struct SinglePresetParams {
    int cells_per_side = 10;
    double r1_m = 250.0;
    double r2_m = 500.0;
    double wavelength_m = kDefaultWavelengthM;
    double spacing_fraction = 0.5;
    double eta = 0.8;
    double pt_dbw = 30.0;
    double gt_db = 30.0;
    double ris_gain_db = 4.0;
    double rcs_m2 = 0.02;
    bool isotropic_patterns = false;
    NoiseModel noise{};
};

Scenario make_aligned_single_scenario(const SinglePresetParams& p);

} // namespace risradar
