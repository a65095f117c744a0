#pragma once

#include <string>
#include <vector>

#include "risradar/linkbudget.hpp"
#include "risradar/scenario.hpp"

namespace risradar {

enum class SweepAxis {
    ris_target_distance, ///< move the target along its ray from the last panel
    cells_per_side,      ///< resize every panel to n x n around a fixed center
    r1,                  ///< move the radar along its ray from panel 1
    r_ris,               ///< slide panel 2 (and the target with it) along the inter-panel axis
    pulses,              ///< coherent integration count
};

enum class EvalMode {
    closed_form, ///< maximum-alignment closed forms (center geometry only)
    element_sum, ///< per-cell coherent sums with re-synthesized phasing
};

/// Declarative sweep over one axis of a base scenario. Values must be
/// non-empty and strictly increasing.
struct SweepSpec {
    Scenario base;
    SweepAxis axis = SweepAxis::ris_target_distance;
    std::vector<double> values;
    bool compare_single_dual = false;
    bool mark_far_field = true;
    EvalMode mode = EvalMode::closed_form;
};

/// One evaluated sweep point. On a per-point geometry failure the error
/// string is set, numeric fields are NaN, and the sweep continues.
/// far_field_ok is true when the radar leg and the swept target leg both
/// sit beyond their panel's far-field distance (the fixed inter-panel hop
/// is exempt, matching how such layouts are normally assessed).
struct SweepRow {
    double axis_value = 0.0;
    double snr_single_db = 0.0;
    double snr_dual_db = 0.0;
    double pr_dual_w = 0.0;
    double path_loss_dual_db = 0.0;
    bool far_field_ok = false;
    bool has_single = false;
    std::string error;
};

/// Evaluates the sweep point by point, in order. Deterministic: the same
/// spec always yields identical rows.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// One row of the standard five-configuration panel report.
struct Table2Row {
    int config_index = 0;  ///< 1-based
    int cells_per_side = 0;
    double side_m = 0.0;          ///< physical panel side, meters
    int approx_side_m = 0;        ///< side rounded to whole meters
    double far_field_m = 0.0;
    double ris_effect_db = 0.0;   ///< per-panel closed-form factor, dB
};

/// Far-field distance and per-panel link effect for the five canonical
/// square panel sizes (10, 19, 28, 37, 46 cells per side). The effect is
/// the closed-form panel factor at boresight (F = 1) over the given hop
/// distance.
std::vector<Table2Row> table2_report(double wavelength_m, double spacing_m, double gain_linear,
                                     double eta, double r_m);

/// CSV with a fixed header (axis_value, snr_single_db, snr_dual_db,
/// pr_dual_w, path_loss_dual_db, far_field_ok), LF line endings, numbers
/// at 6 significant digits. Fields that were not computed are left empty.
/// Byte-identical output for identical rows.
std::string emit_csv(const std::vector<SweepRow>& rows);

/// Plot styling for emit_svg_plot. vlines_x lists axis positions for
/// dashed vertical markers (used for far-field distances).
struct SvgStyle {
    int width = 800;
    int height = 500;
    std::string title = "SNR sweep";
    std::string x_label = "axis value";
    std::string y_label = "SNR (dB)";
    bool log_x = false;
    std::vector<double> vlines_x;
};

/// Standalone SVG: one polyline for the dual series, one for the single
/// series when present, dashed vertical markers from the style. The y axis
/// carries dB values (a log-scaled power axis); x may be log-scaled.
/// Throws Error for fewer than 2 rows. Byte-identical for identical input.
std::string emit_svg_plot(const std::vector<SweepRow>& rows, const SvgStyle& style);

/// Writes text to a file, throwing IoError on failure.
void write_text_file(const std::string& path, const std::string& content);

} // namespace risradar
