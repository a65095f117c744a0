#include "risradar/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "risradar/errors.hpp"

namespace risradar {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

void validate_spec(const SweepSpec& spec) {
    if (spec.base.panels.size() != 2) {
        throw std::invalid_argument("run_sweep requires a two-panel base scenario");
    }
    if (spec.values.empty()) {
        throw std::invalid_argument("sweep values must be non-empty");
    }
    for (size_t i = 1; i < spec.values.size(); ++i) {
        if (!(spec.values[i] > spec.values[i - 1])) {
            throw std::invalid_argument("sweep values must be strictly increasing");
        }
    }
}

RisPanel resized_panel(const RisPanel& panel, int n) {
    if (panel.phasing == PhasingMode::explicit_grids) {
        throw Error("cannot resize a panel carrying explicit phase grids");
    }
    const Vec3 center = panel.center();
    const double half_u = n * panel.cell_dx_m / 2.0;
    const double half_v = n * panel.cell_dy_m / 2.0;
    PanelFrame frame = panel.frame;
    frame.origin = center - half_u * frame.u_axis - half_v * frame.v_axis;
    const double eta = std::accumulate(panel.eta.begin(), panel.eta.end(), 0.0) /
                       static_cast<double>(panel.cell_count());
    return make_uniform_panel(frame, n, n, panel.cell_dx_m, panel.cell_dy_m, eta, panel.pattern,
                              panel.phasing);
}

Scenario scenario_at(const Scenario& base, SweepAxis axis, double value) {
    Scenario s = base;
    switch (axis) {
    case SweepAxis::ris_target_distance: {
        if (!(value > 0.0)) {
            throw GeometryError("target distance must be positive");
        }
        const Vec3 c2 = s.panels.back().center();
        const Vec3 dir = normalized(s.target.position - c2);
        s.target.position = c2 + value * dir;
        break;
    }
    case SweepAxis::r1: {
        if (!(value > 0.0)) {
            throw GeometryError("radar distance must be positive");
        }
        const Vec3 c1 = s.panels[0].center();
        const Vec3 dir = normalized(s.radar.position - c1);
        s.radar.position = c1 + value * dir;
        break;
    }
    case SweepAxis::r_ris: {
        if (!(value > 0.0)) {
            throw GeometryError("inter-panel distance must be positive");
        }
        const Vec3 c1 = s.panels[0].center();
        const Vec3 c2 = s.panels[1].center();
        const Vec3 dir = normalized(c2 - c1);
        const Vec3 shift = (value - (c2 - c1).norm()) * dir;
        // The target rides along so the target leg is preserved.
        s.panels[1].frame.origin = s.panels[1].frame.origin + shift;
        s.target.position = s.target.position + shift;
        break;
    }
    case SweepAxis::cells_per_side: {
        const int n = static_cast<int>(std::lround(value));
        if (n < 1) {
            throw GeometryError("cells per side must round to >= 1");
        }
        for (RisPanel& panel : s.panels) {
            panel = resized_panel(panel, n);
        }
        break;
    }
    case SweepAxis::pulses: {
        const int pn = static_cast<int>(std::lround(value));
        if (pn < 1) {
            throw Error("pulse count must round to >= 1");
        }
        s.noise.pulses = pn;
        break;
    }
    }
    return s;
}

/// Aligned one-panel counterpart used for the single-vs-dual comparison:
/// panel 1 and the radar unchanged, target re-placed on the panel normal
/// at the dual scenario's target-leg distance, so both systems carry the
/// same leg lengths under their own best alignment.
Scenario single_counterpart(const Scenario& dual) {
    Scenario s;
    s.radar = dual.radar;
    s.noise = dual.noise;
    s.wavelength_m = dual.wavelength_m;
    s.panels.push_back(dual.panels[0]);
    const double target_leg = (dual.target.position - dual.panels[1].center()).norm();
    if (target_leg <= 0.0) {
        throw GeometryError("target coincides with the last panel center");
    }
    s.target.position = dual.panels[0].center() + target_leg * dual.panels[0].frame.normal;
    s.target.rcs_m2 = dual.target.rcs_m2;
    return s;
}

bool far_field_flag(const Scenario& dual) {
    const CenterGeometry cg = center_geometry(dual);
    const double ff1 = panel_far_field_distance(dual.panels[0], dual.wavelength_m);
    const double ff2 = panel_far_field_distance(dual.panels[1], dual.wavelength_m);
    return cg.r1 >= ff1 && cg.r2 >= ff2;
}

SweepRow evaluate_point(const SweepSpec& spec, double value) {
    SweepRow row;
    row.axis_value = value;
    row.snr_single_db = kNan;
    row.snr_dual_db = kNan;
    row.pr_dual_w = kNan;
    row.path_loss_dual_db = kNan;
    try {
        Scenario point = scenario_at(spec.base, spec.axis, value);
        row.far_field_ok = far_field_flag(point);

        double pr_dual = 0.0;
        if (spec.mode == EvalMode::element_sum) {
            const Scenario phased = apply_phasing(point);
            pr_dual = dual_ris_received_power(phased).pr_w;
        } else {
            pr_dual = closed_form_max_dual(point);
        }
        row.pr_dual_w = pr_dual;
        row.snr_dual_db = snr(pr_dual, point.noise).db;
        row.path_loss_dual_db = path_loss_db(point.radar.pt_w, pr_dual);

        if (spec.compare_single_dual) {
            const Scenario single = single_counterpart(point);
            double pr_single = 0.0;
            if (spec.mode == EvalMode::element_sum) {
                pr_single = single_ris_received_power(apply_phasing(single)).pr_w;
            } else {
                pr_single = closed_form_max_single(single);
            }
            row.snr_single_db = snr(pr_single, single.noise).db;
            row.has_single = true;
        }
    } catch (const GeometryError& e) {
        row.error = e.what();
        row.snr_single_db = kNan;
        row.snr_dual_db = kNan;
        row.pr_dual_w = kNan;
        row.path_loss_dual_db = kNan;
        row.far_field_ok = false;
        row.has_single = false;
    }
    return row;
}

std::string fmt_number(double v) {
    if (std::isnan(v)) {
        return "";
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string fmt_coord(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string fmt_tick(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

} // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    validate_spec(spec);
    std::vector<SweepRow> rows;
    rows.reserve(spec.values.size());
    for (double value : spec.values) {
        rows.push_back(evaluate_point(spec, value));
    }
    return rows;
}

std::vector<Table2Row> table2_report(double wavelength_m, double spacing_m, double gain_linear,
                                     double eta, double r_m) {
    static constexpr int kSides[] = {10, 19, 28, 37, 46};
    std::vector<Table2Row> rows;
    rows.reserve(5);
    int index = 1;
    for (int n : kSides) {
        Table2Row row;
        row.config_index = index++;
        row.cells_per_side = n;
        row.side_m = n * spacing_m;
        row.approx_side_m = static_cast<int>(std::lround(row.side_m));
        row.far_field_m = far_field_distance(n, spacing_m, wavelength_m);
        row.ris_effect_db =
            linear_to_db(closed_form_ris_factor(gain_linear, spacing_m, spacing_m, n, n, eta, 1.0, r_m));
        rows.push_back(row);
    }
    return rows;
}

std::string emit_csv(const std::vector<SweepRow>& rows) {
    if (rows.empty()) {
        throw Error("emit_csv requires at least one row");
    }
    std::string out = "axis_value,snr_single_db,snr_dual_db,pr_dual_w,path_loss_dual_db,far_field_ok\n";
    for (const SweepRow& row : rows) {
        out += csv_escape(fmt_number(row.axis_value));
        out += ',';
        out += csv_escape(row.has_single ? fmt_number(row.snr_single_db) : std::string());
        out += ',';
        out += csv_escape(fmt_number(row.snr_dual_db));
        out += ',';
        out += csv_escape(fmt_number(row.pr_dual_w));
        out += ',';
        out += csv_escape(fmt_number(row.path_loss_dual_db));
        out += ',';
        out += row.far_field_ok ? "true" : "false";
        out += '\n';
    }
    return out;
}

std::string emit_svg_plot(const std::vector<SweepRow>& rows, const SvgStyle& style) {
    if (rows.size() < 2) {
        throw Error("emit_svg_plot requires at least 2 rows");
    }

    const double ml = 70.0, mr = 20.0, mt = 40.0, mb = 50.0;
    const double pw = style.width - ml - mr;
    const double ph = style.height - mt - mb;

    // Collect finite points per series.
    struct Point {
        double x, y;
    };
    std::vector<Point> dual_pts, single_pts;
    bool log_x = style.log_x;
    for (const SweepRow& row : rows) {
        if (!row.error.empty()) {
            continue;
        }
        if (row.axis_value <= 0.0) {
            log_x = false; // nonpositive axis values cannot be log-scaled
        }
        if (std::isfinite(row.snr_dual_db)) {
            dual_pts.push_back({row.axis_value, row.snr_dual_db});
        }
        if (row.has_single && std::isfinite(row.snr_single_db)) {
            single_pts.push_back({row.axis_value, row.snr_single_db});
        }
    }

    auto xval = [log_x](double x) { return log_x ? std::log10(x) : x; };

    double x_min = std::numeric_limits<double>::max(), x_max = std::numeric_limits<double>::lowest();
    double y_min = x_min, y_max = x_max;
    for (const auto& pts : {dual_pts, single_pts}) {
        for (const Point& p : pts) {
            x_min = std::min(x_min, xval(p.x));
            x_max = std::max(x_max, xval(p.x));
            y_min = std::min(y_min, p.y);
            y_max = std::max(y_max, p.y);
        }
    }
    if (dual_pts.empty() && single_pts.empty()) {
        x_min = xval(rows.front().axis_value);
        x_max = xval(rows.back().axis_value);
        y_min = 0.0;
        y_max = 1.0;
    }
    if (x_max - x_min < 1e-12) {
        x_min -= 1.0;
        x_max += 1.0;
    }
    const double y_pad = std::max(1.0, (y_max - y_min) * 0.05);
    y_min -= y_pad;
    y_max += y_pad;

    auto sx = [&](double x) { return ml + (xval(x) - x_min) / (x_max - x_min) * pw; };
    auto sy = [&](double y) { return mt + (y_max - y) / (y_max - y_min) * ph; };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(style.width) +
           "\" height=\"" + std::to_string(style.height) + "\" viewBox=\"0 0 " +
           std::to_string(style.width) + " " + std::to_string(style.height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + fmt_coord(style.width / 2.0) +
           "\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">" +
           style.title + "</text>\n";

    // Axes.
    svg += "<line x1=\"" + fmt_coord(ml) + "\" y1=\"" + fmt_coord(mt + ph) + "\" x2=\"" +
           fmt_coord(ml + pw) + "\" y2=\"" + fmt_coord(mt + ph) + "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + fmt_coord(ml) + "\" y1=\"" + fmt_coord(mt) + "\" x2=\"" + fmt_coord(ml) +
           "\" y2=\"" + fmt_coord(mt + ph) + "\" stroke=\"black\"/>\n";

    // Ticks.
    for (int i = 0; i <= 4; ++i) {
        const double fx = x_min + (x_max - x_min) * i / 4.0;
        const double px = ml + pw * i / 4.0;
        const double label = log_x ? std::pow(10.0, fx) : fx;
        svg += "<line x1=\"" + fmt_coord(px) + "\" y1=\"" + fmt_coord(mt + ph) + "\" x2=\"" +
               fmt_coord(px) + "\" y2=\"" + fmt_coord(mt + ph + 5) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + fmt_coord(px) + "\" y=\"" + fmt_coord(mt + ph + 18) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
               fmt_tick(label) + "</text>\n";

        const double fy = y_min + (y_max - y_min) * i / 4.0;
        const double py = sy(fy);
        svg += "<line x1=\"" + fmt_coord(ml - 5) + "\" y1=\"" + fmt_coord(py) + "\" x2=\"" +
               fmt_coord(ml) + "\" y2=\"" + fmt_coord(py) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + fmt_coord(ml - 8) + "\" y=\"" + fmt_coord(py + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + fmt_tick(fy) +
               "</text>\n";
    }

    // Axis labels.
    svg += "<text x=\"" + fmt_coord(ml + pw / 2.0) + "\" y=\"" + fmt_coord(style.height - 12.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" + style.x_label +
           "</text>\n";
    svg += "<text x=\"16\" y=\"" + fmt_coord(mt + ph / 2.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 16 " +
           fmt_coord(mt + ph / 2.0) + ")\">" + style.y_label + "</text>\n";

    // Far-field markers.
    for (double vx : style.vlines_x) {
        if (log_x && vx <= 0.0) {
            continue;
        }
        const double lx = xval(vx);
        if (lx < x_min || lx > x_max) {
            continue;
        }
        const double px = ml + (lx - x_min) / (x_max - x_min) * pw;
        svg += "<line x1=\"" + fmt_coord(px) + "\" y1=\"" + fmt_coord(mt) + "\" x2=\"" + fmt_coord(px) +
               "\" y2=\"" + fmt_coord(mt + ph) +
               "\" stroke=\"#555555\" stroke-dasharray=\"4 3\"/>\n";
    }

    auto polyline = [&](const std::vector<Point>& pts, const char* color) {
        if (pts.empty()) {
            return;
        }
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (const Point& p : pts) {
            if (!first) {
                svg += ' ';
            }
            first = false;
            svg += fmt_coord(sx(p.x)) + "," + fmt_coord(sy(p.y));
        }
        svg += "\"/>\n";
    };
    polyline(dual_pts, "#1f77b4");
    polyline(single_pts, "#d62728");

    // Legend.
    double ly = mt + 14.0;
    auto legend_entry = [&](const char* color, const char* name) {
        svg += "<line x1=\"" + fmt_coord(ml + pw - 120) + "\" y1=\"" + fmt_coord(ly) + "\" x2=\"" +
               fmt_coord(ml + pw - 95) + "\" y2=\"" + fmt_coord(ly) + "\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"1.5\"/>\n";
        svg += "<text x=\"" + fmt_coord(ml + pw - 90) + "\" y=\"" + fmt_coord(ly + 4) +
               "\" font-family=\"sans-serif\" font-size=\"11\">";
        svg += name;
        svg += "</text>\n";
        ly += 16.0;
    };
    if (!dual_pts.empty()) {
        legend_entry("#1f77b4", "dual RIS");
    }
    if (!single_pts.empty()) {
        legend_entry("#d62728", "single RIS");
    }

    svg += "</svg>\n";
    return svg;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
        throw IoError("failed while writing '" + path + "'");
    }
}

} // namespace risradar
