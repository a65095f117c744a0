#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "risradar/config.hpp"
#include "risradar/errors.hpp"
#include "risradar/linkbudget.hpp"
#include "risradar/sweep.hpp"

namespace {

using namespace risradar;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitGeometry = 3;
constexpr int kExitIo = 4;

// Published reference values the table2 --check mode compares against.
constexpr double kExpectedFarField[5] = {10.7142, 38.6631, 83.9664, 146.6199, 226.6236};
constexpr double kExpectedEffectDb[5] = {-44.62, -22.32, -8.85, 0.84, 8.4};
constexpr double kFarFieldTolM = 0.01;
constexpr double kEffectTolDb = 0.05;

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

void print_warnings(const LoadedScenario& loaded) {
    for (const std::string& w : loaded.warnings) {
        std::cerr << "warning: " << w << "\n";
    }
}

struct SnrOptions {
    std::string config_path;
    std::optional<double> pt_dbw;
    std::optional<int> pulses;
};

int run_snr(const SnrOptions& opt) {
    LoadedScenario loaded = load_scenario_file(opt.config_path);
    print_warnings(loaded);
    Scenario& s = loaded.scenario;
    if (opt.pt_dbw) {
        s.radar.pt_w = db_to_linear(*opt.pt_dbw);
    }
    if (opt.pulses) {
        if (*opt.pulses < 1) {
            throw ConfigError("--pulses must be >= 1");
        }
        s.noise.pulses = *opt.pulses;
    }
    const Scenario phased = apply_phasing(s);
    const CascadeResult res = phased.panels.size() == 2 ? dual_ris_received_power(phased)
                                                        : single_ris_received_power(phased);
    std::cout << "pr_w         = " << fmt("%.6g", res.pr_w) << "\n";
    std::cout << "pr_dbw       = " << fmt("%.4f", linear_to_db(res.pr_w)) << "\n";
    std::cout << "snr_db       = " << fmt("%.4f", res.snr_db) << "\n";
    std::cout << "path_loss_db = " << fmt("%.4f", res.path_loss_db) << "\n";
    std::cout << "sum1_mag     = " << fmt("%.6g", res.sum1_mag) << "\n";
    if (phased.panels.size() == 2) {
        std::cout << "sum2_mag     = " << fmt("%.6g", res.sum2_mag) << "\n";
    }
    return kExitOk;
}

struct Table2Options {
    double wavelength_m = kDefaultWavelengthM;
    double gain_db = 4.0;
    double eta = 0.8;
    double r_ris_m = 50.0;
    bool check = false;
};

int run_table2(const Table2Options& opt) {
    const double spacing = opt.wavelength_m / 2.0;
    const auto rows = table2_report(opt.wavelength_m, spacing, db_to_linear(opt.gain_db), opt.eta,
                                    opt.r_ris_m);
    std::printf("%-7s %-9s %-11s %-13s %s\n", "config", "elements", "size", "far_field_m",
                "ris_effect_db");
    for (const Table2Row& row : rows) {
        char elements[32];
        std::snprintf(elements, sizeof(elements), "%d x %d", row.cells_per_side, row.cells_per_side);
        char size[32];
        std::snprintf(size, sizeof(size), "%d m x %d m", row.approx_side_m, row.approx_side_m);
        std::printf("%-7d %-9s %-11s %-13.4f %.2f\n", row.config_index, elements, size,
                    row.far_field_m, row.ris_effect_db);
    }
    if (!opt.check) {
        return kExitOk;
    }
    bool ok = true;
    for (size_t i = 0; i < rows.size(); ++i) {
        const double ff_err = std::abs(rows[i].far_field_m - kExpectedFarField[i]);
        const double eff_err = std::abs(rows[i].ris_effect_db - kExpectedEffectDb[i]);
        if (ff_err > kFarFieldTolM) {
            std::printf("check: row %d far-field %.4f m deviates from %.4f m by %.4f m (tol %.2f)\n",
                        rows[i].config_index, rows[i].far_field_m, kExpectedFarField[i], ff_err,
                        kFarFieldTolM);
            ok = false;
        }
        if (eff_err > kEffectTolDb) {
            std::printf("check: row %d effect %.3f dB deviates from %.2f dB by %.3f dB (tol %.2f)\n",
                        rows[i].config_index, rows[i].ris_effect_db, kExpectedEffectDb[i], eff_err,
                        kEffectTolDb);
            ok = false;
        }
    }
    std::printf("check: %s\n", ok ? "PASS" : "FAIL");
    return ok ? kExitOk : kExitCheckFailed;
}

struct SweepOptions {
    std::string config_path;
    std::string axis = "r2";
    double from = 10.0;
    double to = 1000.0;
    int points = 50;
    bool log_spacing = false;
    bool compare = false;
    std::string mode = "closed";
    std::string csv_path;
    std::string svg_path;
    bool mark_far_field = true;
};

SweepAxis parse_axis(const std::string& axis) {
    if (axis == "r2" || axis == "ris_target_distance") {
        return SweepAxis::ris_target_distance;
    }
    if (axis == "n" || axis == "cells_per_side") {
        return SweepAxis::cells_per_side;
    }
    if (axis == "r1") {
        return SweepAxis::r1;
    }
    if (axis == "r_ris") {
        return SweepAxis::r_ris;
    }
    if (axis == "pulses") {
        return SweepAxis::pulses;
    }
    throw ConfigError("--axis: expected one of r2, cells_per_side, r1, r_ris, pulses");
}

bool integer_axis(SweepAxis axis) {
    return axis == SweepAxis::cells_per_side || axis == SweepAxis::pulses;
}

bool distance_axis(SweepAxis axis) {
    return axis == SweepAxis::ris_target_distance || axis == SweepAxis::r1 ||
           axis == SweepAxis::r_ris;
}

std::vector<double> make_values(const SweepOptions& opt, SweepAxis axis) {
    if (opt.points < 1) {
        throw ConfigError("--points must be >= 1");
    }
    if (opt.points > 1 && !(opt.from < opt.to)) {
        throw ConfigError("--from must be less than --to");
    }
    if (opt.log_spacing && opt.from <= 0.0) {
        throw ConfigError("--log requires positive --from");
    }
    std::vector<double> values;
    values.reserve(static_cast<size_t>(opt.points));
    for (int i = 0; i < opt.points; ++i) {
        const double f = opt.points == 1 ? 0.0 : static_cast<double>(i) / (opt.points - 1);
        double v;
        if (opt.log_spacing) {
            v = std::pow(10.0, std::log10(opt.from) + f * (std::log10(opt.to) - std::log10(opt.from)));
        } else {
            v = opt.from + f * (opt.to - opt.from);
        }
        if (integer_axis(axis)) {
            v = std::round(v);
        }
        values.push_back(v);
    }
    for (size_t i = 1; i < values.size(); ++i) {
        if (!(values[i] > values[i - 1])) {
            throw ConfigError("sweep values are not strictly increasing; reduce --points for an "
                              "integer axis");
        }
    }
    return values;
}

std::string axis_label(SweepAxis axis) {
    switch (axis) {
    case SweepAxis::ris_target_distance:
        return "RIS-target distance (m)";
    case SweepAxis::cells_per_side:
        return "cells per side";
    case SweepAxis::r1:
        return "radar-RIS distance (m)";
    case SweepAxis::r_ris:
        return "inter-RIS distance (m)";
    case SweepAxis::pulses:
        return "integrated pulses";
    }
    return "axis value";
}

int run_sweep_cmd(const SweepOptions& opt) {
    LoadedScenario loaded = load_scenario_file(opt.config_path);
    print_warnings(loaded);
    if (loaded.scenario.panels.size() != 2) {
        throw ConfigError(opt.config_path + ": sweep requires a two-panel config");
    }

    SweepSpec spec;
    spec.base = loaded.scenario;
    spec.axis = parse_axis(opt.axis);
    spec.values = make_values(opt, spec.axis);
    spec.compare_single_dual = opt.compare;
    spec.mark_far_field = opt.mark_far_field;
    if (opt.mode == "closed") {
        spec.mode = EvalMode::closed_form;
    } else if (opt.mode == "element") {
        spec.mode = EvalMode::element_sum;
    } else {
        throw ConfigError("--mode: expected 'closed' or 'element'");
    }

    const std::vector<SweepRow> rows = run_sweep(spec);
    write_text_file(opt.csv_path, emit_csv(rows));

    if (!opt.svg_path.empty()) {
        SvgStyle style;
        style.title = opt.compare ? "Single vs dual RIS SNR" : "Dual RIS SNR";
        style.x_label = axis_label(spec.axis);
        style.log_x = opt.log_spacing;
        if (spec.mark_far_field && distance_axis(spec.axis)) {
            style.vlines_x.push_back(
                panel_far_field_distance(spec.base.panels[0], spec.base.wavelength_m));
            style.vlines_x.push_back(
                panel_far_field_distance(spec.base.panels[1], spec.base.wavelength_m));
            std::sort(style.vlines_x.begin(), style.vlines_x.end());
            style.vlines_x.erase(std::unique(style.vlines_x.begin(), style.vlines_x.end()),
                                 style.vlines_x.end());
        }
        write_text_file(opt.svg_path, emit_svg_plot(rows, style));
    }

    // Summary: row count, then the single-vs-dual relation when compared.
    std::string summary = "rows=" + std::to_string(rows.size());
    if (opt.compare) {
        int far_field_rows = 0;
        int dual_wins_far_field = 0;
        std::string crossover = "none";
        bool have_prev = false;
        bool prev_dual_wins = false;
        for (const SweepRow& row : rows) {
            if (!row.error.empty() || !row.has_single || !std::isfinite(row.snr_dual_db) ||
                !std::isfinite(row.snr_single_db)) {
                continue;
            }
            const bool dual_wins = row.snr_dual_db > row.snr_single_db;
            if (row.far_field_ok) {
                ++far_field_rows;
                if (dual_wins) {
                    ++dual_wins_far_field;
                }
            }
            if (have_prev && dual_wins != prev_dual_wins) {
                if (crossover == "none") {
                    char buf[32];
                    std::snprintf(buf, sizeof(buf), "%g", row.axis_value);
                    crossover = buf;
                }
            }
            prev_dual_wins = dual_wins;
            have_prev = true;
        }
        summary += " far_field_rows=" + std::to_string(far_field_rows);
        summary += " dual_gt_single_far_field=" + std::to_string(dual_wins_far_field) + "/" +
                   std::to_string(far_field_rows);
        summary += " crossover=" + crossover;
    }
    std::cout << summary << "\n";
    return kExitOk;
}

int run_validate(const std::string& config_path) {
    LoadedScenario loaded = load_scenario_file(config_path);
    print_warnings(loaded);
    std::cout << config_path << ": ok (" << loaded.scenario.panels.size() << " panel(s), "
              << loaded.scenario.panels[0].rows << "x" << loaded.scenario.panels[0].cols
              << " grid)\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dual-RIS radar link budget simulator"};
    app.require_subcommand(1);

    SnrOptions snr_opt;
    CLI::App* snr_cmd = app.add_subcommand("snr", "Evaluate one scenario end to end");
    snr_cmd->add_option("--config", snr_opt.config_path, "Scenario config (JSON)")->required();
    double pt_dbw = 0.0;
    CLI::Option* pt_opt = snr_cmd->add_option("--pt-dbw", pt_dbw, "Override transmit power, dBW");
    int pulses = 0;
    CLI::Option* pulses_opt = snr_cmd->add_option("--pulses", pulses, "Override pulse count");

    Table2Options t2_opt;
    CLI::App* t2_cmd = app.add_subcommand("table2", "Panel size, far-field, and link-effect report");
    t2_cmd->add_option("--wavelength-m", t2_opt.wavelength_m, "Carrier wavelength, meters");
    t2_cmd->add_option("--gain-db", t2_opt.gain_db, "Unit cell gain, dB");
    t2_cmd->add_option("--eta", t2_opt.eta, "Unit cell amplitude");
    t2_cmd->add_option("--r-ris", t2_opt.r_ris_m, "Hop distance for the effect column, meters");
    t2_cmd->add_flag("--check", t2_opt.check, "Compare against the published reference values");

    SweepOptions sw_opt;
    CLI::App* sw_cmd = app.add_subcommand("sweep", "Sweep one axis and write CSV/SVG reports");
    sw_cmd->add_option("--config", sw_opt.config_path, "Scenario config (JSON)")->required();
    sw_cmd->add_option("--axis", sw_opt.axis, "r2 | cells_per_side | r1 | r_ris | pulses");
    sw_cmd->add_option("--from", sw_opt.from, "First axis value")->required();
    sw_cmd->add_option("--to", sw_opt.to, "Last axis value")->required();
    sw_cmd->add_option("--points", sw_opt.points, "Number of sweep points");
    sw_cmd->add_flag("--log", sw_opt.log_spacing, "Logarithmic axis spacing");
    sw_cmd->add_flag("--compare-single-dual", sw_opt.compare,
                     "Also evaluate the one-panel counterpart");
    sw_cmd->add_option("--mode", sw_opt.mode, "closed (default) or element");
    sw_cmd->add_option("--csv", sw_opt.csv_path, "CSV output path")->required();
    sw_cmd->add_option("--svg", sw_opt.svg_path, "SVG plot output path");
    bool no_mark = false;
    sw_cmd->add_flag("--no-mark-far-field", no_mark, "Skip far-field markers in the plot");

    std::string validate_path;
    CLI::App* val_cmd = app.add_subcommand("validate", "Schema-check a config document");
    val_cmd->add_option("--config", validate_path, "Scenario config (JSON)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (snr_cmd->parsed()) {
            if (*pt_opt) {
                snr_opt.pt_dbw = pt_dbw;
            }
            if (*pulses_opt) {
                snr_opt.pulses = pulses;
            }
            return run_snr(snr_opt);
        }
        if (t2_cmd->parsed()) {
            return run_table2(t2_opt);
        }
        if (sw_cmd->parsed()) {
            sw_opt.mark_far_field = !no_mark;
            return run_sweep_cmd(sw_opt);
        }
        if (val_cmd->parsed()) {
            return run_validate(validate_path);
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const GeometryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGeometry;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
