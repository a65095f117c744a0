#include "risradar/ris.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "risradar/errors.hpp"
#include "risradar/numerics.hpp"

namespace risradar {

int RisPanel::cell_index(int j, int k) const {
    if (j < 1 || j > rows || k < 1 || k > cols) {
        throw std::out_of_range("cell index (" + std::to_string(j) + ", " + std::to_string(k) +
                                ") outside a " + std::to_string(rows) + "x" + std::to_string(cols) +
                                " panel");
    }
    return (j - 1) * cols + (k - 1);
}

Vec3 RisPanel::cell_center(int j, int k) const {
    cell_index(j, k);
    return risradar::cell_center(frame, j, k, cell_dx_m, cell_dy_m);
}

Vec3 RisPanel::center() const {
    return frame.origin + (rows * cell_dx_m / 2.0) * frame.u_axis + (cols * cell_dy_m / 2.0) * frame.v_axis;
}

RisPanel make_uniform_panel(const PanelFrame& frame, int rows, int cols, double cell_dx_m,
                            double cell_dy_m, double eta, const PatternModel& pattern,
                            PhasingMode phasing) {
    if (rows < 1 || cols < 1) {
        throw std::invalid_argument("panel grid dimensions must be >= 1");
    }
    if (cell_dx_m <= 0.0 || cell_dy_m <= 0.0) {
        throw std::invalid_argument("cell dimensions must be positive");
    }
    if (eta < 0.0 || eta > 1.0) {
        throw std::invalid_argument("unit cell amplitude must lie in [0, 1]");
    }
    RisPanel p;
    p.frame = frame;
    p.rows = rows;
    p.cols = cols;
    p.cell_dx_m = cell_dx_m;
    p.cell_dy_m = cell_dy_m;
    p.eta.assign(static_cast<size_t>(rows) * cols, eta);
    p.phase_tx.assign(p.eta.size(), 0.0);
    p.phase_rx.assign(p.eta.size(), 0.0);
    p.pattern = pattern;
    p.phasing = phasing;
    return p;
}

bool spacing_within_recommended(const RisPanel& panel, double wavelength_m) {
    const double lo = wavelength_m / 10.0;
    const double hi = wavelength_m / 2.0;
    const double tol = 1e-12 * wavelength_m;
    auto ok = [&](double d) { return d >= lo - tol && d <= hi + tol; };
    return ok(panel.cell_dx_m) && ok(panel.cell_dy_m);
}

std::complex<double> reflection_coefficient(const RisPanel& panel, int j, int k, Hop hop) {
    const int idx = panel.cell_index(j, k);
    const double phase = hop == Hop::first ? panel.phase_tx[idx] : panel.phase_rx[idx];
    return std::polar(panel.eta[idx], phase);
}

RisPanel synthesize_conjugate_phases(const RisPanel& panel, const std::vector<double>& inbound_distance_m,
                                     const std::vector<double>& outbound_distance_m, double wavelength_m) {
    const size_t n = static_cast<size_t>(panel.cell_count());
    if (inbound_distance_m.size() != n || outbound_distance_m.size() != n) {
        throw std::invalid_argument("distance grid shape does not match the panel grid");
    }
    if (wavelength_m <= 0.0) {
        throw std::invalid_argument("wavelength must be positive");
    }
    RisPanel out = panel;
    for (size_t i = 0; i < n; ++i) {
        const double phase =
            mod_two_pi(kTwoPi * inbound_distance_m[i] / wavelength_m + kPi * outbound_distance_m[i] / wavelength_m);
        out.phase_tx[i] = phase;
        out.phase_rx[i] = phase;
    }
    out.phasing = PhasingMode::round_trip_conjugate;
    return out;
}

RisPanel with_explicit_phases(const RisPanel& panel, const std::vector<double>& phase_tx,
                              const std::vector<double>& phase_rx) {
    const size_t n = static_cast<size_t>(panel.cell_count());
    if (phase_tx.size() != n || phase_rx.size() != n) {
        throw std::invalid_argument("phase grid shape does not match the panel grid");
    }
    RisPanel out = panel;
    for (size_t i = 0; i < n; ++i) {
        out.phase_tx[i] = mod_two_pi(phase_tx[i]);
        out.phase_rx[i] = mod_two_pi(phase_rx[i]);
    }
    out.phasing = PhasingMode::explicit_grids;
    return out;
}

RisPanel quantize_phases(const RisPanel& panel, int bits) {
    if (bits < 1 || bits > 30) {
        throw std::invalid_argument("phase quantizer expects 1..30 bits");
    }
    const double step = kTwoPi / static_cast<double>(1 << bits);
    auto snap = [step](double phase) { return mod_two_pi(std::round(phase / step) * step); };
    RisPanel out = panel;
    for (size_t i = 0; i < out.phase_tx.size(); ++i) {
        out.phase_tx[i] = snap(out.phase_tx[i]);
        out.phase_rx[i] = snap(out.phase_rx[i]);
    }
    return out;
}

} // namespace risradar
