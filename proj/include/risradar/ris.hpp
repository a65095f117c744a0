#pragma once

#include <complex>
#include <vector>

#include "risradar/geometry.hpp"
#include "risradar/patterns.hpp"

namespace risradar {

/// How the per-cell phase grids are produced.
enum class PhasingMode {
    uniform_zero,        ///< all phases zero
    round_trip_conjugate,///< phases cancel the propagation phase of the round trip
    explicit_grids,      ///< caller-supplied grids
};

/// Which hop of the round trip a reflection belongs to.
enum class Hop { first, second };

/// One RIS panel: a placed grid of unit cells with per-cell amplitude and
/// per-hop phase state. Cell dimensions double as inter-cell spacing
/// (contiguous cells). Immutable by convention: the phase-synthesis
/// helpers return updated copies.
struct RisPanel {
    PanelFrame frame;
    int rows = 0;         ///< J (or M)
    int cols = 0;         ///< K (or N)
    double cell_dx_m = 0; ///< rx
    double cell_dy_m = 0; ///< ry
    std::vector<double> eta;      ///< per-cell amplitude, each in [0, 1], row-major
    std::vector<double> phase_tx; ///< first-hop phase, radians in [0, 2*pi)
    std::vector<double> phase_rx; ///< second-hop phase, radians in [0, 2*pi)
    PatternModel pattern;
    PhasingMode phasing = PhasingMode::uniform_zero;

    int cell_count() const { return rows * cols; }

    /// Row-major index of the 1-based cell (j, k). Throws std::out_of_range.
    int cell_index(int j, int k) const;

    /// World position of the center of cell (j, k), 1-based.
    Vec3 cell_center(int j, int k) const;

    /// World position of the panel center.
    Vec3 center() const;
};

/// Builds a panel with a uniform amplitude grid and zeroed phases.
/// Validates grid dimensions >= 1 and eta in [0, 1].
RisPanel make_uniform_panel(const PanelFrame& frame, int rows, int cols, double cell_dx_m,
                            double cell_dy_m, double eta, const PatternModel& pattern,
                            PhasingMode phasing = PhasingMode::round_trip_conjugate);

/// True when the cell pitch lies in the customary [lambda/10, lambda/2]
/// band. Violations are legal but worth a warning at config load.
bool spacing_within_recommended(const RisPanel& panel, double wavelength_m);

/// Reflection coefficient eta * exp(i*phi) of cell (j, k) for the given hop.
std::complex<double> reflection_coefficient(const RisPanel& panel, int j, int k, Hop hop);

/// Sets both phase grids to the round-trip conjugate profile
/// phi = mod(2*pi*r_in/lambda + pi*r_out/lambda, 2*pi), which cancels the
/// per-cell propagation phase 4*pi*r_in/lambda + 2*pi*r_out/lambda when the
/// two hops carry equal phase. The distance grids are row-major and must
/// match the panel dimensions.
RisPanel synthesize_conjugate_phases(const RisPanel& panel, const std::vector<double>& inbound_distance_m,
                                     const std::vector<double>& outbound_distance_m, double wavelength_m);

/// Returns a copy carrying caller-supplied phase grids (wrapped to [0, 2*pi)).
RisPanel with_explicit_phases(const RisPanel& panel, const std::vector<double>& phase_tx,
                              const std::vector<double>& phase_rx);

/// Rounds every phase to the nearest multiple of 2*pi/2^bits. Off by
/// default everywhere; provided for quantization experiments.
RisPanel quantize_phases(const RisPanel& panel, int bits);

} // namespace risradar
