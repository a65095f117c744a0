#pragma once

namespace risradar {

enum class PatternKind {
    isotropic,       ///< F = 1 over the front hemisphere
    cosine_exponent, ///< F = cos(theta)^q over the front hemisphere
};

/// Normalized power radiation pattern plus an independent linear gain.
/// F(0) = 1 by construction; the gain scales collected/re-radiated power
/// and is applied by the link-budget stage, never inside evaluate().
struct PatternModel {
    PatternKind kind = PatternKind::isotropic;
    double exponent_q = 0.0; ///< cosine model only, >= 0
    double gain = 1.0;       ///< linear, >= 1

    static PatternModel isotropic(double gain_linear = 1.0);
    static PatternModel cosine(double q, double gain_linear);
    static PatternModel cosine_from_hpbw(double hpbw_rad, double gain_linear);
};

/// Normalized power pattern at (theta, phi). Both shapes are rotationally
/// symmetric so phi is accepted but unused. Zero behind the panel
/// (theta > pi/2); never negative, never above 1.
double evaluate(const PatternModel& model, double theta_rad, double phi_rad);

/// Cosine exponent that puts the half-power point at hpbw/2:
/// q = ln(1/2) / ln(cos(hpbw/2)). Throws Error for hpbw outside (0, pi).
double q_from_hpbw(double hpbw_rad);

} // namespace risradar
