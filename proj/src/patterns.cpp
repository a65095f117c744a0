#include "risradar/patterns.hpp"

#include <cmath>
#include <stdexcept>

#include "risradar/errors.hpp"
#include "risradar/numerics.hpp"

namespace risradar {

namespace {
void check_gain(double gain_linear) {
    if (!(gain_linear >= 1.0)) {
        throw std::invalid_argument("pattern gain must be a linear value >= 1");
    }
}
} // namespace

PatternModel PatternModel::isotropic(double gain_linear) {
    check_gain(gain_linear);
    return PatternModel{PatternKind::isotropic, 0.0, gain_linear};
}

PatternModel PatternModel::cosine(double q, double gain_linear) {
    check_gain(gain_linear);
    if (q < 0.0) {
        throw std::invalid_argument("cosine pattern exponent must be >= 0");
    }
    return PatternModel{PatternKind::cosine_exponent, q, gain_linear};
}

PatternModel PatternModel::cosine_from_hpbw(double hpbw_rad, double gain_linear) {
    return cosine(q_from_hpbw(hpbw_rad), gain_linear);
}

double evaluate(const PatternModel& model, double theta_rad, double phi_rad) {
    (void)phi_rad;
    if (theta_rad > kPi / 2.0) {
        return 0.0; // no back-lobe
    }
    if (model.kind == PatternKind::isotropic) {
        return 1.0;
    }
    const double c = std::cos(theta_rad);
    if (c <= 0.0) {
        return 0.0;
    }
    return std::pow(c, model.exponent_q);
}

double q_from_hpbw(double hpbw_rad) {
    if (!(hpbw_rad > 0.0) || hpbw_rad >= kPi) {
        throw Error("half-power beamwidth must lie in (0, pi)");
    }
    return std::log(0.5) / std::log(std::cos(hpbw_rad / 2.0));
}

} // namespace risradar
