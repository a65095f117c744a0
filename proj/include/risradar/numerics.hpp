#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

namespace risradar {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kFourPi = 4.0 * std::numbers::pi;

/// Boltzmann constant, J/K (exact SI value).
inline constexpr double kBoltzmann = 1.380649e-23;

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

/// 10*log10(x). Returns -inf for x <= 0 so total-cancellation cases
/// propagate as sentinels instead of NaNs.
inline double linear_to_db(double x) {
    if (x <= 0.0) {
        return -std::numeric_limits<double>::infinity();
    }
    return 10.0 * std::log10(x);
}

/// Wraps an angle to [0, 2*pi).
inline double mod_two_pi(double x) {
    double r = std::fmod(x, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    if (r >= kTwoPi) {
        r = 0.0;
    }
    return r;
}

/// Neumaier compensated accumulator. Summation happens in a fixed order
/// with an error-free correction term so regression outputs stay
/// bit-stable across runs and build configurations.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Compensated accumulator for complex terms (independent real/imag parts).
class CompensatedComplexSum {
public:
    void add(const std::complex<double>& z) {
        re_.add(z.real());
        im_.add(z.imag());
    }

    std::complex<double> value() const { return {re_.value(), im_.value()}; }

private:
    CompensatedSum re_;
    CompensatedSum im_;
};

} // namespace risradar
