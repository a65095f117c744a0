#include <doctest.h>

#include <cmath>

#include "risradar/errors.hpp"
#include "risradar/numerics.hpp"
#include "risradar/patterns.hpp"

using namespace risradar;

TEST_CASE("boresight is always unity and the back hemisphere is dark") {
    const PatternModel iso = PatternModel::isotropic(2.0);
    const PatternModel cos8 = PatternModel::cosine_from_hpbw(kPi / 4.0, db_to_linear(4.0));
    for (const PatternModel& m : {iso, cos8}) {
        CHECK(evaluate(m, 0.0, 0.0) == doctest::Approx(1.0));
        CHECK(evaluate(m, 120.0 * kPi / 180.0, 0.3) == 0.0);
        CHECK(evaluate(m, kPi, 0.0) == 0.0);
    }
}

TEST_CASE("a 45 degree half-power beamwidth halves the pattern at 22.5 degrees") {
    const PatternModel m = PatternModel::cosine_from_hpbw(kPi / 4.0, 1.0);
    CHECK(evaluate(m, kPi / 8.0, 0.0) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("q_from_hpbw closed-form anchors") {
    CHECK(q_from_hpbw(120.0 * kPi / 180.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(q_from_hpbw(kPi / 2.0) == doctest::Approx(2.0).epsilon(1e-12));
    // ln(1/2) / ln(cos 22.5 deg), cross-checked by the half-power identity below.
    CHECK(q_from_hpbw(kPi / 4.0) == doctest::Approx(8.754777493816801).epsilon(1e-12));
}

TEST_CASE("q_from_hpbw rejects degenerate beamwidths") {
    CHECK_THROWS_AS(q_from_hpbw(0.0), Error);
    CHECK_THROWS_AS(q_from_hpbw(kPi), Error);
    CHECK_THROWS_AS(q_from_hpbw(-0.1), Error);
}

TEST_CASE("half-power identity holds across the whole beamwidth range") {
    for (double hpbw_deg = 1.0; hpbw_deg < 180.0; hpbw_deg += 3.7) {
        const double hpbw = hpbw_deg * kPi / 180.0;
        const double q = q_from_hpbw(hpbw);
        const PatternModel m = PatternModel::cosine(q, 1.0);
        CHECK(std::abs(evaluate(m, hpbw / 2.0, 0.0) - 0.5) < 1e-12);
    }
}

TEST_CASE("cosine patterns are bounded and monotone over the front hemisphere") {
    const PatternModel m = PatternModel::cosine_from_hpbw(kPi / 3.0, 1.0);
    double prev = 2.0;
    for (int i = 0; i <= 200; ++i) {
        const double theta = kPi / 2.0 * i / 200.0;
        const double f = evaluate(m, theta, 0.0);
        CHECK(f >= 0.0);
        CHECK(f <= 1.0);
        CHECK(f <= prev + 1e-15);
        prev = f;
    }
}

TEST_CASE("gain below unity is rejected") {
    CHECK_THROWS_AS(PatternModel::isotropic(0.5), std::invalid_argument);
    CHECK_THROWS_AS(PatternModel::cosine(2.0, 0.0), std::invalid_argument);
}
