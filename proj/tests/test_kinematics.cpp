#include <pssflow/kinematics.hpp>
#include <pssflow/prefit.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace {

using pssflow::Scenario;

Scenario small_reservoir() {
    Scenario scn;
    scn.geometry.r_e = 100.0;
    return scn;
}

// Root of velocity_profile(r) = v by plain bisection on [r_w, r_e].
double bisect_radius(const Scenario& scn, double v) {
    double lo = scn.geometry.r_w;
    double hi = scn.geometry.r_e;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (pssflow::velocity_profile(scn, mid) > v) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

TEST(FluxDensity, ReferenceValues) {
    EXPECT_NEAR(pssflow::flux_density(Scenario{}) / 1.591549574158415e-11, 1.0, 1e-13);
    EXPECT_NEAR(pssflow::flux_density(small_reservoir()) / 1.591563754992748e-9, 1.0, 1e-13);
}

TEST(FluxDensity, RejectsNonPositiveFlux) {
    Scenario scn;
    scn.q_over_h = 0.0;
    EXPECT_THROW((void)pssflow::flux_density(scn), pssflow::InputError);
    scn.q_over_h = -1.0;
    EXPECT_THROW((void)pssflow::flux_density(scn), pssflow::InputError);
}

TEST(FluxDensity, RejectsBadGeometry) {
    Scenario scn;
    scn.geometry.r_w = 2000.0;
    EXPECT_THROW((void)pssflow::flux_density(scn), pssflow::InputError);
    scn = Scenario{};
    scn.geometry.h = 0.0;
    EXPECT_THROW((void)pssflow::flux_density(scn), pssflow::InputError);
}

TEST(Velocity, EndpointValues) {
    const Scenario scn;
    EXPECT_EQ(pssflow::velocity_profile(scn, scn.geometry.r_e), 0.0);
    EXPECT_NEAR(pssflow::velocity_profile(scn, scn.geometry.r_w) / 5.305164769729845e-5, 1.0, 1e-13);
}

TEST(Velocity, StrictlyDecreasing) {
    const Scenario scn;
    double prev = INFINITY;
    for (double r : pssflow::log_space(scn.geometry.r_w, scn.geometry.r_e, 500)) {
        const double v = pssflow::velocity_profile(scn, r);
        EXPECT_LT(v, prev);
        prev = v;
    }
}

TEST(Velocity, RejectsRadiusOutsideAnnulus) {
    const Scenario scn;
    EXPECT_THROW((void)pssflow::velocity_profile(scn, 0.29), pssflow::InputError);
    EXPECT_THROW((void)pssflow::velocity_profile(scn, 1000.5), pssflow::InputError);
}

TEST(InverseVelocity, EndpointsMapBack) {
    const Scenario scn;
    EXPECT_EQ(pssflow::radius_of_velocity(scn, 0.0), scn.geometry.r_e);
    const double vw = pssflow::velocity_profile(scn, scn.geometry.r_w);
    EXPECT_NEAR(pssflow::radius_of_velocity(scn, vw), scn.geometry.r_w, 1e-13);
    EXPECT_THROW((void)pssflow::radius_of_velocity(scn, vw * 1.01), pssflow::InputError);
    EXPECT_THROW((void)pssflow::radius_of_velocity(scn, -1e-12), pssflow::InputError);
}

TEST(InverseVelocity, MatchesBisectionAndFrozenRadii) {
    const Scenario scn = small_reservoir();
    const double r_f = pssflow::radius_of_velocity(scn, 1e-5);
    const double r_d = pssflow::radius_of_velocity(scn, 1e-7);
    EXPECT_NEAR(r_f / bisect_radius(scn, 1e-5), 1.0, 1e-12);
    EXPECT_NEAR(r_d / bisect_radius(scn, 1e-7), 1.0, 1e-12);
    EXPECT_NEAR(r_f / 1.591160804042413, 1.0, 1e-12);
    EXPECT_NEAR(r_d / 73.40297418583707, 1.0, 1e-12);
}

TEST(InverseVelocity, RoundTripOnLogGrid) {
    for (double re : {1000.0, 100.0}) {
        Scenario scn;
        scn.geometry.r_e = re;
        for (double r : pssflow::log_space(scn.geometry.r_w, re, 100)) {
            const double back = pssflow::radius_of_velocity(scn, pssflow::velocity_profile(scn, r));
            EXPECT_NEAR(back / r, 1.0, 1e-10) << "r_e=" << re << " r=" << r;
        }
    }
}

TEST(InverseVelocity, AgreesWithTextbookRootInExtendedPrecision) {
    const Scenario scn;
    const long double A = pssflow::flux_density(scn);
    const long double re = scn.geometry.r_e;
    const double v_max = pssflow::velocity_profile(scn, scn.geometry.r_w);
    for (double v : pssflow::log_space(1e-12, v_max, 200)) {
        const long double lv = v;
        const long double textbook = (-lv + std::sqrt(lv * lv + 4.0L * A * A * re * re)) / (2.0L * A);
        EXPECT_NEAR(pssflow::radius_of_velocity(scn, v) / static_cast<double>(textbook), 1.0, 1e-12) << v;
    }
}

TEST(Partition, ReferenceRadii) {
    const auto zp = pssflow::partition_zones(small_reservoir());
    EXPECT_NEAR(zp.r_F, 1.591160804042413, 1e-11);
    EXPECT_NEAR(zp.r_D, 73.40297418583707, 1e-10);
    EXPECT_FALSE(zp.r_F_clamped);
    EXPECT_FALSE(zp.r_D_clamped);
}

TEST(Partition, ClampsEmptyZones) {
    Scenario scn = small_reservoir();
    scn.params.v_D = 0.0;
    scn.params.v_F = 1.0;
    const auto zp = pssflow::partition_zones(scn);
    EXPECT_EQ(zp.r_F, scn.geometry.r_w);
    EXPECT_TRUE(zp.r_F_clamped);
    EXPECT_EQ(zp.r_D, scn.geometry.r_e);
    EXPECT_FALSE(zp.r_D_clamped);
}

TEST(Partition, OrderedForRandomScenarios) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        Scenario scn;
        scn.geometry.r_e = std::pow(10.0, 1.0 + 3.0 * unit(rng));
        scn.q_over_h = std::pow(10.0, -8.0 + 12.0 * unit(rng));
        scn.params.v_F = std::pow(10.0, -8.0 + 4.0 * unit(rng));
        scn.params.v_D = scn.params.v_F * std::pow(10.0, -4.0 * unit(rng));
        const auto zp = pssflow::partition_zones(scn);
        EXPECT_LE(scn.geometry.r_w, zp.r_F);
        EXPECT_LE(zp.r_F, zp.r_D);
        EXPECT_LE(zp.r_D, scn.geometry.r_e);
    }
}

} // namespace
