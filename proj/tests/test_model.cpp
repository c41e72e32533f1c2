#include <pssflow/model.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>

namespace {

using pssflow::FlowParameters;
using pssflow::ZoneLaw;
using pssflow::g_eval;
using pssflow::k_eval;

constexpr ZoneLaw kLaws[] = {ZoneLaw::PreDarcy, ZoneLaw::Darcy, ZoneLaw::Forchheimer};

TEST(Resistance, DarcyIsConstantAlpha) {
    const FlowParameters p;
    EXPECT_DOUBLE_EQ(g_eval(p, ZoneLaw::Darcy, 1e-5), 1.01e10);
    EXPECT_DOUBLE_EQ(g_eval(p, ZoneLaw::Darcy, 0.0), 1.01e10);
}

TEST(Resistance, ForchheimerAtCriticalSpeed) {
    const FlowParameters p;
    // 1.01e10 + 2.4318e11 * 1e-5
    EXPECT_NEAR(g_eval(p, ZoneLaw::Forchheimer, 1e-5), 10102431800.0, 1e-3);
}

TEST(Resistance, PreDarcyPowerLaw) {
    FlowParameters p;
    p.s = 0.3;
    // 1.01e10 * 10^2.1, evaluated in 30-digit arithmetic.
    EXPECT_NEAR(g_eval(p, ZoneLaw::PreDarcy, 1e-7) / 1.271514665912109e12, 1.0, 1e-14);
}

TEST(Resistance, PreDarcyWithZeroExponentIsLambda) {
    FlowParameters p;
    p.s = 0.0;
    p.lambda = 3.5e9;
    EXPECT_EQ(g_eval(p, ZoneLaw::PreDarcy, 0.0), 3.5e9);
    EXPECT_EQ(g_eval(p, ZoneLaw::PreDarcy, 7.0), 3.5e9);
}

TEST(Resistance, RejectsInvalidSpeeds) {
    const FlowParameters p;
    for (ZoneLaw law : kLaws) {
        EXPECT_THROW((void)g_eval(p, law, -1e-9), std::domain_error);
        EXPECT_THROW((void)g_eval(p, law, std::nan("")), std::domain_error);
    }
    EXPECT_THROW((void)g_eval(p, ZoneLaw::PreDarcy, 0.0), std::domain_error);
}

TEST(Resistance, AcceptsUnitExponent) {
    FlowParameters p;
    p.s = 1.0;
    EXPECT_NO_THROW(p.validate());
    EXPECT_NEAR(g_eval(p, ZoneLaw::PreDarcy, 1e-6), 1.01e16, 1e2);
}

TEST(Resistance, ShapePerLaw) {
    FlowParameters p;
    p.s = 0.45;
    double prev_pd = INFINITY;
    double prev_f = -INFINITY;
    for (int k = -12; k <= 0; ++k) {
        const double xi = std::pow(10.0, k);
        const double pd = g_eval(p, ZoneLaw::PreDarcy, xi);
        const double f = g_eval(p, ZoneLaw::Forchheimer, xi);
        EXPECT_LE(pd, prev_pd);
        EXPECT_GT(f, prev_f);
        EXPECT_EQ(g_eval(p, ZoneLaw::Darcy, xi), p.alpha);
        prev_pd = pd;
        prev_f = f;
    }
}

TEST(Resistance, ContinuousRescalingMatchesDarcyAtThreshold) {
    FlowParameters p;
    p.s = 0.6562;
    const FlowParameters c = p.with_continuous_predarcy();
    EXPECT_NEAR(g_eval(c, ZoneLaw::PreDarcy, p.v_D) / p.alpha, 1.0, 1e-14);
    // The Darcy/Forchheimer jump at v_F is beta * v_F.
    EXPECT_NEAR(g_eval(p, ZoneLaw::Forchheimer, p.v_F) - g_eval(p, ZoneLaw::Darcy, p.v_F), p.beta * p.v_F, 1e-3);
}

TEST(Resistance, ContinuousRescalingNeedsPositiveThreshold) {
    FlowParameters p;
    p.v_D = 0.0;
    EXPECT_THROW((void)p.with_continuous_predarcy(), pssflow::InputError);
}

TEST(Mobility, ClosedFormValues) {
    const FlowParameters p;
    EXPECT_DOUBLE_EQ(k_eval(p, ZoneLaw::Darcy, 123.0), 1.0 / 1.01e10);
    FlowParameters no_inertia = p;
    no_inertia.beta = 0.0;
    EXPECT_DOUBLE_EQ(k_eval(no_inertia, ZoneLaw::Forchheimer, 5e4), 1.0 / 1.01e10);
    FlowParameters flat = p;
    flat.s = 0.0;
    EXPECT_DOUBLE_EQ(k_eval(flat, ZoneLaw::PreDarcy, 5e4), 1.0 / 1.01e10);
}

TEST(Mobility, RejectsUnitExponentAndNegativeGradient) {
    FlowParameters p;
    p.s = 1.0;
    EXPECT_THROW((void)k_eval(p, ZoneLaw::PreDarcy, 1.0), std::domain_error);
    for (ZoneLaw law : kLaws) {
        EXPECT_THROW((void)k_eval(FlowParameters{}, law, -1.0), std::domain_error);
    }
}

TEST(Mobility, InvertsResistance) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> log_xi(-12.0, 0.0);
    std::uniform_real_distribution<double> exponent(0.0, 0.9);
    double worst = 0.0;
    for (int i = 0; i < 2000; ++i) {
        FlowParameters p;
        p.s = exponent(rng);
        const double xi = std::pow(10.0, log_xi(rng));
        for (ZoneLaw law : kLaws) {
            const double grad = g_eval(p, law, xi) * xi;
            worst = std::max(worst, std::abs(k_eval(p, law, grad) * grad / xi - 1.0));
        }
    }
    EXPECT_LT(worst, 1e-12);
}

TEST(Parameters, ValidationNamesTheField) {
    FlowParameters p;
    p.s = 1.2;
    try {
        p.validate();
        FAIL() << "expected InputError";
    } catch (const pssflow::InputError& e) {
        EXPECT_NE(std::string(e.what()).find("s must"), std::string::npos);
    }
    FlowParameters q;
    q.v_D = 1e-4;
    EXPECT_THROW(q.validate(), pssflow::InputError);
    FlowParameters r;
    r.alpha = 0.0;
    EXPECT_THROW(r.validate(), pssflow::InputError);
}

TEST(Regimes, NamesRoundTrip) {
    for (const auto& regime : pssflow::regimes::all_presets) {
        const auto parsed = pssflow::parse_regime(regime.name());
        ASSERT_TRUE(parsed.has_value()) << regime.name();
        EXPECT_EQ(*parsed, regime);
    }
    EXPECT_EQ(pssflow::regimes::FDpD.name(), "FDpD");
    EXPECT_EQ(pssflow::regimes::PreDarcy.name(), "preDarcy");
    EXPECT_EQ(*pssflow::parse_regime("Forchheimer"), pssflow::regimes::F);
    EXPECT_EQ(*pssflow::parse_regime("pDDD"), (pssflow::RegimeAssignment{ZoneLaw::PreDarcy, ZoneLaw::Darcy, ZoneLaw::Darcy}));
}

TEST(Regimes, RejectsMalformedCodes) {
    for (const char* bad : {"", "X", "FD", "FDDD", "fdd", "FDp"}) {
        EXPECT_FALSE(pssflow::parse_regime(bad).has_value()) << bad;
    }
}

TEST(Regimes, ZoneOfSpeedUsesThresholds) {
    const FlowParameters p;
    EXPECT_EQ(pssflow::zone_of_speed(p, 2e-5), 0);
    EXPECT_EQ(pssflow::zone_of_speed(p, 1e-5), 1);
    EXPECT_EQ(pssflow::zone_of_speed(p, 1e-7), 1);
    EXPECT_EQ(pssflow::zone_of_speed(p, 5e-8), 2);
    EXPECT_EQ(pssflow::regime_resistance(p, pssflow::regimes::FDpD, 1e-6), p.alpha);
    EXPECT_EQ(pssflow::regime_resistance(p, pssflow::regimes::FDpD, 2e-5), p.alpha + p.beta * 2e-5);
}

} // namespace
