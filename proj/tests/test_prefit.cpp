#include <pssflow/measurements_csv.hpp>
#include <pssflow/prefit.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <vector>

namespace {

using pssflow::FlowMeasurement;
using pssflow::FlowParameters;

FlowParameters fit_truth(double s) {
    FlowParameters p;
    p.alpha = 1.01e10;
    p.lambda = 1.01e10;
    p.s = s;
    p.v_D = 5e-8;
    p.v_F = 1e-5;
    return p;
}

const std::vector<double>& grid() {
    static const std::vector<double> g = pssflow::log_space(1e-9, 1e-6, 20);
    return g;
}

class NoiselessRecovery : public ::testing::TestWithParam<double> {};

TEST_P(NoiselessRecovery, RecoversExponentAndCoefficients) {
    const double s = GetParam();
    const auto data = pssflow::synthesize_measurements(fit_truth(s), grid(), 0.0, 1);
    const auto fit = pssflow::fit_segments(data);
    ASSERT_TRUE(fit.has_breakpoint);
    EXPECT_NEAR(fit.s_hat, s, 1e-6);
    EXPECT_NEAR(fit.lambda_hat / 1.01e10, 1.0, 1e-6);
    EXPECT_NEAR(fit.alpha_hat / 1.01e10, 1.0, 1e-6);
    // The breakpoint sits between the grid points that bracket the true v_D.
    const auto upper = std::upper_bound(grid().begin(), grid().end(), 5e-8);
    EXPECT_GT(fit.v_D_hat, *(upper - 1));
    EXPECT_LT(fit.v_D_hat, *upper);
    EXPECT_GE(fit.points_per_segment.first, 3u);
    EXPECT_GE(fit.points_per_segment.second, 3u);
    EXPECT_NEAR(fit.darcy_slope_free, 1.0, 1e-9);
}

INSTANTIATE_TEST_SUITE_P(Exponents, NoiselessRecovery, ::testing::Values(0.1, 0.3, 0.5772, 0.6562, 0.9));

TEST(Prefit, NoisyRecoveryWithinTolerance) {
    for (double s : {0.3, 0.5772, 0.6562}) {
        double worst = 0.0;
        for (std::uint64_t trial = 0; trial < 100; ++trial) {
            const auto data = pssflow::synthesize_measurements(fit_truth(s), grid(), 0.01, 1000 + trial);
            worst = std::max(worst, std::abs(pssflow::fit_segments(data).s_hat - s));
        }
        EXPECT_LE(worst, 0.05) << "s=" << s;
    }
}

TEST(Prefit, PureDarcyDataFallsBackToSingleLine) {
    FlowParameters p = fit_truth(0.7);
    p.v_D = 1e-10;
    const auto fit = pssflow::fit_segments(pssflow::synthesize_measurements(p, grid(), 0.0, 1));
    EXPECT_FALSE(fit.has_breakpoint);
    EXPECT_EQ(fit.s_hat, 0.0);
    EXPECT_EQ(fit.v_D_hat, 0.0);
    EXPECT_EQ(fit.points_per_segment.first, 0u);
    EXPECT_EQ(fit.points_per_segment.second, grid().size());
    EXPECT_NEAR(fit.alpha_hat / 1.01e10, 1.0, 1e-12);
    EXPECT_EQ(fit.lambda_hat, fit.alpha_hat);
}

TEST(Prefit, ScaleEquivariance) {
    const auto data = pssflow::synthesize_measurements(fit_truth(0.5772), grid(), 0.01, 5);
    auto scaled = data;
    const double c = 7.25;
    for (auto& m : scaled) {
        m.grad_p *= c;
    }
    const auto a = pssflow::fit_segments(data);
    const auto b = pssflow::fit_segments(scaled);
    EXPECT_NEAR(b.s_hat, a.s_hat, 1e-12);
    EXPECT_NEAR(b.lambda_hat / (c * a.lambda_hat), 1.0, 1e-12);
    EXPECT_NEAR(b.alpha_hat / (c * a.alpha_hat), 1.0, 1e-12);
    EXPECT_EQ(b.v_D_hat, a.v_D_hat);
    EXPECT_EQ(b.points_per_segment, a.points_per_segment);
}

TEST(Prefit, PermutationInvariance) {
    const auto data = pssflow::synthesize_measurements(fit_truth(0.3), grid(), 0.02, 9);
    auto shuffled = data;
    std::mt19937_64 rng(3);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const auto a = pssflow::fit_segments(data);
    const auto b = pssflow::fit_segments(shuffled);
    EXPECT_EQ(a.s_hat, b.s_hat);
    EXPECT_EQ(a.lambda_hat, b.lambda_hat);
    EXPECT_EQ(a.alpha_hat, b.alpha_hat);
    EXPECT_EQ(a.v_D_hat, b.v_D_hat);
}

TEST(Prefit, ExponentStaysInUnitInterval) {
    // Pre-Darcy segment steeper than Darcy would mean s < 0.
    std::vector<FlowMeasurement> data;
    for (double v : grid()) {
        data.push_back({v, v < 5e-8 ? 1e10 * v * v / 5e-8 : 1e10 * v});
    }
    const auto fit = pssflow::fit_segments(data);
    EXPECT_GE(fit.s_hat, 0.0);
    EXPECT_LE(fit.s_hat, 1.0);
}

TEST(Prefit, RejectsDegenerateInput) {
    const auto data = pssflow::synthesize_measurements(fit_truth(0.5), grid(), 0.0, 1);
    EXPECT_THROW((void)pssflow::fit_segments(std::span(data).first(5)), pssflow::InputError);

    std::vector<FlowMeasurement> equal(8, FlowMeasurement{1e-7, 1e3});
    EXPECT_THROW((void)pssflow::fit_segments(equal), pssflow::InputError);

    auto dup = data;
    dup[4].v = dup[3].v;
    EXPECT_THROW((void)pssflow::fit_segments(dup), pssflow::InputError);

    auto negative = data;
    negative[2].v = -1e-9;
    EXPECT_THROW((void)pssflow::fit_segments(negative), pssflow::InputError);

    auto zero_grad = data;
    zero_grad[2].grad_p = 0.0;
    EXPECT_THROW((void)pssflow::fit_segments(zero_grad), pssflow::InputError);
}

TEST(Synthesis, NoiselessFollowsPiecewiseLaw) {
    FlowParameters p = fit_truth(0.3);
    const std::vector<double> v{1e-9, 1e-7, 2e-5};
    const auto data = pssflow::synthesize_measurements(p, v, 0.0, 1);
    EXPECT_NEAR(data[0].grad_p / (1.01e10 * std::pow(1e-9, 0.7)), 1.0, 1e-14);
    EXPECT_NEAR(data[1].grad_p / (1.01e10 * 1e-7), 1.0, 1e-15);
    EXPECT_NEAR(data[2].grad_p / ((1.01e10 + p.beta * 2e-5) * 2e-5), 1.0, 1e-15);
}

TEST(Synthesis, SeedDeterminesNoise) {
    const auto a = pssflow::synthesize_measurements(fit_truth(0.3), grid(), 0.05, 77);
    const auto b = pssflow::synthesize_measurements(fit_truth(0.3), grid(), 0.05, 77);
    const auto c = pssflow::synthesize_measurements(fit_truth(0.3), grid(), 0.05, 78);
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].grad_p, b[i].grad_p);
    }
    EXPECT_NE(a[0].grad_p, c[0].grad_p);
}

TEST(MeasurementsCsv, RoundTrip) {
    const auto data = pssflow::synthesize_measurements(fit_truth(0.6562), grid(), 0.01, 2);
    std::stringstream buf;
    pssflow::write_measurements(buf, data);
    const auto back = pssflow::read_measurements(buf);
    ASSERT_EQ(back.size(), data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        EXPECT_EQ(back[i].v, data[i].v);
        EXPECT_EQ(back[i].grad_p, data[i].grad_p);
    }
}

TEST(MeasurementsCsv, ToleratesBomWhitespaceAndBlankLines) {
    std::istringstream in("\xEF\xBB\xBFv_m_per_s,grad_p_pa_per_m\n\n 1e-7 , 1010 \r\n2e-7,2020\n");
    const auto data = pssflow::read_measurements(in);
    ASSERT_EQ(data.size(), 2u);
    EXPECT_EQ(data[0].v, 1e-7);
    EXPECT_EQ(data[1].grad_p, 2020.0);
}

std::string read_error(const std::string& text) {
    std::istringstream in(text);
    try {
        (void)pssflow::read_measurements(in);
    } catch (const pssflow::InputError& e) {
        return e.what();
    }
    return {};
}

TEST(MeasurementsCsv, ErrorsNameTheRow) {
    EXPECT_NE(read_error("1e-7,1010\n").find("header"), std::string::npos);
    EXPECT_NE(read_error("v,g\n1e-7,1010\n-2e-7,2020\n").find("row 3"), std::string::npos);
    EXPECT_NE(read_error("v,g\n1e-7,1010\n2e-7,abc\n").find("row 3"), std::string::npos);
    EXPECT_NE(read_error("v,g\n1e-7,1010,5\n").find("row 2"), std::string::npos);
    EXPECT_NE(read_error("v,g\n1e-7,0\n").find("non-positive pressure gradient"), std::string::npos);
    EXPECT_NE(read_error("").find("empty"), std::string::npos);
}

} // namespace
