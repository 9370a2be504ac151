#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "psf/core.hpp"
#include "psf/datasets.hpp"

using psf::CycleMatrix;
using psf::Error;

namespace {

std::vector<double> flatten(const CycleMatrix& m) { return {m.flat().begin(), m.flat().end()}; }

}  // namespace

TEST(Normalize, EndpointsOfRange) {
    const std::vector<double> in{0, 10};
    const auto out = psf::normalize(in);
    EXPECT_EQ(out.values, (std::vector<double>{0.0, 1.0}));
    EXPECT_EQ(out.params.min, 0.0);
    EXPECT_EQ(out.params.max, 10.0);
}

TEST(Normalize, ConstantSeriesMapsToZero) {
    const std::vector<double> in{5, 5, 5};
    const auto out = psf::normalize(in);
    EXPECT_EQ(out.values, (std::vector<double>{0.0, 0.0, 0.0}));
    EXPECT_EQ(out.params.min, 5.0);
    EXPECT_EQ(out.params.max, 5.0);
    EXPECT_EQ(psf::denormalize(std::vector<double>{0.0}, out.params), (std::vector<double>{5.0}));
}

TEST(Normalize, DirectSubstitution) {
    const std::vector<double> in{2, 4, 6, 10};
    const auto out = psf::normalize(in);
    EXPECT_EQ(out.values, (std::vector<double>{0.0, 0.25, 0.5, 1.0}));
    EXPECT_EQ(out.params.min, 2.0);
    EXPECT_EQ(out.params.max, 10.0);
}

TEST(Normalize, Errors) {
    EXPECT_THROW(psf::normalize(std::vector<double>{}), Error);
    try {
        psf::normalize(std::vector<double>{1.0, std::numeric_limits<double>::quiet_NaN()});
        FAIL();
    } catch (const Error& e) {
        EXPECT_STREQ(e.what(), "non-finite value at index 1");
    }
}

TEST(Denormalize, InverseOfEndpoints) {
    EXPECT_EQ(psf::denormalize(std::vector<double>{0.0, 1.0}, {0, 10}), (std::vector<double>{0, 10}));
    EXPECT_THROW(psf::denormalize(std::vector<double>{INFINITY}, {0, 1}), Error);
}

TEST(Normalize, RoundTripProperty) {
    std::mt19937_64 gen(42);
    std::uniform_int_distribution<int> len(1, 200);
    std::uniform_real_distribution<double> scale(1e-3, 1e6);
    std::normal_distribution<double> noise(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const double s = scale(gen);
        const double offset = noise(gen) * s;
        std::vector<double> x(len(gen));
        for (double& v : x) {
            v = offset + s * noise(gen);
        }
        const auto norm = psf::normalize(x);
        for (double v : norm.values) {
            ASSERT_GE(v, 0.0);
            ASSERT_LE(v, 1.0);
        }
        const auto back = psf::denormalize(norm.values, norm.params);
        const double tol = 1e-9 * std::max(norm.params.range(), 1e-300);
        for (std::size_t i = 0; i < x.size(); ++i) {
            ASSERT_NEAR(back[i], x[i], tol) << "trial " << trial;
        }
    }
}

TEST(Reshape, DirectPartition) {
    psf::Warnings warnings;
    const auto m = psf::reshape_to_cycles(std::vector<double>{1, 2, 3, 4, 5, 6}, 3, &warnings);
    ASSERT_EQ(m.rows(), 2u);
    EXPECT_EQ(std::vector<double>(m.row(0).begin(), m.row(0).end()), (std::vector<double>{1, 2, 3}));
    EXPECT_EQ(std::vector<double>(m.row(1).begin(), m.row(1).end()), (std::vector<double>{4, 5, 6}));
    EXPECT_TRUE(warnings.empty());
}

TEST(Reshape, TruncatesOldestWithWarning) {
    psf::Warnings warnings;
    const auto m = psf::reshape_to_cycles(std::vector<double>{1, 2, 3, 4, 5, 6, 7}, 3, &warnings);
    EXPECT_EQ(flatten(m), (std::vector<double>{2, 3, 4, 5, 6, 7}));
    ASSERT_EQ(warnings.size(), 1u);
    EXPECT_NE(warnings[0].find("not a multiple"), std::string::npos);
}

TEST(Reshape, InsufficientData) {
    try {
        psf::reshape_to_cycles(std::vector<double>{1, 2, 3, 4, 5}, 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("insufficient data"), std::string::npos);
    }
}

TEST(Reshape, NottemIsTwentyYears) {
    const psf::TimeSeries series({psf::datasets::nottem.begin(), psf::datasets::nottem.end()}, 12);
    const auto m = psf::reshape_to_cycles(series);
    EXPECT_EQ(m.rows(), 20u);
    EXPECT_EQ(m.cycle(), 12u);
}

TEST(Reshape, FlattenReproducesAlignedInput) {
    std::mt19937_64 gen(7);
    std::uniform_int_distribution<std::size_t> cyc(1, 30);
    std::uniform_real_distribution<double> val(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t cycle = cyc(gen);
        std::uniform_int_distribution<std::size_t> len(2 * cycle, 8 * cycle + cycle - 1);
        std::vector<double> x(len(gen));
        for (double& v : x) {
            v = val(gen);
        }
        const auto m = psf::reshape_to_cycles(x, cycle);
        const std::size_t drop = x.size() % cycle;
        EXPECT_EQ(flatten(m), std::vector<double>(x.begin() + static_cast<std::ptrdiff_t>(drop), x.end()));
    }
}

TEST(TimeSeries, Invariants) {
    EXPECT_THROW(psf::TimeSeries({1, 2, 3}, 2), Error);
    EXPECT_THROW(psf::TimeSeries({1, 2, 3, 4}, 0), Error);
    EXPECT_THROW(psf::TimeSeries({1, NAN, 3, 4}, 2), Error);
    const psf::TimeSeries ok({1, 2, 3, 4}, 2);
    EXPECT_EQ(ok.whole_cycles(), 2u);
}

TEST(CycleMatrix, AppendRowChecksLength) {
    CycleMatrix m(std::vector<double>{1, 2}, 2);
    m.append_row(std::vector<double>{3, 4});
    EXPECT_EQ(m.rows(), 2u);
    EXPECT_THROW(m.append_row(std::vector<double>{1}), Error);
}

TEST(Datasets, ReferenceSeriesShape) {
    EXPECT_EQ(psf::datasets::nottem.size(), 240u);
    EXPECT_DOUBLE_EQ(psf::datasets::nottem.front(), 40.6);
    EXPECT_DOUBLE_EQ(psf::datasets::nottem.back(), 37.8);
    EXPECT_EQ(psf::datasets::sunspots.size(), 2820u);
    EXPECT_DOUBLE_EQ(psf::datasets::sunspots.front(), 58.0);
    EXPECT_DOUBLE_EQ(psf::datasets::sunspots.back(), 33.4);
}
