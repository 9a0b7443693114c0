#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "blockage/random.hpp"

using blockage::Rng;

TEST(Mix, KnownSplitMixOutputs) {
    // First outputs of the reference SplitMix64 generator seeded with 0:
    // each is mix64 of the running state k * golden gamma.
    EXPECT_EQ(blockage::mix64(0), 0xE220A8397B1DCDAFULL);
    EXPECT_EQ(blockage::mix64(0x9E3779B97F4A7C15ULL), 0x6E789E6AA1B965F4ULL);
    EXPECT_NE(blockage::stream_seed(1, 0), blockage::stream_seed(1, 1));
    EXPECT_NE(blockage::stream_seed(1, 0), blockage::stream_seed(2, 0));
}

TEST(Rng, Mt19937ReferenceValue) {
    // 10000th output of a default-constructed mt19937_64, fixed by the standard.
    Rng rng(5489u);
    std::uint64_t x = 0;
    for (int i = 0; i < 10000; ++i) x = rng.next_u64();
    EXPECT_EQ(x, 9981545732273789042ULL);
}

TEST(Rng, UniformIsOpenUnitInterval) {
    Rng rng(1);
    double sum = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform();
        ASSERT_GT(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
    }
    EXPECT_NEAR(sum / n, 0.5, 3.0 * std::sqrt(1.0 / 12.0 / n));
}

TEST(Rng, SameSeedSameStream) {
    Rng a(42), b(42);
    for (int i = 0; i < 1000; ++i) {
        EXPECT_EQ(a.uniform(), b.uniform());
        EXPECT_EQ(a.poisson(7.5), b.poisson(7.5));
        EXPECT_EQ(a.poisson(3000.0), b.poisson(3000.0));
    }
}

namespace {

void check_poisson_moments(double mean, int n, std::uint64_t seed) {
    Rng rng(seed);
    double sum = 0.0, sumsq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double k = static_cast<double>(rng.poisson(mean));
        sum += k;
        sumsq += k * k;
    }
    const double m = sum / n;
    const double var = sumsq / n - m * m;
    EXPECT_NEAR(m, mean, 3.0 * std::sqrt(mean / n)) << "mean " << mean;
    // variance of the sample variance for Poisson is about (mean + 2 mean^2) / n
    EXPECT_NEAR(var, mean, 4.0 * std::sqrt((mean + 2.0 * mean * mean) / n)) << "mean " << mean;
}

}  // namespace

TEST(Poisson, MomentsAcrossRegimes) {
    check_poisson_moments(0.05, 100000, 1);
    check_poisson_moments(1.0, 100000, 2);
    check_poisson_moments(12.0, 100000, 3);
    check_poisson_moments(29.9, 100000, 4);
    check_poisson_moments(30.0, 100000, 5);
    check_poisson_moments(250.0, 100000, 6);
    check_poisson_moments(1e5, 20000, 7);
}

TEST(Poisson, LargeMeanOverThousandScenes) {
    // E[N] = 1e5; 1000 draws; 3 sigma = 3 sqrt(1e5) / sqrt(1000)
    Rng rng(2024);
    double sum = 0.0;
    for (int i = 0; i < 1000; ++i) sum += static_cast<double>(rng.poisson(1e5));
    EXPECT_NEAR(sum / 1000.0, 1e5, 3.0 * std::sqrt(1e5) / std::sqrt(1000.0));
}

TEST(Poisson, SmallMeanPmf) {
    Rng rng(9);
    const int n = 200000;
    std::vector<int> counts(8, 0);
    for (int i = 0; i < n; ++i) {
        const auto k = rng.poisson(2.0);
        if (k < counts.size()) ++counts[k];
    }
    double pk = std::exp(-2.0);
    for (std::size_t k = 0; k < counts.size(); ++k) {
        const double expected = n * pk;
        EXPECT_NEAR(counts[k], expected, 4.0 * std::sqrt(expected) + 1.0) << k;
        pk *= 2.0 / static_cast<double>(k + 1);
    }
}

TEST(Poisson, EdgeMeans) {
    Rng rng(0);
    EXPECT_EQ(rng.poisson(0.0), 0u);
    EXPECT_THROW(rng.poisson(-1.0), std::invalid_argument);
    EXPECT_THROW(rng.poisson(std::nan("")), std::invalid_argument);
    EXPECT_THROW(rng.poisson(INFINITY), std::invalid_argument);
    EXPECT_EQ(rng.poisson(1e-300), 0u);
}
