#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "lexigrid/infometrics.hpp"
#include "lexigrid/reference_data.hpp"

using namespace lexigrid;

TEST(Entropy, UniformIsLogN) {
    for (std::size_t n = 1; n <= 40; ++n) {
        const std::vector<std::uint64_t> w(n, 7);
        EXPECT_NEAR(entropy_bits(w), std::log2(static_cast<double>(n)), 1e-12);
        EXPECT_NEAR(informational_energy(w), 1.0 / static_cast<double>(n), 1e-12);
    }
}

TEST(Entropy, Examples) {
    const std::vector<std::uint64_t> half{1, 1};
    EXPECT_DOUBLE_EQ(entropy_bits(half), 1.0);
    EXPECT_DOUBLE_EQ(informational_energy(half), 0.5);
    const std::vector<std::uint64_t> point{0, 5, 0};
    EXPECT_DOUBLE_EQ(entropy_bits(point), 0.0);
    EXPECT_DOUBLE_EQ(informational_energy(point), 1.0);
}

TEST(Entropy, EmptyInput) {
    const std::vector<std::uint64_t> none{0, 0};
    try {
        entropy_bits(none);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::empty_input);
    }
    EXPECT_THROW(informational_energy(std::span<const std::uint64_t>{}), Error);
}

TEST(Entropy, BoundsAndZeroPadding) {
    std::mt19937 rng(3);
    for (int iter = 0; iter < 500; ++iter) {
        const std::size_t n = 1 + rng() % 31;
        std::vector<std::uint64_t> w(n);
        for (auto& x : w) x = rng() % 50;
        w[rng() % n] += 1;
        const double h = entropy_bits(w);
        const double e = informational_energy(w);
        ASSERT_GE(h, -1e-12);
        ASSERT_LE(h, std::log2(static_cast<double>(n)) + 1e-9);
        ASSERT_GE(e, 1.0 / static_cast<double>(n) - 1e-12);
        ASSERT_LE(e, 1.0 + 1e-12);
        ASSERT_GE(h, -std::log2(e) - 1e-9); // Shannon entropy bounds collision entropy
        auto padded = w;
        padded.insert(padded.end(), rng() % 5, 0);
        ASSERT_DOUBLE_EQ(entropy_bits(padded), h);
        ASSERT_DOUBLE_EQ(informational_energy(padded), e);
    }
}

TEST(Entropy, PublishedTables) {
    const auto grid = letter_table(get_table("GRID_LETTER_FREQ"));
    const auto clue = letter_table(get_table("CLUE_LETTER_FREQ"));
    const auto poetry = letter_table(get_table("POETRY_LETTER_FREQ"));
    EXPECT_NEAR(entropy_bits(grid), 3.865, 0.01);
    EXPECT_NEAR(informational_energy(grid), 0.084, 0.002);
    EXPECT_NEAR(entropy_bits(clue), 4.226, 0.01);
    EXPECT_NEAR(informational_energy(clue), 0.062, 0.002);
    EXPECT_NEAR(entropy_bits(poetry), 4.222, 0.01);
    EXPECT_NEAR(informational_energy(poetry), 0.064, 0.002);
}
