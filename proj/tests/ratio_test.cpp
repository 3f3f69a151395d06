#include <gtest/gtest.h>

#include "densek/densek.hpp"

using namespace densek;

namespace {

// Plain triple loop over the lattice, written independently of the library.
double naive_max_min(double delta, const AlgorithmSet& set, long* points = nullptr) {
    const int steps = static_cast<int>(std::lround(1.0 / delta));
    double best = -1e300;
    long count = 0;
    for (int i = 0; i <= steps; ++i)
        for (int j = i; j <= steps; ++j)
            for (int l = i; l <= steps; ++l) {
                ++count;
                ExponentPoint p{i * delta, l * delta, j * delta};
                double lo = 1e300;
                for (Algo a : set.members())
                    if (auto e = ratio_exponent(a, p)) lo = std::min(lo, *e);
                if (lo < 1e299) best = std::max(best, lo);
            }
    if (points) *points = count;
    return best;
}

}  // namespace

TEST(RatioExponent, A1IsIdentityInG) {
    for (double g : {0.0, 0.2, 0.5, 1.0})
        EXPECT_DOUBLE_EQ(*ratio_exponent(Algo::a1, {g, 0.7, 0.9}), g);
}

TEST(RatioExponent, BalancedRegionPoint) {
    ExponentPoint p{1.0 / 3, 1.0 / 3, 2.0 / 3};
    EXPECT_NEAR(*combined_exponent({Algo::a1, Algo::a2, Algo::a3}, p), 1.0 / 3, 1e-12);
}

TEST(RatioExponent, LpRegionPoint) {
    ExponentPoint p{1.0 / 3, 2.0 / 3, 1.0 / 3};
    EXPECT_NEAR(*ratio_exponent(Algo::a6, p), 2.0 / 9, 1e-12);
    EXPECT_NEAR(*ratio_exponent(Algo::a5, p), 0.2667, 1e-4);
}

TEST(RatioExponent, A5UndefinedOutsideItsRegimes) {
    EXPECT_FALSE(ratio_exponent(Algo::a5, {0.1, 0.3, 0.3}).has_value());  // K == d
    EXPECT_TRUE(ratio_exponent(Algo::a5, {0.1, 0.5, 0.3}).has_value());   // d < K < 2d
    EXPECT_FALSE(combined_exponent({Algo::a5}, {0.1, 0.2, 0.5}).has_value());
}

TEST(ErrorBound, Examples) {
    EXPECT_NEAR(error_bound(0.00001), 13.0 / 3 * 0.00001, 1e-18);
    // 0.0000433 is this value cut to seven decimals.
    EXPECT_EQ(std::floor(error_bound(0.00001) * 1e7), 433.0);
    EXPECT_NEAR(error_bound(0.001), 0.0043333333, 1e-9);
    EXPECT_EQ(error_bound(0.0), 0.0);
    EXPECT_THROW(error_bound(-1.0), InputError);
}

TEST(AlgorithmSet, Parse) {
    EXPECT_EQ(AlgorithmSet::parse("fkp5"), AlgorithmSet::fkp5());
    EXPECT_EQ(AlgorithmSet::parse("a6combo"), AlgorithmSet::a6combo());
    EXPECT_EQ(AlgorithmSet::parse("custom:a1,a3"), (AlgorithmSet{Algo::a1, Algo::a3}));
    EXPECT_THROW(AlgorithmSet::parse("custom:"), InputError);
    EXPECT_THROW(AlgorithmSet::parse("custom:a7"), InputError);
    EXPECT_THROW(AlgorithmSet::parse("all"), InputError);
}

TEST(GridMaxMin, QuarterStepA1Only) {
    auto r = grid_max_min(0.25, {Algo::a1});
    EXPECT_DOUBLE_EQ(r.max_exponent, 1.0);
    EXPECT_DOUBLE_EQ(r.argmax.g, 1.0);
}

TEST(GridMaxMin, QuarterStepFirstThreeAlgorithms) {
    AlgorithmSet set{Algo::a1, Algo::a2, Algo::a3};
    long points = 0;
    const double naive = naive_max_min(0.25, set, &points);
    auto r = grid_max_min(0.25, set);
    EXPECT_EQ(points, 55);
    EXPECT_EQ(r.evaluations, 55u);
    EXPECT_DOUBLE_EQ(r.max_exponent, naive);
    // Frozen: 1/3 is not a lattice coordinate at this step.
    EXPECT_DOUBLE_EQ(r.max_exponent, 0.25);
}

TEST(GridMaxMin, MatchesNaiveLoopOnCoarseGrids) {
    for (double delta : {0.25, 0.1, 0.05, 0.02}) {
        for (const auto& set : {AlgorithmSet::fkp5(), AlgorithmSet::a6combo(),
                                AlgorithmSet{Algo::a2, Algo::a5}}) {
            auto r = grid_max_min(delta, set);
            EXPECT_NEAR(r.max_exponent, naive_max_min(delta, set), 1e-12) << delta;
            auto at = combined_exponent(set, r.argmax);
            ASSERT_TRUE(at.has_value());
            EXPECT_DOUBLE_EQ(*at, r.max_exponent);
        }
    }
}

TEST(GridMaxMin, ThreadCountDoesNotChangeResult) {
    auto one = grid_max_min(0.01, AlgorithmSet::fkp5(), 1);
    for (unsigned t : {2u, 3u, 8u}) {
        auto many = grid_max_min(0.01, AlgorithmSet::fkp5(), t);
        EXPECT_EQ(many.max_exponent, one.max_exponent);
        EXPECT_EQ(many.argmax.g, one.argmax.g);
        EXPECT_EQ(many.argmax.K, one.argmax.K);
        EXPECT_EQ(many.argmax.d, one.argmax.d);
        EXPECT_EQ(many.evaluations, one.evaluations);
    }
}

TEST(GridMaxMin, AddingAnAlgorithmNeverRaisesTheMax) {
    auto base = grid_max_min(0.02, {Algo::a1, Algo::a2, Algo::a3, Algo::a4});
    EXPECT_LE(grid_max_min(0.02, AlgorithmSet::fkp5()).max_exponent, base.max_exponent);
    EXPECT_LE(grid_max_min(0.02, AlgorithmSet::a6combo()).max_exponent, base.max_exponent);
}

TEST(GridMaxMin, RejectsBadStep) {
    EXPECT_THROW(grid_max_min(0.0, AlgorithmSet::fkp5()), InputError);
    EXPECT_THROW(grid_max_min(0.3, AlgorithmSet::fkp5()), InputError);
    EXPECT_THROW(grid_max_min(0.1, AlgorithmSet{}), InputError);
}
