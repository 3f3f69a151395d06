#include <gtest/gtest.h>

#include "densek/densek.hpp"
#include "test_support.hpp"

using namespace densek;

namespace {

// W * k(k-1) <= kept * |U|(|U|-1), all integers.
bool fixing_bound_holds(std::int64_t kept, std::int64_t total, std::size_t k, std::size_t u) {
    const auto lhs = static_cast<__int128>(total) * static_cast<__int128>(k * (k - 1));
    const auto rhs = static_cast<__int128>(kept) * static_cast<__int128>(u * (u - 1));
    return rhs >= lhs;
}

}  // namespace

TEST(FixingTrim, Examples) {
    auto k4 = complete_graph(4);
    auto t = fixing_trim(k4, {0, 1, 2, 3}, 3);
    EXPECT_EQ(t.size(), 3u);
    EXPECT_EQ(induced_weight(k4, t), 3);
    EXPECT_TRUE(fixing_bound_holds(3, 6, 3, 4));

    auto star = star_graph(5);
    auto s = fixing_trim(star, {0, 1, 2, 3, 4, 5}, 3);
    EXPECT_EQ(s, (VertexSet{0, 4, 5}));
    EXPECT_EQ(induced_weight(star, s), 2);
    EXPECT_TRUE(fixing_bound_holds(2, 5, 3, 6));

    EXPECT_THROW(fixing_trim(k4, {0, 1}, 2), InputError);
    EXPECT_THROW(fixing_trim(k4, {0, 1}, 0), InputError);
}

TEST(FixingTrim, BoundHoldsOnRandomUnitAndWeightedInstances) {
    SplitRng rng(606);
    for (int t = 0; t < 300; ++t) {
        auto g = test_support::random_graph(rng, 2, 14);
        VertexSet u;
        for (Vertex v = 0; v < g.n(); ++v)
            if (rng.bernoulli(0.7)) u.push_back(v);
        if (u.size() < 2) continue;
        const std::size_t k = 1 + rng() % (u.size() - 1);
        std::vector<std::int64_t> w(g.m());
        for (auto& x : w) x = 1 + static_cast<std::int64_t>(rng() % 9);
        auto total = induced_weight<std::int64_t>(g, u, w);
        auto kept_set = fixing_trim<std::int64_t>(g, u, k, w);
        ASSERT_EQ(kept_set.size(), k);
        EXPECT_TRUE(std::includes(u.begin(), u.end(), kept_set.begin(), kept_set.end()));
        EXPECT_TRUE(fixing_bound_holds(induced_weight<std::int64_t>(g, kept_set, w), total, k, u.size()));

        auto unit = fixing_trim(g, u, k);
        EXPECT_TRUE(fixing_bound_holds(induced_weight(g, unit), induced_weight(g, u), k, u.size()));
    }
}

TEST(FixingTrim, RationalWeights) {
    auto g = complete_graph(5);
    std::vector<Rational> w;
    for (std::size_t i = 0; i < g.m(); ++i) w.emplace_back(static_cast<std::int64_t>(i + 1), 3);
    VertexSet all{0, 1, 2, 3, 4};
    auto total = induced_weight<Rational>(g, all, w);
    auto kept = fixing_trim<Rational>(g, all, 3, w);
    EXPECT_GE(induced_weight<Rational>(g, kept, w) * Rational(20), total * Rational(6));
    std::vector<Rational> bad(g.m(), Rational(0));
    EXPECT_THROW(fixing_trim<Rational>(g, all, 3, bad), InputError);
}

TEST(DksViaDamks, Examples) {
    auto solver = DamksSolverHandle::exact_oracle();
    auto r = dks_via_damks(complete_graph(4), 3, solver);
    EXPECT_EQ(r.result.size(), 3u);
    EXPECT_DOUBLE_EQ(r.result.average_degree, 2.0);
    EXPECT_EQ(r.guarantee_factor, 8);

    auto hinted = dks_via_damks(complete_graph(4), 3, solver, {.dstar_hint = 2.0, .observer = {}});
    EXPECT_EQ(hinted.guarantee_factor, 4);
    EXPECT_GE(hinted.result.average_degree, 0.5);

    auto empty = dks_via_damks(Graph(5, {}), 3, solver);
    EXPECT_EQ(empty.result.size(), 3u);
    EXPECT_EQ(empty.result.edge_count, 0);
    EXPECT_EQ(empty.solver_calls, dks_guess_ladder(Graph(5, {}), 3).size());
}

TEST(DksViaDamks, RejectsOversizedSolverAnswers) {
    DamksSolverHandle cheat{"cheat", 1.0, [](const Graph& g, std::size_t) {
                                VertexSet all;
                                for (Vertex v = 0; v < g.n(); ++v) all.push_back(v);
                                return induced_stats(g, all);
                            }};
    EXPECT_THROW(dks_via_damks(complete_graph(4), 2, cheat), ContractError);
}

TEST(DksViaDamks, QuarterOfOptimumWithHintAndInvariants) {
    SplitRng rng(4242);
    auto solver = DamksSolverHandle::exact_oracle();
    for (int t = 0; t < 40; ++t) {
        auto g = test_support::random_graph(rng, 1, 9);
        for (std::size_t k = 1; k <= static_cast<std::size_t>(g.n()); ++k) {
            auto opt = exact_solve(g, k, ProblemKind::exactly_k);
            ReductionOptions o;
            o.dstar_hint = opt.average_degree;
            o.observer = [&](const ReductionStep& s) {
                EXPECT_LE(s.collected.size(), 2 * k - 1);
                EXPECT_GE(induced_stats(g, s.collected).edge_count, s.collected_edges);
            };
            auto hinted = dks_via_damks(g, k, solver, o);
            EXPECT_EQ(hinted.result.size(), k);
            EXPECT_TRUE(test_support::density_at_least_fraction(hinted.result, opt, 1, 4));
            auto laddered = dks_via_damks(g, k, solver);
            EXPECT_TRUE(test_support::density_at_least_fraction(laddered.result, opt, 1, 8));
        }
    }
}

TEST(DksGuessLadder, CoversEveryPositiveOptimum) {
    auto g = complete_graph(9);
    for (std::size_t k = 2; k <= 9; ++k) {
        auto ladder = dks_guess_ladder(g, k);
        for (std::size_t a = 1; a <= k * (k - 1) / 2; ++a) {
            double d = 2.0 * static_cast<double>(a) / static_cast<double>(k);
            bool hit = false;
            for (double x : ladder) hit |= (x <= d && 2 * x > d);
            EXPECT_TRUE(hit) << "k=" << k << " d=" << d;
        }
    }
}

TEST(DalksGadget, ConstructionArithmetic) {
    auto [g1, k1] = dalks_gadget(complete_graph(2), 2);
    EXPECT_EQ(g1.n(), 8);
    EXPECT_EQ(g1.m(), 16u);
    EXPECT_EQ(k1, 8u);
    auto [g2, k2] = dalks_gadget(complete_graph(3), 2);
    EXPECT_EQ(g2.n(), 12);
    EXPECT_EQ(g2.m(), 39u);
    EXPECT_EQ(k2, 11u);
}

TEST(DalksGadget, ExactAtLeastKOnGadgetPicksCliqueAndDksOptimum) {
    SplitRng rng(55);
    for (int t = 0; t < 4; ++t) {
        auto g = gnp_graph(5, 0.5, rng());
        const std::size_t k = 1 + rng() % 5;
        auto [gp, kp] = dalks_gadget(g, k);
        auto r = exact_solve(gp, kp, ProblemKind::at_least_k);
        VertexSet inner;
        std::size_t clique = 0;
        for (Vertex v : r.vertices) {
            if (v >= 5) ++clique;
            else inner.push_back(v);
        }
        EXPECT_EQ(clique, 15u);
        auto dks = exact_solve(g, k, ProblemKind::exactly_k);
        ASSERT_EQ(inner.size(), k);
        EXPECT_EQ(induced_stats(g, inner).edge_count, dks.edge_count);
    }
}
