#include <gtest/gtest.h>

#include "densek/densek.hpp"
#include "test_support.hpp"

using namespace densek;

namespace {

struct BruteCut {
    std::int64_t value;
    std::vector<int> source_side;  // smallest minimum cut
};

// Enumerates every s-t partition; infinite arcs forbid crossing.
BruteCut brute_min_cut(const FlowNetwork<std::int64_t>& net) {
    std::vector<int> inner;
    for (int v = 0; v < net.nodes(); ++v)
        if (v != net.source() && v != net.sink()) inner.push_back(v);
    BruteCut best{std::numeric_limits<std::int64_t>::max(), {}};
    for (std::uint32_t mask = 0; mask < (1u << inner.size()); ++mask) {
        std::vector<char> side(static_cast<std::size_t>(net.nodes()), 0);
        side[net.source()] = 1;
        for (std::size_t i = 0; i < inner.size(); ++i)
            if ((mask >> i) & 1) side[inner[i]] = 1;
        std::int64_t cut = 0;
        bool blocked = false;
        for (const auto& a : net.arcs()) {
            if (side[a.from] && !side[a.to]) {
                if (a.infinite) blocked = true;
                else cut += a.capacity;
            }
        }
        if (blocked) continue;
        std::vector<int> s;
        for (int v = 0; v < net.nodes(); ++v)
            if (side[v]) s.push_back(v);
        if (cut < best.value || (cut == best.value && s.size() < best.source_side.size())) {
            best.value = cut;
            best.source_side = s;
        }
    }
    return best;
}

}  // namespace

TEST(MaxFlow, SingleArc) {
    FlowNetwork<std::int64_t> net(2, 0, 1);
    net.add_arc(0, 1, 5);
    auto r = max_flow(net);
    EXPECT_EQ(r.value, 5);
    EXPECT_EQ(r.source_side, (std::vector<int>{0}));
}

TEST(MaxFlow, ParallelPaths) {
    FlowNetwork<std::int64_t> net(4, 0, 3);
    net.add_arc(0, 1, 3);
    net.add_arc(1, 3, 3);
    net.add_arc(0, 2, 4);
    net.add_arc(2, 3, 4);
    EXPECT_EQ(max_flow(net).value, 7);
}

TEST(MaxFlow, RationalCapacities) {
    FlowNetwork<Rational> net(3, 0, 2);
    net.add_arc(0, 1, Rational(1, 3));
    net.add_arc(1, 2, Rational(1, 2));
    net.add_arc(0, 2, Rational(1, 6));
    EXPECT_EQ(max_flow(net).value, Rational(1, 2));
}

TEST(MaxFlow, InfinitePathThrows) {
    FlowNetwork<std::int64_t> net(3, 0, 2);
    net.add_infinite_arc(0, 1);
    net.add_infinite_arc(1, 2);
    EXPECT_THROW(max_flow(net), InputError);
    EXPECT_THROW(net.add_arc(0, 1, -1), InputError);
    EXPECT_THROW(FlowNetwork<std::int64_t>(2, 0, 0), InputError);
}

TEST(MaxFlow, MatchesBruteForceCutEnumeration) {
    SplitRng rng(404);
    for (int t = 0; t < 300; ++t) {
        const int nodes = 2 + static_cast<int>(rng() % 9);  // up to 10
        FlowNetwork<std::int64_t> net(nodes, 0, nodes - 1);
        for (int a = 0; a < nodes; ++a)
            for (int b = 0; b < nodes; ++b) {
                if (a == b || !rng.bernoulli(0.4)) continue;
                if (rng.bernoulli(0.1) && a != 0 && b != nodes - 1) net.add_infinite_arc(a, b);
                else net.add_arc(a, b, static_cast<std::int64_t>(rng() % 10));
            }
        auto brute = brute_min_cut(net);
        if (brute.value == std::numeric_limits<std::int64_t>::max()) continue;
        auto r = max_flow(net);
        ASSERT_EQ(r.value, brute.value) << "trial " << t;
        EXPECT_EQ(r.source_side, brute.source_side) << "trial " << t;
    }
}

TEST(MaxQuasiDensity, Examples) {
    auto k4 = max_quasi_density(complete_graph(4), Rational(1));
    EXPECT_EQ(k4.vertices, (VertexSet{0, 1, 2, 3}));
    EXPECT_EQ(k4.value, Rational(2));
    auto tri = max_quasi_density(complete_graph(3), Rational(1, 2));
    EXPECT_EQ(tri.vertices, (VertexSet{0, 1, 2}));
    EXPECT_EQ(tri.value, Rational(3, 2));
    auto empty = max_quasi_density(Graph(4, {}), Rational(1));
    EXPECT_TRUE(empty.vertices.empty());
    EXPECT_EQ(empty.value, Rational(0));
    EXPECT_THROW(max_quasi_density(complete_graph(3), Rational(0)), InputError);
}

TEST(MaxQuasiDensity, MatchesBruteForce) {
    SplitRng rng(77);
    for (int t = 0; t < 200; ++t) {
        auto g = test_support::random_graph(rng, 1, 12);
        Rational q(1 + static_cast<std::int64_t>(rng() % 12), 1 + static_cast<std::int64_t>(rng() % 6));
        auto fast = max_quasi_density(g, q);
        auto slow = brute_quasi_density(g, q);
        ASSERT_EQ(fast.value, slow.value) << "q=" << q.to_string();
        EXPECT_EQ(fast.vertices, slow.vertices) << "q=" << q.to_string();
    }
}

TEST(Dalks, Examples) {
    auto g = disjoint_union(complete_graph(4), Graph(2, {}));
    auto r = dalks_2approx(g, 4);
    EXPECT_GE(r.result.average_degree, 1.5);
    EXPECT_GE(r.result.size(), 4u);
    EXPECT_EQ(r.mode, GuessMode::exact);

    auto k5 = dalks_2approx(complete_graph(5), 5);
    EXPECT_EQ(k5.result.vertices, (VertexSet{0, 1, 2, 3, 4}));
    EXPECT_DOUBLE_EQ(k5.result.average_degree, 4.0);

    auto pet = dalks_2approx(petersen_graph(), 10);
    EXPECT_EQ(pet.result.size(), 10u);
    EXPECT_DOUBLE_EQ(pet.result.average_degree, 3.0);
    EXPECT_THROW(dalks_2approx(complete_graph(3), 4), InputError);
}

TEST(Dalks, HalfOfOptimumInExactModeAndQuarterInLadderMode) {
    SplitRng rng(2718);
    for (int t = 0; t < 60; ++t) {
        auto g = test_support::random_graph(rng, 1, 10);
        for (std::size_t k = 1; k <= static_cast<std::size_t>(g.n()); ++k) {
            auto opt = exact_solve(g, k, ProblemKind::at_least_k);
            auto exact = dalks_2approx(g, k);
            ASSERT_EQ(exact.mode, GuessMode::exact);
            EXPECT_GE(exact.result.size(), k);
            EXPECT_TRUE(test_support::density_at_least_fraction(exact.result, opt, 1, 2));
            DalksOptions ladder_opt;
            ladder_opt.force_ladder = true;
            auto ladder = dalks_2approx(g, k, ladder_opt);
            EXPECT_EQ(ladder.guarantee_factor, 4);
            EXPECT_GE(ladder.result.size(), k);
            EXPECT_TRUE(test_support::density_at_least_fraction(ladder.result, opt, 1, 4));
        }
    }
}

TEST(Dalks, GuessSets) {
    auto g = complete_graph(3);
    auto exact = dalks_guesses(g, 2, GuessMode::exact);
    // 2a/b for a in 1..3, b in 2..3
    std::set<Rational> expect{Rational(1), Rational(2), Rational(3), Rational(2, 3), Rational(4, 3)};
    EXPECT_EQ(exact, expect);
    auto ladder = dalks_guesses(g, 2, GuessMode::ladder);
    EXPECT_EQ(ladder, (std::set<Rational>{Rational(1), Rational(2), Rational(4)}));
}
