#include <gtest/gtest.h>

#include "densek/densek.hpp"
#include "test_support.hpp"

using namespace densek;

TEST(ExactSolve, CompleteGraphTriangle) {
    auto r = exact_solve(complete_graph(4), 3, ProblemKind::exactly_k);
    EXPECT_EQ(r.vertices, (VertexSet{0, 1, 2}));
    EXPECT_DOUBLE_EQ(r.average_degree, 2.0);
}

TEST(ExactSolve, AtLeastKIgnoresIsolatedVertices) {
    auto g = disjoint_union(complete_graph(4), Graph(2, {}));
    auto r = exact_solve(g, 4, ProblemKind::at_least_k);
    EXPECT_EQ(r.vertices, (VertexSet{0, 1, 2, 3}));
    EXPECT_DOUBLE_EQ(r.average_degree, 3.0);
}

TEST(ExactSolve, PetersenFiveSubsets) {
    auto p = petersen_graph();
    // Independent enumeration of all C(10,5) = 252 subsets.
    std::int64_t best = 0;
    int subsets = 0;
    for (std::uint32_t mask = 0; mask < 1024; ++mask) {
        if (std::popcount(mask) != 5) continue;
        ++subsets;
        std::int64_t e = 0;
        for (const auto& ed : p.edges()) e += ((mask >> ed.u) & 1) && ((mask >> ed.v) & 1);
        best = std::max(best, e);
    }
    EXPECT_EQ(subsets, 252);
    EXPECT_EQ(best, 5);
    auto r = exact_solve(p, 5, ProblemKind::exactly_k);
    EXPECT_EQ(r.edge_count, best);
    EXPECT_DOUBLE_EQ(r.average_degree, 2.0);
}

TEST(ExactSolve, AtMostKOnEdgelessReturnsEmptySet) {
    auto r = exact_solve(Graph(4, {}), 2, ProblemKind::at_most_k);
    EXPECT_TRUE(r.vertices.empty());
    EXPECT_EQ(r.average_degree, 0.0);
}

TEST(ExactSolve, RefusesAboveCap) {
    Graph big(25, {});
    EXPECT_THROW(exact_solve(big, 3, ProblemKind::exactly_k), CapacityError);
    EXPECT_THROW(exact_solve(complete_graph(8), 3, ProblemKind::exactly_k, 6), CapacityError);
    EXPECT_THROW(exact_solve(complete_graph(4), 0, ProblemKind::exactly_k), InputError);
    EXPECT_THROW(exact_solve(complete_graph(4), 5, ProblemKind::exactly_k), InputError);
}

TEST(ExactSolve, MatchesNaiveEnumerationIncludingTieBreak) {
    SplitRng rng(2024);
    for (int t = 0; t < 60; ++t) {
        auto g = test_support::random_graph(rng, 1, 10);
        for (std::size_t k = 1; k <= static_cast<std::size_t>(g.n()); ++k)
            for (auto kind : {ProblemKind::exactly_k, ProblemKind::at_least_k, ProblemKind::at_most_k}) {
                auto fast = exact_solve(g, k, kind);
                auto slow = test_support::naive_optimum(g, k, kind);
                ASSERT_EQ(fast.vertices, slow.vertices) << "k=" << k << " kind=" << to_string(kind);
                EXPECT_TRUE(size_allowed(kind, fast.size(), k));
            }
    }
}

TEST(ExactSolve, AtMostKMonotoneAndDominatesSmallerExactSizes) {
    SplitRng rng(7);
    for (int t = 0; t < 40; ++t) {
        auto g = test_support::random_graph(rng, 2, 11);
        double prev = -1;
        for (std::size_t k = 1; k <= static_cast<std::size_t>(g.n()); ++k) {
            auto am = exact_solve(g, k, ProblemKind::at_most_k);
            EXPECT_GE(am.average_degree, prev);
            prev = am.average_degree;
            for (std::size_t j = 1; j <= k; ++j)
                EXPECT_GE(am.average_degree,
                          exact_solve(g, j, ProblemKind::exactly_k).average_degree);
        }
    }
}

TEST(WalkCount, CompleteGraphClosedForm) {
    // Eigenvalues of J - I on 4 vertices: 3 (once) and -1 (thrice), so
    // off-diagonal walks of length l number (3^l - (-1)^l) / 4.
    auto w = walk_count_matrix(complete_graph(4), 5);
    for (Vertex u = 0; u < 4; ++u)
        for (Vertex v = 0; v < 4; ++v) {
            if (u == v) {
                EXPECT_TRUE(w(u, v) == 60) << to_string(w(u, v));
            } else {
                EXPECT_TRUE(w(u, v) == 61) << to_string(w(u, v));
            }
        }
}

TEST(WalkCount, RepeatedMultiplyCrossCheck) {
    SplitRng rng(31);
    for (int t = 0; t < 20; ++t) {
        auto g = test_support::random_graph(rng, 2, 9);
        const auto n = static_cast<std::size_t>(g.n());
        std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(n, 0)), p = a;
        for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
        p = a;
        for (int l = 1; l <= 4; ++l) {
            auto w = walk_count_matrix(g, l);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    ASSERT_TRUE(w(static_cast<Vertex>(i), static_cast<Vertex>(j)) == p[i][j]);
            std::vector<std::vector<std::uint64_t>> q(n, std::vector<std::uint64_t>(n, 0));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t j = 0; j < n; ++j) q[i][j] += p[i][k] * a[k][j];
            p = q;
        }
    }
}

TEST(WalkCount, LengthOneIsAdjacencyAndPathTwoWalk) {
    auto g = path_graph(3);
    auto w1 = walk_count_matrix(g, 1);
    for (Vertex u = 0; u < 3; ++u)
        for (Vertex v = 0; v < 3; ++v) EXPECT_TRUE(w1(u, v) == (g.has_edge(u, v) ? 1u : 0u));
    EXPECT_TRUE(walk_count_matrix(g, 2)(0, 2) == 1);
    EXPECT_THROW(walk_count_matrix(g, 0), InputError);
}

TEST(WalkCount, OverflowIsAnError) {
    // 3^l exceeds 2^128 by l = 81 on K_4.
    EXPECT_NO_THROW(walk_count_matrix(complete_graph(4), 60));
    EXPECT_THROW(walk_count_matrix(complete_graph(4), 90), OverflowError);
}

TEST(WalkCount, MaxWalkCountBoundOnRandomConnectedGraphs) {
    SplitRng rng(58);
    for (int t = 0; t < 50; ++t) {
        auto h = test_support::random_connected_graph(rng, 2, 12);
        const auto k = static_cast<__int128>(h.n());
        const auto twice_m = static_cast<__int128>(2 * h.m());
        for (int l : {2, 3, 5}) {
            auto w = walk_count_matrix(h, l);
            WalkCount best = 0;
            for (Vertex u = 0; u < h.n(); ++u)
                for (Vertex v = 0; v < h.n(); ++v) best = std::max(best, w(u, v));
            // best >= d^l / k with d = 2m/k, i.e. best * k^(l+1) >= (2m)^l.
            __int128 lhs = static_cast<__int128>(best), rhs = 1;
            for (int i = 0; i <= l; ++i) lhs *= k;
            for (int i = 0; i < l; ++i) rhs *= twice_m;
            EXPECT_GE(lhs, rhs);
        }
    }
}

TEST(BruteQuasiDensity, Examples) {
    auto k4 = complete_graph(4);
    auto a = brute_quasi_density(k4, Rational(1));
    EXPECT_EQ(a.vertices, (VertexSet{0, 1, 2, 3}));
    EXPECT_EQ(a.value, Rational(2));
    auto b = brute_quasi_density(k4, Rational(2));
    EXPECT_TRUE(b.vertices.empty());
    EXPECT_EQ(b.value, Rational(0));
    auto c = brute_quasi_density(Graph(5, {}), Rational(1, 3));
    EXPECT_TRUE(c.vertices.empty());
    EXPECT_EQ(c.value, Rational(0));
    EXPECT_THROW(brute_quasi_density(Graph(30, {}), Rational(1)), CapacityError);
}

TEST(Rational, ArithmeticAndOrdering) {
    Rational a(1, 2), b(1, 3);
    EXPECT_EQ(a + b, Rational(5, 6));
    EXPECT_EQ(a - b, Rational(1, 6));
    EXPECT_EQ(a * b, Rational(1, 6));
    EXPECT_EQ(a / b, Rational(3, 2));
    EXPECT_LT(b, a);
    EXPECT_EQ(Rational(4, -8), Rational(-1, 2));
    EXPECT_THROW(Rational(1, 0), InputError);
    EXPECT_THROW(Rational(INT64_MAX) + Rational(1), OverflowError);
}
