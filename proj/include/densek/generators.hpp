#ifndef DENSEK_GENERATORS_HPP
#define DENSEK_GENERATORS_HPP

#include <vector>

#include "densek/graph.hpp"
#include "densek/rng.hpp"

namespace densek {

inline Graph complete_graph(Vertex n) {
    std::vector<Edge> e;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) e.push_back({a, b});
    return Graph(n, std::move(e));
}

inline Graph path_graph(Vertex n) {
    std::vector<Edge> e;
    for (Vertex a = 0; a + 1 < n; ++a) e.push_back({a, a + 1});
    return Graph(n, std::move(e));
}

inline Graph cycle_graph(Vertex n) {
    std::vector<Edge> e;
    for (Vertex a = 0; a < n; ++a) e.push_back({a, (a + 1) % n});
    return Graph(n, std::move(e));
}

/// Hub 0 joined to leaves 1..leaves.
inline Graph star_graph(Vertex leaves) {
    std::vector<Edge> e;
    for (Vertex a = 1; a <= leaves; ++a) e.push_back({0, a});
    return Graph(leaves + 1, std::move(e));
}

/// Sides 0..a-1 and a..a+b-1.
inline Graph complete_bipartite(Vertex a, Vertex b) {
    std::vector<Edge> e;
    for (Vertex x = 0; x < a; ++x)
        for (Vertex y = a; y < a + b; ++y) e.push_back({x, y});
    return Graph(a + b, std::move(e));
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen_graph() {
    std::vector<Edge> e;
    for (Vertex i = 0; i < 5; ++i) {
        e.push_back({i, (i + 1) % 5});
        e.push_back({static_cast<Vertex>(5 + i), static_cast<Vertex>(5 + (i + 2) % 5)});
        e.push_back({i, static_cast<Vertex>(5 + i)});
    }
    return Graph(10, std::move(e));
}

/// Vertices of `b` shifted past those of `a`.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> e = a.edges();
    for (const auto& x : b.edges()) e.push_back({x.u + a.n(), x.v + a.n()});
    return Graph(a.n() + b.n(), std::move(e));
}

/// Erdos-Renyi G(n, p); pairs are visited in lexicographic order with one
/// draw each.
inline Graph gnp_graph(Vertex n, double p, std::uint64_t seed) {
    if (n < 0) throw InputError("negative vertex count");
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
    SplitRng rng = SplitRng(seed).split(stream_key("gnp"));
    std::vector<Edge> e;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (rng.bernoulli(p)) e.push_back({a, b});
    return Graph(n, std::move(e));
}

}  // namespace densek

#endif
