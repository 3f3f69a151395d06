#ifndef DENSEK_FKP_HPP
#define DENSEK_FKP_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iterator>
#include <set>
#include <vector>

#include "densek/error.hpp"
#include "densek/exact.hpp"
#include "densek/graph.hpp"
#include "densek/reduction.hpp"
#include "densek/rng.hpp"

namespace densek {

inline void check_k(const Graph& g, std::size_t k, std::size_t min_k = 1) {
    if (k < min_k || k > static_cast<std::size_t>(g.n()))
        throw InputError("k = " + std::to_string(k) + " out of range [" + std::to_string(min_k) +
                         ", " + std::to_string(g.n()) + "]");
}

/// Tuning knobs for the walk-based procedure. The constants c, c' and the
/// slack epsilon have no fixed values, so they are searched over geometric
/// ladders.
struct FkpParams {
    std::vector<double> epsilon_ladder;
    std::vector<double> dstar_ladder;
    std::uint64_t seed = 0;
    std::size_t max_candidates = 20000;
    std::size_t sample_retries = 32;

    static FkpParams defaults() {
        FkpParams p;
        for (int i = -6; i <= 6; ++i) p.epsilon_ladder.push_back(std::exp2(i));
        for (int i = -1; i <= 6; ++i) p.dstar_ladder.push_back(std::exp2(i));
        return p;
    }

    void validate() const {
        auto ok = [](const std::vector<double>& v) {
            if (v.empty()) return false;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (!(v[i] > 0.0) || !std::isfinite(v[i])) return false;
                if (i > 0 && !(v[i] > v[i - 1])) return false;
            }
            return true;
        };
        if (!ok(epsilon_ladder)) throw InputError("epsilon ladder must be nonempty, positive, increasing");
        if (!ok(dstar_ladder)) throw InputError("d* ladder must be nonempty, positive, increasing");
        if (max_candidates == 0) throw InputError("max_candidates must be positive");
    }
};

/// Greedy maximal matching (edges in sorted order) cut at floor(k/2) edges,
/// padded with the lowest unused ids.
inline SubgraphResult a1_trivial(const Graph& g, std::size_t k) {
    check_k(g, k);
    std::vector<char> used(static_cast<std::size_t>(g.n()), 0);
    VertexSet s;
    std::size_t taken = 0;
    for (const auto& e : g.edges()) {
        if (taken == k / 2) break;
        if (used[e.u] || used[e.v]) continue;
        used[e.u] = used[e.v] = 1;
        s.push_back(e.u);
        s.push_back(e.v);
        ++taken;
    }
    return induced_stats(g, pad_lowest_id(g, std::move(s), k));
}

/// H = ceil(k/2) highest-degree vertices, plus the floor(k/2) outside
/// vertices with the most neighbours in H.
inline SubgraphResult a2_greedy(const Graph& g, std::size_t k) {
    check_k(g, k, 2);
    auto order = degree_order(g);
    const std::size_t h = half_up(k);
    VertexSet s(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(h));
    auto in_h = membership(g, s);
    std::vector<std::pair<std::size_t, Vertex>> rank;
    for (Vertex v = 0; v < g.n(); ++v) {
        if (in_h[v]) continue;
        std::size_t c = 0;
        for (Vertex w : g.neighbors(v)) c += in_h[w];
        rank.push_back({c, v});
    }
    std::stable_sort(rank.begin(), rank.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (std::size_t i = 0; i < k / 2; ++i) s.push_back(rank[i].second);
    return induced_stats(g, std::move(s));
}

/// Densest of the neighbourhood candidates: each vertex with its best-linked
/// neighbours, and each pair with its common neighbours; all padded to k.
inline SubgraphResult a3_neighborhood(const Graph& g, std::size_t k) {
    check_k(g, k);
    SubgraphResult best;
    bool have = false;
    auto offer = [&](VertexSet s) {
        auto cand = induced_stats(g, pad_greedy(g, std::move(s), k));
        if (!have || better_result(cand, best)) best = std::move(cand), have = true;
    };

    std::vector<char> closed(static_cast<std::size_t>(g.n()), 0);
    for (Vertex v = 0; v < g.n(); ++v) {
        auto nb = g.neighbors(v);
        closed[v] = 1;
        for (Vertex w : nb) closed[w] = 1;
        std::vector<std::pair<std::size_t, Vertex>> rank;
        for (Vertex w : nb) {
            std::size_t c = 0;
            for (Vertex x : g.neighbors(w)) c += closed[x];
            rank.push_back({c, w});
        }
        closed[v] = 0;
        for (Vertex w : nb) closed[w] = 0;
        std::stable_sort(rank.begin(), rank.end(),
                         [](const auto& a, const auto& b) { return a.first > b.first; });
        VertexSet s{v};
        for (std::size_t i = 0; i < rank.size() && s.size() < k; ++i) s.push_back(rank[i].second);
        offer(std::move(s));
    }

    if (k >= 2) {
        for (Vertex u = 0; u < g.n(); ++u)
            for (Vertex v = u + 1; v < g.n(); ++v) {
                VertexSet common;
                auto a = g.neighbors(u), b = g.neighbors(v);
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                      std::back_inserter(common));
                if (common.empty()) continue;
                VertexSet s{u, v};
                for (std::size_t i = 0; i < common.size() && s.size() < k; ++i) s.push_back(common[i]);
                offer(std::move(s));
            }
    }
    return best;
}

/// Runs A1-A3 on each edge neighbourhood N(u) u N(v) (at most 2 d_H
/// vertices) and lifts the best answer back, padded with the lowest ids.
inline SubgraphResult a4_composite(const Graph& g, std::size_t k) {
    check_k(g, k);
    if (g.m() == 0) return a1_trivial(g, k);
    SubgraphResult best;
    bool have = false;
    for (const auto& e : g.edges()) {
        VertexSet region;
        auto a = g.neighbors(e.u), b = g.neighbors(e.v);
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(region));
        auto sub = induced_subgraph(g, region);
        const std::size_t kk = std::min(k, region.size());
        std::vector<SubgraphResult> local{a1_trivial(sub.graph, kk), a3_neighborhood(sub.graph, kk)};
        if (kk >= 2) local.push_back(a2_greedy(sub.graph, kk));
        for (const auto& r : local) {
            auto cand = induced_stats(g, pad_lowest_id(g, sub.lift(r.vertices), k));
            if (!have || better_result(cand, best)) best = std::move(cand), have = true;
        }
    }
    return best;
}

/// Vertices at positions 1..4 of length-5 walks from u to v.
struct WalkLayers {
    Vertex u = 0;
    Vertex v = 0;
    std::array<VertexSet, 5> layer;  ///< layer[1..4] used

    const VertexSet& operator[](std::size_t i) const { return layer[i]; }
};

/// Walk matrices W_1..W_5 (index 0 unused).
struct WalkPowers {
    std::array<WalkMatrix, 6> w;

    explicit WalkPowers(const Graph& g) {
        w[1] = adjacency_walks(g);
        for (int i = 2; i <= 5; ++i) w[i] = extend_walks(g, w[i - 1]);
    }
};

inline WalkLayers build_walk_layers(const Graph& g, const WalkPowers& pw, Vertex u, Vertex v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw InputError("walk layers need distinct endpoints");
    WalkLayers out;
    out.u = u;
    out.v = v;
    for (int i = 1; i <= 4; ++i)
        for (Vertex w = 0; w < g.n(); ++w)
            if (pw.w[i](u, w) > 0 && pw.w[5 - i](w, v) > 0) out.layer[i].push_back(w);
    return out;
}

inline WalkLayers build_walk_layers(const Graph& g, Vertex u, Vertex v) {
    return build_walk_layers(g, WalkPowers(g), u, v);
}

namespace detail {

inline VertexSet set_union_of(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet neighbors_within(const Graph& g, Vertex w, const VertexSet& s) {
    VertexSet out;
    auto nb = g.neighbors(w);
    std::set_intersection(nb.begin(), nb.end(), s.begin(), s.end(), std::back_inserter(out));
    return out;
}

}  // namespace detail

/// Candidate families of the walk procedure, exposed for inspection.
struct A5Report {
    SubgraphResult result;
    bool fell_back = false;
    Vertex u = -1;
    Vertex v = -1;
    std::size_t candidates = 0;
    std::size_t max_neighbourhood_candidate = 0;  ///< largest type (c) set before trimming
};

/// Length-5 walk procedure. Picks the pair (u, v) with the most 5-walks and
/// evaluates: N2 u N3; random samples of N2 u N3; neighbourhood sets around
/// walk-heavy middle vertices; and the good-vertex sets for every (epsilon,
/// d*) ladder combination and both case thresholds. Sets over k vertices are
/// Fixing-trimmed. Falls back to A1 when no 5-walk joins distinct vertices.
inline A5Report a5_walks_report(const Graph& g, std::size_t k, const FkpParams& params) {
    check_k(g, k);
    params.validate();
    A5Report rep;

    WalkPowers pw(g);
    WalkCount top = 0;
    for (Vertex a = 0; a < g.n(); ++a)
        for (Vertex b = 0; b < g.n(); ++b)
            if (a != b && pw.w[5](a, b) > top) top = pw.w[5](a, b), rep.u = a, rep.v = b;
    if (top == 0) {
        rep.result = a1_trivial(g, k);
        rep.fell_back = true;
        return rep;
    }
    const Vertex u = rep.u, v = rep.v;
    auto layers = build_walk_layers(g, pw, u, v);
    const auto& n1 = layers[1];
    const auto& n2 = layers[2];
    const auto& n3 = layers[3];
    const auto& n4 = layers[4];
    std::size_t dh = 0;
    for (Vertex x = 0; x < g.n(); ++x) dh = std::max(dh, g.degree(x));
    const double dhf = static_cast<double>(dh);
    const double kf = static_cast<double>(k);

    bool have = false;
    std::set<VertexSet> seen;
    auto offer = [&](VertexSet s) {
        if (s.empty() || rep.candidates >= params.max_candidates) return;
        if (!seen.insert(s).second) return;
        ++rep.candidates;
        auto cand = induced_stats(g, trim_to(g, std::move(s), k));
        if (!have || better_result(cand, rep.result)) rep.result = std::move(cand), have = true;
    };

    // (a) the middle layers together.
    const VertexSet middle = detail::set_union_of(n2, n3);
    offer(middle);

    // (b) sampled middle layers.
    const double rate = std::min(1.0, kf / (2.0 * dhf * dhf));
    const SplitRng root = SplitRng(params.seed).split(stream_key("a5"));
    for (std::size_t r = 0; r < params.sample_retries; ++r) {
        SplitRng rng = root.split(r);
        VertexSet s;
        for (Vertex x : middle)
            if (rng.bernoulli(rate)) s.push_back(x);
        offer(std::move(s));
    }

    // (c) walk-heavy middle vertices with their neighbourhood toward the far end.
    auto heavy = [&](const VertexSet& side, auto&& load) {
        WalkCount best = 0;
        for (Vertex x : side) best = std::max(best, load(x));
        VertexSet out;
        for (Vertex x : side)
            if (load(x) == best) out.push_back(x);
        return out;
    };
    for (Vertex w : heavy(n2, [&](Vertex x) { return pw.w[3](x, v); })) {
        auto s = detail::set_union_of(detail::neighbors_within(g, w, n3), n4);
        rep.max_neighbourhood_candidate = std::max(rep.max_neighbourhood_candidate, s.size());
        offer(std::move(s));
    }
    for (Vertex w : heavy(n3, [&](Vertex x) { return pw.w[3](u, x); })) {
        auto s = detail::set_union_of(detail::neighbors_within(g, w, n2), n1);
        rep.max_neighbourhood_candidate = std::max(rep.max_neighbourhood_candidate, s.size());
        offer(std::move(s));
    }

    // (d) good-vertex collection over the cut between N2 and N3.
    struct CutEdge {
        Vertex w, z;
        double load;
    };
    std::vector<CutEdge> cut;
    {
        auto in3 = membership(g, n3);
        for (Vertex w : n2)
            for (Vertex z : g.neighbors(w))
                if (in3[z])
                    cut.push_back({w, z, static_cast<double>(pw.w[2](u, w)) *
                                             static_cast<double>(pw.w[2](z, v))});
    }
    std::vector<std::size_t> deg_n1(static_cast<std::size_t>(g.n()), 0), deg_n4(deg_n1);
    {
        auto in1 = membership(g, n1), in4 = membership(g, n4);
        for (Vertex x = 0; x < g.n(); ++x)
            for (Vertex y : g.neighbors(x)) deg_n1[x] += in1[y], deg_n4[x] += in4[y];
    }
    auto good_vertex_sets = [&](double threshold) {
        const double root_t = std::sqrt(threshold);
        std::vector<char> alive(cut.size(), 0);
        for (std::size_t i = 0; i < cut.size(); ++i) alive[i] = cut[i].load >= threshold;
        VertexSet s2, s3;
        std::size_t collected = 0;
        for (std::size_t i = 0; i < cut.size() && collected < k; ++i) {
            if (!alive[i]) continue;
            Vertex good;
            if (static_cast<double>(deg_n1[cut[i].w]) >= root_t) {
                good = cut[i].w;
                s2.push_back(good);
            } else if (static_cast<double>(deg_n4[cut[i].z]) >= root_t) {
                good = cut[i].z;
                s3.push_back(good);
            } else {
                continue;
            }
            ++collected;
            for (std::size_t j = 0; j < cut.size(); ++j)
                if (cut[j].w == good || cut[j].z == good) alive[j] = 0;
        }
        std::sort(s2.begin(), s2.end());
        s2.erase(std::unique(s2.begin(), s2.end()), s2.end());
        std::sort(s3.begin(), s3.end());
        s3.erase(std::unique(s3.begin(), s3.end()), s3.end());
        if (!s2.empty()) offer(detail::set_union_of(s2, n1));
        if (!s3.empty()) offer(detail::set_union_of(s3, n4));
    };
    if (!cut.empty()) {
        for (double dstar : params.dstar_ladder) {
            std::vector<double> eps = params.epsilon_ladder;
            eps.push_back(std::min(std::pow(dstar, 3) / (std::pow(kf, 0.6) * std::pow(dhf, 1.6)),
                                   std::pow(dstar, 5.0 / 3) /
                                       (std::cbrt(kf) * std::pow(dhf, 2.0 / 3))));
            eps.push_back(std::min(std::pow(dstar, 3) / (std::pow(kf, 0.4) * dhf * dhf),
                                   std::pow(dstar, 5.0 / 3) / std::pow(dhf, 4.0 / 3)));
            const double d5 = std::pow(dstar, 5);
            for (double e : eps) {
                good_vertex_sets(d5 / (2 * dhf * dhf * e * kf));
                good_vertex_sets(d5 / (2 * std::pow(dhf, 4) * e));
            }
        }
    }

    if (!have) {
        rep.result = a1_trivial(g, k);
        rep.fell_back = true;
    }
    return rep;
}

inline SubgraphResult a5_walks(const Graph& g, std::size_t k, const FkpParams& params) {
    return a5_walks_report(g, k, params).result;
}

}  // namespace densek

#endif
