#ifndef DENSEK_DAMKS_LP_HPP
#define DENSEK_DAMKS_LP_HPP

#include <cmath>
#include <cstdint>
#include <queue>
#include <span>
#include <vector>

#include "densek/error.hpp"
#include "densek/graph.hpp"
#include "densek/lp.hpp"
#include "densek/reduction.hpp"
#include "densek/rng.hpp"

namespace densek {

// Variable layout of the at-most-k LP: y_v at index v, x_e at n + e.
inline std::size_t lp_y_index(const Graph&, Vertex v) { return static_cast<std::size_t>(v); }
inline std::size_t lp_x_index(const Graph& g, std::size_t edge) {
    return static_cast<std::size_t>(g.n()) + edge;
}

/// min sum y  s.t.  y_anchor = 1;  gamma*y_i <= sum of x over edges at i;
/// x_ij <= y_i;  x_ij <= y_j;  0 <= y <= 1;  x >= 0.
inline LinearProgram build_damks_lp(const Graph& g, Vertex anchor, double gamma) {
    g.check_vertex(anchor);
    if (!(gamma > 0.0)) throw InputError("gamma must be positive");
    const auto n = static_cast<std::size_t>(g.n());
    const std::size_t vars = n + g.m();

    LinearProgram lp;
    lp.objective.assign(vars, 0.0);
    lp.lower.assign(vars, 0.0);
    lp.upper.assign(vars, LinearProgram::infinity);
    for (std::size_t v = 0; v < n; ++v) {
        lp.objective[v] = 1.0;
        lp.upper[v] = 1.0;
    }

    std::vector<double> row(vars, 0.0);
    row[lp_y_index(g, anchor)] = 1.0;
    lp.add_constraint(row, Relation::equal, 1.0);

    for (Vertex v = 0; v < g.n(); ++v) {
        std::fill(row.begin(), row.end(), 0.0);
        row[lp_y_index(g, v)] = gamma;
        for (Vertex w : g.neighbors(v)) row[lp_x_index(g, *g.edge_index(v, w))] = -1.0;
        lp.add_constraint(row, Relation::less_equal, 0.0);
    }
    for (std::size_t e = 0; e < g.m(); ++e) {
        for (Vertex end : {g.edges()[e].u, g.edges()[e].v}) {
            std::fill(row.begin(), row.end(), 0.0);
            row[lp_x_index(g, e)] = 1.0;
            row[lp_y_index(g, end)] = -1.0;
            lp.add_constraint(row, Relation::less_equal, 0.0);
        }
    }
    return lp;
}

/// Vertices at shortest-path distance 0..3 from an anchor.
struct DistanceLayers {
    Vertex anchor = 0;
    std::array<VertexSet, 4> layer;  ///< layer[i] = N_i

    const VertexSet& operator[](std::size_t i) const { return layer[i]; }
};

inline DistanceLayers distance_layers(const Graph& g, Vertex v0) {
    g.check_vertex(v0);
    std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
    std::queue<Vertex> q;
    dist[v0] = 0;
    q.push(v0);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        if (dist[v] == 3) continue;
        for (Vertex w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    DistanceLayers out;
    out.anchor = v0;
    for (Vertex v = 0; v < g.n(); ++v)
        if (dist[v] >= 0) out.layer[dist[v]].push_back(v);
    return out;
}

struct RoundingOutcome {
    VertexSet s1;  ///< drawn from N0 u N1 u N2
    VertexSet s2;  ///< drawn independently from N1 u N2 u N3
    std::array<double, 4> q{};  ///< sum of y over each layer
    double d1 = 0.0;
    double d2 = 0.0;
};

/// One independent-rounding draw: every layer vertex i joins with
/// probability y_i, separately for S1 and S2.
inline RoundingOutcome round_once(const Graph& g, const DistanceLayers& layers,
                                  std::span<const double> y, SplitRng& rng) {
    if (y.size() < static_cast<std::size_t>(g.n())) throw InputError("y vector too short");
    RoundingOutcome out;
    for (std::size_t i = 0; i < 4; ++i)
        for (Vertex v : layers[i]) out.q[i] += y[v];

    auto draw = [&](std::size_t first, std::size_t last) {
        VertexSet pool;
        for (std::size_t i = first; i <= last; ++i)
            pool.insert(pool.end(), layers[i].begin(), layers[i].end());
        std::sort(pool.begin(), pool.end());
        VertexSet picked;
        for (Vertex v : pool)
            if (rng.bernoulli(y[v])) picked.push_back(v);
        return picked;
    };
    out.s1 = draw(0, 2);
    out.s2 = draw(1, 3);
    out.d1 = induced_stats(g, out.s1).average_degree;
    out.d2 = induced_stats(g, out.s2).average_degree;
    return out;
}

inline RoundingOutcome round_once(const Graph& g, const DistanceLayers& layers,
                                  std::span<const double> y, std::uint64_t seed) {
    SplitRng rng(seed);
    return round_once(g, layers, y, rng);
}

/// sum y_i^2 >= (sum y_i)^2 / n, up to floating-point rounding.
inline bool check_cauchy_mass(std::span<const double> y, std::size_t n) {
    if (n == 0) return y.empty();
    double sum = 0.0, sq = 0.0;
    for (double v : y) sum += v, sq += v * v;
    double lhs = static_cast<double>(n) * sq;
    double rhs = sum * sum;
    return lhs >= rhs - 1e-12 * std::max(1.0, rhs);
}

inline bool check_cauchy_mass(std::span<const double> y) { return check_cauchy_mass(y, y.size()); }

/// Powers of two 1, 2, 4, ... not exceeding n.
inline std::vector<double> gamma_ladder(const Graph& g) {
    std::vector<double> out;
    for (double x = 1.0; x <= static_cast<double>(g.n()); x *= 2) out.push_back(x);
    return out;
}

/// One solved LP of the (anchor, gamma) grid.
struct DamksLpCell {
    Vertex anchor = 0;
    double gamma = 1.0;
    LpStatus status = LpStatus::infeasible;
    double objective = 0.0;
    std::vector<double> y;
};

/// Solves the LP for every anchor and every ladder gamma. Anchors whose
/// degree is below gamma are infeasible outright (the anchor's degree row
/// cannot be met) and are not sent to the solver.
inline std::vector<DamksLpCell> solve_damks_grid(const Graph& g, const SimplexOptions& opt = {}) {
    std::vector<DamksLpCell> cells;
    for (Vertex v = 0; v < g.n(); ++v) {
        for (double gamma : gamma_ladder(g)) {
            DamksLpCell cell;
            cell.anchor = v;
            cell.gamma = gamma;
            if (static_cast<double>(g.degree(v)) >= gamma) {
                auto sol = solve_lp(build_damks_lp(g, v, gamma), opt);
                cell.status = sol.status;
                if (sol.status == LpStatus::optimal) {
                    cell.objective = sol.objective;
                    cell.y.assign(sol.x.begin(), sol.x.begin() + g.n());
                }
            }
            cells.push_back(std::move(cell));
        }
    }
    return cells;
}

struct A6Options {
    std::size_t reps = 0;  ///< rounding draws per LP; 0 means 16 * n
    std::uint64_t seed = 0;
    double screen_tol = 1e-7;
};

/// A6 on a pre-solved LP grid. Cells with optimum above k are skipped; each
/// kept cell is rounded `reps` times; S1 and S2 of at most 2k vertices are
/// Fixing-trimmed to k. Returns the densest candidate (at most k vertices),
/// or the single vertex {0} when nothing survives.
inline SubgraphResult a6_from_grid(const Graph& g, std::size_t k, std::span<const DamksLpCell> grid,
                                   const A6Options& opt = {}) {
    if (k < 1 || k > static_cast<std::size_t>(g.n())) throw InputError("k out of range");
    const std::size_t reps = opt.reps == 0 ? 16 * static_cast<std::size_t>(g.n()) : opt.reps;
    const SplitRng root = SplitRng(opt.seed).split(stream_key("a6"));

    SubgraphResult best = induced_stats(g, {0});
    std::vector<DistanceLayers> layers(static_cast<std::size_t>(g.n()));
    std::vector<char> have_layers(static_cast<std::size_t>(g.n()), 0);
    for (const auto& cell : grid) {
        if (cell.status != LpStatus::optimal) continue;
        if (cell.objective > static_cast<double>(k) + opt.screen_tol) continue;
        if (!have_layers[cell.anchor]) {
            layers[cell.anchor] = distance_layers(g, cell.anchor);
            have_layers[cell.anchor] = 1;
        }
        SplitRng rng = root.split({static_cast<std::uint64_t>(cell.anchor),
                                   static_cast<std::uint64_t>(cell.gamma)});
        for (std::size_t r = 0; r < reps; ++r) {
            auto outcome = round_once(g, layers[cell.anchor], cell.y, rng);
            for (auto* s : {&outcome.s1, &outcome.s2}) {
                if (s->empty() || s->size() > 2 * k) continue;
                auto cand = induced_stats(g, trim_to(g, *s, k));
                if (better_result(cand, best)) best = std::move(cand);
            }
        }
    }
    return best;
}

inline SubgraphResult a6_damks(const Graph& g, std::size_t k, const A6Options& opt = {}) {
    if (k < 1 || k > static_cast<std::size_t>(g.n())) throw InputError("k out of range");
    auto grid = solve_damks_grid(g);
    return a6_from_grid(g, k, grid, opt);
}

}  // namespace densek

#endif
