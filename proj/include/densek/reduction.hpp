#ifndef DENSEK_REDUCTION_HPP
#define DENSEK_REDUCTION_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "densek/error.hpp"
#include "densek/exact.hpp"
#include "densek/graph.hpp"

namespace densek {

/// Total weight of the edges induced by `u`. Empty `weights` means unit
/// weights; otherwise weights[i] belongs to g.edges()[i].
template <class W = std::int64_t>
W induced_weight(const Graph& g, const VertexSet& u, std::span<const W> weights = {}) {
    auto in = membership(g, u);
    W total{0};
    for (std::size_t i = 0; i < g.m(); ++i) {
        const auto& e = g.edges()[i];
        if (in[e.u] && in[e.v]) total += weights.empty() ? W{1} : weights[i];
    }
    return total;
}

/// Shrinks `u` to `k` vertices by repeatedly deleting the vertex of least
/// weighted induced degree (lower id on ties). Keeps at least a
/// k(k-1)/(|U|(|U|-1)) share of the induced weight.
template <class W = std::int64_t>
VertexSet fixing_trim(const Graph& g, VertexSet u, std::size_t k, std::span<const W> weights = {}) {
    u = normalize_set(g, std::move(u));
    if (u.size() <= k) throw InputError("fixing trim needs |U| > k");
    if (k < 1) throw InputError("fixing trim needs k >= 1");
    if (!weights.empty() && weights.size() != g.m()) throw InputError("weight vector size mismatch");

    auto in = membership(g, u);
    std::vector<W> wdeg(static_cast<std::size_t>(g.n()), W{0});
    for (std::size_t i = 0; i < g.m(); ++i) {
        const auto& e = g.edges()[i];
        if (!in[e.u] || !in[e.v]) continue;
        W w = weights.empty() ? W{1} : weights[i];
        if (!weights.empty() && !(W{0} < w)) throw InputError("edge weights must be positive");
        wdeg[e.u] += w;
        wdeg[e.v] += w;
    }
    std::size_t size = u.size();
    while (size > k) {
        Vertex pick = -1;
        for (Vertex v : u)
            if (in[v] && (pick < 0 || wdeg[v] < wdeg[pick])) pick = v;
        in[pick] = 0;
        --size;
        for (Vertex w : g.neighbors(pick)) {
            if (!in[w]) continue;
            wdeg[w] -= weights.empty() ? W{1} : weights[*g.edge_index(pick, w)];
        }
    }
    VertexSet out;
    for (Vertex v : u)
        if (in[v]) out.push_back(v);
    return out;
}

/// Fixing-trims oversized sets to k; smaller sets pass through.
inline VertexSet trim_to(const Graph& g, VertexSet s, std::size_t k) {
    if (s.size() > k) return fixing_trim(g, std::move(s), k);
    return s;
}

/// An at-most-k solver plus the approximation quality it claims (1 for an
/// exact oracle).
struct DamksSolverHandle {
    std::string label;
    double quality = 1.0;
    std::function<SubgraphResult(const Graph&, std::size_t)> solve;

    static DamksSolverHandle exact_oracle(Vertex cap = default_enumeration_cap) {
        return {"exact", 1.0, [cap](const Graph& g, std::size_t k) {
                    return exact_solve(g, k, ProblemKind::at_most_k, cap);
                }};
    }
};

/// Snapshot handed to a ReductionOptions observer after every solver call.
struct ReductionStep {
    double dhat;
    std::size_t iteration;
    const VertexSet& collected;     ///< S so far
    std::int64_t collected_edges;   ///< edges moved into S so far
    const Graph& working;           ///< graph with those edges removed
};

struct ReductionOptions {
    /// Known optimum; replaces the guessing ladder when set.
    std::optional<double> dstar_hint;
    std::function<void(const ReductionStep&)> observer;
};

struct ReductionOutcome {
    SubgraphResult result;
    double dhat = 0.0;
    /// 4 with a supplied optimum, 8 under ladder guessing; multiply by the
    /// solver's quality for the full bound.
    int guarantee_factor = 8;
    std::size_t solver_calls = 0;
};

/// Powers of two from the largest one <= 2/k up to n; every positive
/// k-vertex optimum 2a/k has a ladder value within a factor 2 below it.
inline std::vector<double> dks_guess_ladder(const Graph& g, std::size_t k) {
    std::vector<double> out;
    double start = std::exp2(std::floor(std::log2(2.0 / static_cast<double>(k))));
    for (double d = start; d <= static_cast<double>(g.n()); d *= 2) out.push_back(d);
    if (out.empty()) out.push_back(start);
    return out;
}

namespace detail {

inline Graph remove_induced_edges(const Graph& g, const VertexSet& s, std::int64_t& removed) {
    auto in = membership(g, s);
    std::vector<Edge> keep;
    removed = 0;
    for (const auto& e : g.edges()) {
        if (in[e.u] && in[e.v]) ++removed;
        else keep.push_back(e);
    }
    return Graph(g.n(), std::move(keep));
}

}  // namespace detail

/// Densest-k-subgraph through repeated at-most-k calls: collect solver
/// answers and strip their induced edges until S holds k*d/4 edges or k
/// vertices, then pad or Fixing-trim to exactly k. Tries each guessed d and
/// keeps the densest final set.
inline ReductionOutcome dks_via_damks(const Graph& g, std::size_t k, const DamksSolverHandle& solver,
                                      const ReductionOptions& opt = {}) {
    if (k < 1 || k > static_cast<std::size_t>(g.n())) throw InputError("k out of range");
    if (!solver.solve) throw InputError("empty solver handle");
    std::vector<double> guesses =
        opt.dstar_hint ? std::vector<double>{*opt.dstar_hint} : dks_guess_ladder(g, k);

    ReductionOutcome out;
    out.guarantee_factor = opt.dstar_hint ? 4 : 8;
    bool have = false;
    const std::size_t cap = std::max<std::size_t>(g.m(), 1);
    for (double dhat : guesses) {
        Graph working = g;
        VertexSet s;
        std::int64_t collected_edges = 0;
        for (std::size_t iter = 0; iter < cap; ++iter) {
            auto sp = solver.solve(working, k);
            ++out.solver_calls;
            if (sp.size() > k)
                throw ContractError("at-most-k solver '" + solver.label + "' returned " +
                                    std::to_string(sp.size()) + " > k vertices");
            sp.vertices = normalize_set(g, sp.vertices);
            VertexSet merged;
            std::set_union(s.begin(), s.end(), sp.vertices.begin(), sp.vertices.end(),
                           std::back_inserter(merged));
            std::int64_t removed = 0;
            Graph next = detail::remove_induced_edges(working, sp.vertices, removed);
            if (removed == 0 && merged.size() == s.size()) break;  // no progress
            s = std::move(merged);
            collected_edges += removed;
            working = std::move(next);
            if (opt.observer) opt.observer({dhat, iter, s, collected_edges, working});
            bool continue_loop = 4.0 * static_cast<double>(collected_edges) <
                                     static_cast<double>(k) * dhat &&
                                 s.size() < k;
            if (!continue_loop) break;
        }
        if (s.size() < k) s = pad_greedy(g, std::move(s), k);
        else if (s.size() > k) s = fixing_trim(g, std::move(s), k);
        auto cand = induced_stats(g, std::move(s));
        if (!have || better_result(cand, out.result)) {
            out.result = std::move(cand);
            out.dhat = dhat;
            have = true;
        }
    }
    return out;
}

/// Hardness gadget: G plus a disjoint clique on 3n fresh vertices, with the
/// size bound raised by 3n.
inline std::pair<Graph, std::size_t> dalks_gadget(const Graph& g, std::size_t k) {
    if (g.n() < 1) throw InputError("gadget needs a nonempty graph");
    const Vertex n = g.n();
    const Vertex clique = 3 * n;
    std::vector<Edge> edges = g.edges();
    for (Vertex a = n; a < n + clique; ++a)
        for (Vertex b = a + 1; b < n + clique; ++b) edges.push_back({a, b});
    return {Graph(n + clique, std::move(edges)), k + static_cast<std::size_t>(clique)};
}

}  // namespace densek

#endif
