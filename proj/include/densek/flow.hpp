#ifndef DENSEK_FLOW_HPP
#define DENSEK_FLOW_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "densek/error.hpp"
#include "densek/exact.hpp"
#include "densek/graph.hpp"
#include "densek/rational.hpp"

namespace densek {

/// Capacitated directed network with a designated source and sink.
///
/// `Cap` is any exactly-comparable additive type (std::int64_t, Rational).
/// Arcs added with add_infinite_arc carry a sentinel capacity that exceeds
/// the sum of all finite capacities.
template <class Cap>
class FlowNetwork {
public:
    struct Arc {
        int from;
        int to;
        Cap capacity;
        bool infinite;
    };

    FlowNetwork(int nodes, int source, int sink) : nodes_(nodes), source_(source), sink_(sink) {
        if (nodes < 2) throw InputError("flow network needs at least two nodes");
        check_node(source);
        check_node(sink);
        if (source == sink) throw InputError("source and sink coincide");
    }

    void add_arc(int from, int to, Cap capacity) {
        check_node(from);
        check_node(to);
        if (capacity < Cap{0}) throw InputError("negative arc capacity");
        arcs_.push_back({from, to, capacity, false});
    }

    void add_infinite_arc(int from, int to) {
        check_node(from);
        check_node(to);
        arcs_.push_back({from, to, Cap{0}, true});
    }

    int nodes() const noexcept { return nodes_; }
    int source() const noexcept { return source_; }
    int sink() const noexcept { return sink_; }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }

    /// Sum of finite capacities plus one.
    Cap infinity() const {
        Cap sum{0};
        for (const auto& a : arcs_)
            if (!a.infinite) sum += a.capacity;
        return sum + Cap{1};
    }

private:
    void check_node(int v) const {
        if (v < 0 || v >= nodes_) throw InputError("flow node " + std::to_string(v) + " out of range");
    }

    int nodes_;
    int source_;
    int sink_;
    std::vector<Arc> arcs_;
};

template <class Cap>
struct FlowResult {
    Cap value{0};
    std::vector<int> source_side;  ///< minimal source side of a minimum cut, ascending
};

namespace detail {

/// Dinic's algorithm over a residual graph of paired arcs.
template <class Cap>
class Dinic {
public:
    explicit Dinic(const FlowNetwork<Cap>& net)
        : n_(net.nodes()), s_(net.source()), t_(net.sink()), head_(n_) {
        Cap inf = net.infinity();
        for (const auto& a : net.arcs()) {
            Cap cap = a.infinite ? inf : a.capacity;
            head_[a.from].push_back(static_cast<int>(to_.size()));
            to_.push_back(a.to), cap_.push_back(cap);
            head_[a.to].push_back(static_cast<int>(to_.size()));
            to_.push_back(a.from), cap_.push_back(Cap{0});
        }
        infinity_ = inf;
    }

    Cap run() {
        Cap total{0};
        while (bfs()) {
            next_.assign(n_, 0);
            while (true) {
                Cap pushed = dfs(s_, infinity_);
                if (pushed == Cap{0}) break;
                total += pushed;
            }
        }
        return total;
    }

    std::vector<int> reachable() const {
        std::vector<char> seen(n_, 0);
        std::vector<int> stack{s_};
        seen[s_] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int id : head_[v])
                if (cap_[id] > Cap{0} && !seen[to_[id]]) {
                    seen[to_[id]] = 1;
                    stack.push_back(to_[id]);
                }
        }
        std::vector<int> out;
        for (int v = 0; v < n_; ++v)
            if (seen[v]) out.push_back(v);
        return out;
    }

    const Cap& infinity() const { return infinity_; }

private:
    bool bfs() {
        level_.assign(n_, -1);
        std::queue<int> q;
        level_[s_] = 0;
        q.push(s_);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int id : head_[v])
                if (cap_[id] > Cap{0} && level_[to_[id]] < 0) {
                    level_[to_[id]] = level_[v] + 1;
                    q.push(to_[id]);
                }
        }
        return level_[t_] >= 0;
    }

    Cap dfs(int v, Cap limit) {
        if (v == t_) return limit;
        for (auto& i = next_[v]; i < head_[v].size(); ++i) {
            int id = head_[v][i];
            int w = to_[id];
            if (cap_[id] > Cap{0} && level_[w] == level_[v] + 1) {
                Cap got = dfs(w, std::min(limit, cap_[id]));
                if (got > Cap{0}) {
                    cap_[id] -= got;
                    cap_[id ^ 1] += got;
                    return got;
                }
            }
        }
        return Cap{0};
    }

    int n_, s_, t_;
    std::vector<std::vector<int>> head_;
    std::vector<int> to_;
    std::vector<Cap> cap_;
    std::vector<int> level_;
    std::vector<std::size_t> next_;
    Cap infinity_{0};
};

}  // namespace detail

/// Maximum flow and the minimal minimum-cut source side. Deterministic for a
/// fixed arc insertion order. An s-t path of infinite arcs throws.
template <class Cap>
FlowResult<Cap> max_flow(const FlowNetwork<Cap>& net) {
    detail::Dinic<Cap> dinic(net);
    FlowResult<Cap> r;
    r.value = dinic.run();
    if (!(r.value < dinic.infinity())) throw InputError("unbounded flow through infinite arcs");
    r.source_side = dinic.reachable();
    return r;
}

// ---------------------------------------------------------------------------
// |E(S)| - q|S| maximisation

/// Maximises |E(S)| - q|S| exactly through the project-selection cut:
/// source -> edge node (1), edge node -> endpoint vertex nodes (infinite),
/// vertex node -> sink (q). Capacities are scaled by q's denominator so the
/// flow runs on integers. Returns the smallest maximiser.
inline QuasiDensityResult max_quasi_density(const Graph& g, Rational q) {
    if (q <= Rational(0)) throw InputError("penalty q must be positive");
    const auto m = static_cast<int>(g.m());
    const int n = g.n();
    const int source = 0, sink = 1;
    auto edge_node = [](int i) { return 2 + i; };
    auto vertex_node = [m](int v) { return 2 + m + v; };

    FlowNetwork<std::int64_t> net(2 + m + n, source, sink);
    for (int i = 0; i < m; ++i) {
        const auto& e = g.edges()[i];
        net.add_arc(source, edge_node(i), q.den());
        net.add_infinite_arc(edge_node(i), vertex_node(e.u));
        net.add_infinite_arc(edge_node(i), vertex_node(e.v));
    }
    for (int v = 0; v < n; ++v) net.add_arc(vertex_node(v), sink, q.num());

    auto flow = max_flow(net);
    QuasiDensityResult r;
    for (int node : flow.source_side)
        if (node >= vertex_node(0)) r.vertices.push_back(node - vertex_node(0));
    auto stats = induced_stats(g, r.vertices);
    r.value = Rational(stats.edge_count) - q * Rational(static_cast<std::int64_t>(r.vertices.size()));
    return r;
}

enum class GuessMode { exact, ladder };

inline std::string_view to_string(GuessMode mode) {
    return mode == GuessMode::exact ? "exact" : "ladder";
}

struct DalksOptions {
    /// Exhaustive optimum guessing runs while m * n stays within this budget.
    std::size_t guess_budget = std::size_t{1} << 16;
    bool force_ladder = false;
};

struct DalksOutcome {
    SubgraphResult result;
    GuessMode mode = GuessMode::exact;
    int guarantee_factor = 2;
    std::size_t flows = 0;
};

/// Candidate optimum values for the at-least-k problem. Exact mode lists
/// every 2a/b with a in 1..m and b in k..n; ladder mode lists 1, 2, 4, ...
/// up to 2m.
inline std::set<Rational> dalks_guesses(const Graph& g, std::size_t k, GuessMode mode) {
    std::set<Rational> out;
    const auto m = static_cast<std::int64_t>(g.m());
    if (mode == GuessMode::exact) {
        for (std::int64_t a = 1; a <= m; ++a)
            for (auto b = static_cast<std::int64_t>(k); b <= g.n(); ++b) out.insert(Rational(2 * a, b));
    } else {
        for (std::int64_t d = 1; d <= std::max<std::int64_t>(1, 2 * m); d *= 2) out.insert(Rational(d));
    }
    return out;
}

/// 2-approximation for the densest at-least-k subgraph. For each guessed
/// optimum d, maximises |E(S)| - (d/4)|S| and pads short sets up to k.
inline DalksOutcome dalks_2approx(const Graph& g, std::size_t k, const DalksOptions& opt = {}) {
    if (k < 1 || k > static_cast<std::size_t>(g.n())) throw InputError("k out of range");
    DalksOutcome out;
    bool exact = !opt.force_ladder && g.m() * static_cast<std::size_t>(g.n()) <= opt.guess_budget;
    out.mode = exact ? GuessMode::exact : GuessMode::ladder;
    out.guarantee_factor = exact ? 2 : 4;

    out.result = induced_stats(g, pad_greedy(g, {}, k));
    for (const auto& d : dalks_guesses(g, k, out.mode)) {
        auto s = max_quasi_density(g, d / Rational(4)).vertices;
        ++out.flows;
        if (s.size() < k) s = pad_greedy(g, std::move(s), k);
        auto cand = induced_stats(g, std::move(s));
        if (better_result(cand, out.result)) out.result = std::move(cand);
    }
    return out;
}

}  // namespace densek

#endif
