#ifndef DENSEK_GRAPH_HPP
#define DENSEK_GRAPH_HPP

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <istream>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "densek/error.hpp"

namespace densek {

using Vertex = std::int32_t;
/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are stored with u < v in lexicographic order; edge indices refer to
/// that order. Adjacency lists are sorted ascending.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Self-loops, duplicate edges (in
    /// either orientation) and out-of-range endpoints throw InputError.
    Graph(Vertex n, std::vector<Edge> edges) : n_(n) {
        if (n < 0) throw InputError("negative vertex count");
        for (auto& e : edges) {
            if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
                throw InputError("edge endpoint out of range");
            if (e.u == e.v) throw InputError("self-loop on vertex " + std::to_string(e.u));
            if (e.u > e.v) std::swap(e.u, e.v);
        }
        std::sort(edges.begin(), edges.end());
        auto dup = std::adjacent_find(edges.begin(), edges.end());
        if (dup != edges.end())
            throw InputError("duplicate edge " + std::to_string(dup->u) + " " +
                             std::to_string(dup->v));
        edges_ = std::move(edges);
        adj_.assign(static_cast<std::size_t>(n), {});
        for (const auto& e : edges_) {
            adj_[e.u].push_back(e.v);
            adj_[e.v].push_back(e.u);
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    }

    Vertex n() const noexcept { return n_; }
    std::size_t m() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        check_vertex(v);
        return adj_[v];
    }

    std::size_t degree(Vertex v) const { return neighbors(v).size(); }

    bool has_edge(Vertex u, Vertex v) const {
        auto nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    /// Index of edge {u, v} in edges(), if present.
    std::optional<std::size_t> edge_index(Vertex u, Vertex v) const {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
        if (it == edges_.end() || *it != Edge{u, v}) return std::nullopt;
        return static_cast<std::size_t>(it - edges_.begin());
    }

    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_)
            throw InputError("vertex " + std::to_string(v) + " out of range [0, " +
                             std::to_string(n_) + ")");
    }

private:
    Vertex n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

/// A chosen vertex set with its induced edge count and average degree.
struct SubgraphResult {
    VertexSet vertices;
    std::int64_t edge_count = 0;
    double average_degree = 0.0;

    std::size_t size() const noexcept { return vertices.size(); }
};

/// Three-way density comparison 2e1/s1 vs 2e2/s2 in exact integer
/// arithmetic. Empty sets have density 0.
inline std::strong_ordering compare_density(std::int64_t e1, std::size_t s1, std::int64_t e2,
                                            std::size_t s2) {
    if (s1 == 0) e1 = 0, s1 = 1;
    if (s2 == 0) e2 = 0, s2 = 1;
    __int128 lhs = static_cast<__int128>(e1) * static_cast<__int128>(s2);
    __int128 rhs = static_cast<__int128>(e2) * static_cast<__int128>(s1);
    return lhs <=> rhs;
}

/// Total order used by every best-of reduction: higher density, then more
/// edges, then the lexicographically smaller vertex list.
inline bool better_result(const SubgraphResult& a, const SubgraphResult& b) {
    auto c = compare_density(a.edge_count, a.size(), b.edge_count, b.size());
    if (c != 0) return c > 0;
    if (a.edge_count != b.edge_count) return a.edge_count > b.edge_count;
    return std::lexicographical_compare(a.vertices.begin(), a.vertices.end(),
                                        b.vertices.begin(), b.vertices.end());
}

/// Sorts and validates a vertex list against `g`. Duplicates throw.
inline VertexSet normalize_set(const Graph& g, VertexSet s) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw InputError("duplicate vertex in set");
    for (Vertex v : s) g.check_vertex(v);
    return s;
}

inline std::vector<char> membership(const Graph& g, std::span<const Vertex> s) {
    std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
    for (Vertex v : s) in[v] = 1;
    return in;
}

/// Counts the edges with both endpoints in `s`.
inline SubgraphResult induced_stats(const Graph& g, VertexSet s) {
    s = normalize_set(g, std::move(s));
    auto in = membership(g, s);
    std::int64_t twice = 0;
    for (Vertex v : s)
        for (Vertex w : g.neighbors(v)) twice += in[w];
    SubgraphResult r;
    r.edge_count = twice / 2;
    r.average_degree =
        s.empty() ? 0.0 : 2.0 * static_cast<double>(r.edge_count) / static_cast<double>(s.size());
    r.vertices = std::move(s);
    return r;
}

/// Number of edges with one endpoint in `a` and the other in `b`.
inline std::int64_t cut_size(const Graph& g, const VertexSet& a, const VertexSet& b) {
    auto sa = normalize_set(g, a);
    auto sb = normalize_set(g, b);
    auto in_b = membership(g, sb);
    for (Vertex v : sa)
        if (in_b[v]) throw InputError("cut sides overlap at vertex " + std::to_string(v));
    std::int64_t cut = 0;
    for (Vertex v : sa)
        for (Vertex w : g.neighbors(v)) cut += in_b[w];
    return cut;
}

/// Vertices ordered by degree descending, lower id first on ties.
inline std::vector<Vertex> degree_order(const Graph& g) {
    std::vector<Vertex> order(static_cast<std::size_t>(g.n()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    return order;
}

inline std::size_t half_up(std::size_t k) { return (k + 1) / 2; }

struct DegreeStats {
    double d_h_avg = 0.0;  ///< mean of the ceil(k/2) largest degrees
    std::size_t d_h_max = 0;
};

inline DegreeStats top_half_degree_stats(const Graph& g, std::size_t k) {
    if (k < 1 || k > static_cast<std::size_t>(g.n()))
        throw InputError("k out of range for degree statistics");
    auto order = degree_order(g);
    std::size_t h = half_up(k);
    std::size_t sum = 0;
    for (std::size_t i = 0; i < h; ++i) sum += g.degree(order[i]);
    return {static_cast<double>(sum) / static_cast<double>(h), g.degree(order[0])};
}

/// Induced subgraph with relabelled vertices 0..|s|-1; `original[i]` maps a
/// new id back to the parent graph.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> original;

    VertexSet lift(const VertexSet& local) const {
        VertexSet out;
        out.reserve(local.size());
        for (Vertex v : local) out.push_back(original[v]);
        std::sort(out.begin(), out.end());
        return out;
    }
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    auto set = normalize_set(g, s);
    std::vector<Vertex> local(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < set.size(); ++i) local[set[i]] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        if (local[e.u] >= 0 && local[e.v] >= 0) edges.push_back({local[e.u], local[e.v]});
    return {Graph(static_cast<Vertex>(set.size()), std::move(edges)), std::move(set)};
}

/// Drops the ceil(k/2) highest-degree vertices, keeping the id map.
inline InducedSubgraph remove_top_degrees_mapped(const Graph& g, std::size_t k) {
    std::size_t h = half_up(k);
    if (k < 1 || h >= static_cast<std::size_t>(g.n()))
        throw InputError("k out of range for top-degree removal");
    auto order = degree_order(g);
    VertexSet keep(order.begin() + static_cast<std::ptrdiff_t>(h), order.end());
    return induced_subgraph(g, keep);
}

inline Graph remove_top_degrees(const Graph& g, std::size_t k) {
    return remove_top_degrees_mapped(g, k).graph;
}

/// Grows `s` to `k` vertices with the lowest unused ids.
inline VertexSet pad_lowest_id(const Graph& g, VertexSet s, std::size_t k) {
    s = normalize_set(g, std::move(s));
    if (s.size() >= k) return s;
    auto in = membership(g, s);
    for (Vertex v = 0; v < g.n() && s.size() < k; ++v)
        if (!in[v]) s.push_back(v);
    std::sort(s.begin(), s.end());
    return s;
}

/// Grows `s` to `k` vertices, each time adding the outside vertex with the
/// most neighbours already in the set (lower id on ties).
inline VertexSet pad_greedy(const Graph& g, VertexSet s, std::size_t k) {
    s = normalize_set(g, std::move(s));
    if (s.size() >= k) return s;
    auto in = membership(g, s);
    std::vector<std::size_t> into(static_cast<std::size_t>(g.n()), 0);
    for (Vertex v : s)
        for (Vertex w : g.neighbors(v)) ++into[w];
    while (s.size() < k && s.size() < static_cast<std::size_t>(g.n())) {
        Vertex pick = -1;
        for (Vertex v = 0; v < g.n(); ++v)
            if (!in[v] && (pick < 0 || into[v] > into[pick])) pick = v;
        in[pick] = 1;
        s.push_back(pick);
        for (Vertex w : g.neighbors(pick)) ++into[w];
    }
    std::sort(s.begin(), s.end());
    return s;
}

// ---------------------------------------------------------------------------
// Edge-list text format

namespace detail {

inline std::string_view trim(std::string_view s) {
    auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && ws(s.front())) s.remove_prefix(1);
    while (!s.empty() && ws(s.back())) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::int64_t parse_id(std::string_view tok, std::size_t line) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, "non-integer token '" + std::string(tok) + "'");
    if (value < 0) throw ParseError(line, "negative vertex id");
    if (value > INT32_MAX - 1) throw ParseError(line, "vertex id too large");
    return value;
}

}  // namespace detail

/// Parses "u v" lines (0-based ids). Lines starting with '#' and blank lines
/// are skipped. An optional "n <N>" line fixes the vertex count; otherwise
/// n = 1 + largest id seen.
inline Graph parse_edge_list(std::string_view text) {
    std::optional<std::int64_t> declared;
    std::vector<Edge> edges;
    std::vector<std::size_t> edge_line;
    std::set<std::pair<Vertex, Vertex>> seen;
    std::int64_t max_id = -1;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        auto line = detail::trim(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        auto toks = detail::split_ws(line);
        if (toks.size() != 2) throw ParseError(line_no, "expected two tokens");
        if (toks[0] == "n") {
            if (declared) throw ParseError(line_no, "repeated 'n' header");
            declared = detail::parse_id(toks[1], line_no);
            continue;
        }
        auto u = static_cast<Vertex>(detail::parse_id(toks[0], line_no));
        auto v = static_cast<Vertex>(detail::parse_id(toks[1], line_no));
        if (u == v) throw ParseError(line_no, "self-loop on vertex " + std::to_string(u));
        auto key = std::minmax(u, v);
        if (!seen.insert({key.first, key.second}).second)
            throw ParseError(line_no, "duplicate edge " + std::to_string(key.first) + " " +
                                          std::to_string(key.second));
        edges.push_back({key.first, key.second});
        edge_line.push_back(line_no);
        max_id = std::max<std::int64_t>(max_id, key.second);
    }

    std::int64_t n = max_id + 1;
    if (declared) {
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (edges[i].v >= *declared)
                throw ParseError(edge_line[i], "vertex id " + std::to_string(edges[i].v) +
                                                   " >= declared n " +
                                                   std::to_string(*declared));
        n = *declared;
    }
    return Graph(static_cast<Vertex>(n), std::move(edges));
}

inline Graph parse_edge_list(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(std::string_view(buf.str()));
}

/// "n <N>" header, then one "u v" line per edge with u < v in sorted order.
inline std::string serialize_edge_list(const Graph& g) {
    std::string out = "n " + std::to_string(g.n()) + "\n";
    for (const auto& e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

}  // namespace densek

#endif
