#ifndef DENSEK_EXACT_HPP
#define DENSEK_EXACT_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "densek/error.hpp"
#include "densek/graph.hpp"
#include "densek/rational.hpp"

namespace densek {

enum class ProblemKind { exactly_k, at_least_k, at_most_k };

inline std::string_view to_string(ProblemKind kind) {
    switch (kind) {
        case ProblemKind::exactly_k: return "dks";
        case ProblemKind::at_least_k: return "dalks";
        case ProblemKind::at_most_k: return "damks";
    }
    return "?";
}

inline bool size_allowed(ProblemKind kind, std::size_t size, std::size_t k) {
    switch (kind) {
        case ProblemKind::exactly_k: return size == k;
        case ProblemKind::at_least_k: return size >= k;
        case ProblemKind::at_most_k: return size <= k;
    }
    return false;
}

inline constexpr Vertex default_enumeration_cap = 24;
inline constexpr Vertex max_enumeration_cap = 40;

namespace detail {

inline void check_cap(const Graph& g, Vertex cap) {
    if (cap > max_enumeration_cap)
        throw InputError("enumeration cap above " + std::to_string(max_enumeration_cap));
    if (g.n() > cap)
        throw CapacityError("exact oracle refuses n = " + std::to_string(g.n()) +
                            " (cap " + std::to_string(cap) + ")");
}

inline std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint64_t> mask(static_cast<std::size_t>(g.n()), 0);
    for (const auto& e : g.edges()) {
        mask[e.u] |= std::uint64_t{1} << e.v;
        mask[e.v] |= std::uint64_t{1} << e.u;
    }
    return mask;
}

/// True when mask `a` lists lexicographically before mask `b` as a sorted
/// vertex sequence.
inline bool lex_less(std::uint64_t a, std::uint64_t b) {
    std::uint64_t diff = a ^ b;
    if (diff == 0) return false;
    std::uint64_t low = diff & -diff;
    // The set owning the smallest differing vertex x sorts first unless the
    // other set has run out of elements (is a prefix).
    if (b & low) return (a & ~(low - 1)) == 0;
    return (b & ~(low - 1)) != 0;
}

inline VertexSet mask_to_set(std::uint64_t mask) {
    VertexSet s;
    while (mask != 0) {
        s.push_back(static_cast<Vertex>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return s;
}

/// Visits every subset of {0..n-1} in reflected Gray-code order, keeping the
/// induced edge count up to date in O(1) per step.
template <class Visit>
void gray_code_subsets(const std::vector<std::uint64_t>& adj, Vertex n, Visit&& visit) {
    std::uint64_t mask = 0;
    std::int64_t edges = 0;
    std::size_t size = 0;
    visit(mask, edges, size);
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t i = 1; i < total; ++i) {
        auto v = std::countr_zero(i);
        std::uint64_t bit = std::uint64_t{1} << v;
        auto touching = std::popcount(adj[v] & mask);
        if (mask & bit) {
            mask ^= bit;
            edges -= touching;
            --size;
        } else {
            mask ^= bit;
            edges += touching;
            ++size;
        }
        visit(mask, edges, size);
    }
}

}  // namespace detail

/// Exact optimum by exhaustive enumeration. Ties: more edges, then the
/// lexicographically smallest vertex set. Throws CapacityError above `cap`.
inline SubgraphResult exact_solve(const Graph& g, std::size_t k, ProblemKind kind,
                                  Vertex cap = default_enumeration_cap) {
    detail::check_cap(g, cap);
    if (k < 1 || k > static_cast<std::size_t>(g.n())) throw InputError("k out of range");
    auto adj = detail::adjacency_masks(g);

    bool have = false;
    std::uint64_t best_mask = 0;
    std::int64_t best_edges = 0;
    std::size_t best_size = 0;
    detail::gray_code_subsets(adj, g.n(), [&](std::uint64_t mask, std::int64_t e, std::size_t s) {
        if (!size_allowed(kind, s, k)) return;
        if (!have) {
            have = true;
            best_mask = mask, best_edges = e, best_size = s;
            return;
        }
        auto c = compare_density(e, s, best_edges, best_size);
        if (c < 0) return;
        if (c == 0) {
            if (e < best_edges) return;
            if (e == best_edges && !detail::lex_less(mask, best_mask)) return;
        }
        best_mask = mask, best_edges = e, best_size = s;
    });
    return induced_stats(g, detail::mask_to_set(best_mask));
}

struct QuasiDensityResult {
    VertexSet vertices;
    Rational value;  ///< |E(S)| - q|S|
};

/// Exact maximiser of |E(S)| - q|S| over all subsets including the empty
/// set. Ties: smallest |S|, then lexicographic.
inline QuasiDensityResult brute_quasi_density(const Graph& g, Rational q,
                                              Vertex cap = default_enumeration_cap) {
    detail::check_cap(g, cap);
    auto adj = detail::adjacency_masks(g);
    // value * q.den = e*den - num*s, compared as integers.
    const __int128 num = q.num();
    const __int128 den = q.den();
    __int128 best = 0;
    std::uint64_t best_mask = 0;
    std::size_t best_size = 0;
    detail::gray_code_subsets(adj, g.n(), [&](std::uint64_t mask, std::int64_t e, std::size_t s) {
        __int128 val = static_cast<__int128>(e) * den - num * static_cast<__int128>(s);
        if (val < best) return;
        if (val == best) {
            if (s > best_size) return;
            if (s == best_size && !detail::lex_less(mask, best_mask)) return;
        }
        best = val, best_mask = mask, best_size = s;
    });
    auto set = detail::mask_to_set(best_mask);
    auto stats = induced_stats(g, set);
    return {std::move(set), Rational(stats.edge_count) - q * Rational(static_cast<std::int64_t>(best_size))};
}

// ---------------------------------------------------------------------------
// Walk counting

using WalkCount = unsigned __int128;

/// Dense n x n matrix of walk counts.
class WalkMatrix {
public:
    WalkMatrix() = default;
    explicit WalkMatrix(Vertex n)
        : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

    Vertex n() const noexcept { return n_; }
    WalkCount& operator()(Vertex u, Vertex v) { return data_[index(u, v)]; }
    WalkCount operator()(Vertex u, Vertex v) const { return data_[index(u, v)]; }

    friend bool operator==(const WalkMatrix&, const WalkMatrix&) = default;

private:
    std::size_t index(Vertex u, Vertex v) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(v);
    }

    Vertex n_ = 0;
    std::vector<WalkCount> data_;
};

inline WalkMatrix adjacency_walks(const Graph& g) {
    WalkMatrix a(g.n());
    for (const auto& e : g.edges()) a(e.u, e.v) = a(e.v, e.u) = 1;
    return a;
}

/// Extends walks by one edge: result(u, v) = sum over w ~ v of w(u, w).
inline WalkMatrix extend_walks(const Graph& g, const WalkMatrix& w) {
    WalkMatrix out(g.n());
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = 0; v < g.n(); ++v) {
            WalkCount acc = 0;
            for (Vertex x : g.neighbors(v))
                if (__builtin_add_overflow(acc, w(u, x), &acc))
                    throw OverflowError("walk count exceeds 128 bits");
            out(u, v) = acc;
        }
    return out;
}

/// Entry (u, v) is the number of length-`length` walks from u to v
/// (vertices may repeat). Overflow throws rather than wrapping.
inline WalkMatrix walk_count_matrix(const Graph& g, int length) {
    if (length < 1) throw InputError("walk length must be at least 1");
    WalkMatrix w = adjacency_walks(g);
    for (int i = 1; i < length; ++i) w = extend_walks(g, w);
    return w;
}

inline std::string to_string(WalkCount x) {
    if (x == 0) return "0";
    std::string s;
    while (x != 0) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(x % 10)));
        x /= 10;
    }
    return s;
}

}  // namespace densek

#endif
