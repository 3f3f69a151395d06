#ifndef DENSEK_RATIO_HPP
#define DENSEK_RATIO_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "densek/error.hpp"

namespace densek {

enum class Algo { a1, a2, a3, a4, a5, a6 };

inline constexpr std::array<Algo, 6> all_algos{Algo::a1, Algo::a2, Algo::a3,
                                              Algo::a4, Algo::a5, Algo::a6};

inline std::string_view to_string(Algo a) {
    static constexpr std::array<std::string_view, 6> names{"a1", "a2", "a3", "a4", "a5", "a6"};
    return names[static_cast<std::size_t>(a)];
}

inline std::optional<Algo> parse_algo(std::string_view s) {
    for (Algo a : all_algos)
        if (to_string(a) == s) return a;
    return std::nullopt;
}

/// Nonempty subset of {A1..A6}.
class AlgorithmSet {
public:
    AlgorithmSet() = default;
    AlgorithmSet(std::initializer_list<Algo> algos) {
        for (Algo a : algos) insert(a);
    }

    void insert(Algo a) { bits_ |= bit(a); }
    void erase(Algo a) { bits_ &= static_cast<std::uint8_t>(~bit(a)); }
    bool contains(Algo a) const { return (bits_ & bit(a)) != 0; }
    bool empty() const { return bits_ == 0; }
    std::uint8_t bits() const { return bits_; }

    std::vector<Algo> members() const {
        std::vector<Algo> out;
        for (Algo a : all_algos)
            if (contains(a)) out.push_back(a);
        return out;
    }

    friend bool operator==(const AlgorithmSet&, const AlgorithmSet&) = default;

    /// The A1..A5 combination.
    static AlgorithmSet fkp5() { return {Algo::a1, Algo::a2, Algo::a3, Algo::a4, Algo::a5}; }
    /// A1..A4 with the LP algorithm A6 in place of A5.
    static AlgorithmSet a6combo() { return {Algo::a1, Algo::a2, Algo::a3, Algo::a4, Algo::a6}; }

    /// "fkp5", "a6combo" or "custom:a1,a3,...".
    static AlgorithmSet parse(std::string_view text) {
        if (text == "fkp5") return fkp5();
        if (text == "a6combo") return a6combo();
        constexpr std::string_view prefix = "custom:";
        if (text.substr(0, prefix.size()) != prefix)
            throw InputError("unknown algorithm set '" + std::string(text) + "'");
        AlgorithmSet set;
        auto rest = text.substr(prefix.size());
        while (!rest.empty()) {
            auto comma = rest.find(',');
            auto tok = rest.substr(0, comma);
            auto a = parse_algo(tok);
            if (!a) throw InputError("unknown algorithm '" + std::string(tok) + "'");
            set.insert(*a);
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
        if (set.empty()) throw InputError("empty algorithm set");
        return set;
    }

private:
    static std::uint8_t bit(Algo a) { return static_cast<std::uint8_t>(1u << static_cast<unsigned>(a)); }
    std::uint8_t bits_ = 0;
};

/// Exponents of d* = n^g, k = n^K and d_H = n^d.
struct ExponentPoint {
    double g = 0.0;
    double K = 0.0;
    double d = 0.0;
};

/// Ratio exponent of one algorithm at `p`, kept term for term in the
/// usual grid-search form. A5 is undefined outside its two regimes.
inline std::optional<double> ratio_exponent(Algo algo, const ExponentPoint& p) {
    const double g = p.g, K = p.K, d = p.d;
    switch (algo) {
        case Algo::a1: return g - 0;
        case Algo::a2: return g - K - d + 1;
        case Algo::a3: return g - 2 * g + std::max(K, d);
        case Algo::a4: return g - 3 * g + 2 * K + d / 3.0;
        case Algo::a5:
            if (2 * d <= K) return g - std::min((3 * g - 1.6 * d - 0.6 * K), (5.0 * g - K - 2.0 * d) / 3.0);
            if ((K < 2 * d) && (K > d)) return g - std::min(3 * g - 2 * d - 0.4 * K, (5.0 * g - 4.0 * d) / 3.0);
            return std::nullopt;
        case Algo::a6: return g - (7.0 * g - 4.0 * d - K) / 3.0;
    }
    return std::nullopt;
}

/// Minimum over the applicable members of `algos`; nullopt when none apply.
inline std::optional<double> combined_exponent(const AlgorithmSet& algos, const ExponentPoint& p) {
    std::optional<double> r;
    for (Algo a : all_algos) {
        if (!algos.contains(a)) continue;
        auto e = ratio_exponent(a, p);
        if (e && (!r || *e < *r)) r = e;
    }
    return r;
}

/// Worst-case exponent slack of a grid with step `delta`: (13/3) * delta.
inline double error_bound(double delta) {
    if (delta < 0.0) throw InputError("grid step must be non-negative");
    return 13.0 / 3.0 * delta;
}

struct GridResult {
    double delta = 0.0;
    AlgorithmSet algos;
    double max_exponent = -std::numeric_limits<double>::infinity();
    ExponentPoint argmax;
    std::uint64_t evaluations = 0;
    bool found = false;
};

/// Number of grid steps in [0, 1] for step `delta`.
inline std::int64_t grid_steps(double delta) {
    return static_cast<std::int64_t>(std::floor(1.0 / delta + 1e-9));
}

/// Visits the lattice g = i*delta, d = j*delta (j >= i), K = l*delta
/// (l >= i) with g outer, d middle, K inner. Coordinates
/// come from integer indices so no step error accumulates.
template <class Visit>
void for_each_grid_point(double delta, std::int64_t g_begin, std::int64_t g_end, Visit&& visit) {
    const std::int64_t steps = grid_steps(delta);
    for (std::int64_t i = g_begin; i < g_end && i <= steps; ++i)
        for (std::int64_t j = i; j <= steps; ++j)
            for (std::int64_t l = i; l <= steps; ++l)
                visit(ExponentPoint{static_cast<double>(i) * delta, static_cast<double>(l) * delta,
                                    static_cast<double>(j) * delta});
}

namespace detail {

inline GridResult grid_slice(double delta, const AlgorithmSet& algos, std::int64_t g_begin,
                             std::int64_t g_end) {
    GridResult r;
    r.delta = delta;
    r.algos = algos;
    for_each_grid_point(delta, g_begin, g_end, [&](const ExponentPoint& p) {
        ++r.evaluations;
        auto v = combined_exponent(algos, p);
        if (v && (!r.found || r.max_exponent < *v)) {
            r.max_exponent = *v;
            r.argmax = p;
            r.found = true;
        }
    });
    return r;
}

}  // namespace detail

/// max over the lattice of min over `algos`, with the first point (in visit
/// order) attaining it. Slices of the outer g loop run on
/// up to `threads` workers and merge deterministically.
inline GridResult grid_max_min(double delta, const AlgorithmSet& algos, unsigned threads = 1) {
    if (!(delta > 0.0) || delta > 0.25) throw InputError("grid step must lie in (0, 0.25]");
    if (algos.empty()) throw InputError("empty algorithm set");
    const std::int64_t outer = grid_steps(delta) + 1;
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(outer)));

    // Interleaved slices balance the triangular workload.
    std::vector<GridResult> parts(threads);
    auto work = [&](unsigned t) {
        GridResult acc;
        acc.delta = delta;
        acc.algos = algos;
        for (std::int64_t i = t; i < outer; i += threads) {
            auto s = detail::grid_slice(delta, algos, i, i + 1);
            acc.evaluations += s.evaluations;
            if (s.found && (!acc.found || acc.max_exponent < s.max_exponent ||
                            (acc.max_exponent == s.max_exponent && s.argmax.g < acc.argmax.g))) {
                acc.max_exponent = s.max_exponent;
                acc.argmax = s.argmax;
                acc.found = true;
            }
        }
        parts[t] = acc;
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }

    GridResult r;
    r.delta = delta;
    r.algos = algos;
    for (const auto& p : parts) {
        r.evaluations += p.evaluations;
        if (p.found && (!r.found || r.max_exponent < p.max_exponent ||
                        (r.max_exponent == p.max_exponent && p.argmax.g < r.argmax.g))) {
            r.max_exponent = p.max_exponent;
            r.argmax = p.argmax;
            r.found = true;
        }
    }
    return r;
}

}  // namespace densek

#endif
