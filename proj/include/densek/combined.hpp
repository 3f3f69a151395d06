#ifndef DENSEK_COMBINED_HPP
#define DENSEK_COMBINED_HPP

#include <optional>
#include <vector>

#include "densek/damks_lp.hpp"
#include "densek/fkp.hpp"
#include "densek/graph.hpp"
#include "densek/ratio.hpp"
#include "densek/rng.hpp"

namespace densek {

struct CombinedParams {
    FkpParams fkp = FkpParams::defaults();
    A6Options a6;
};

/// One algorithm's answer, already padded to exactly k in the input graph.
struct CombinedEntry {
    Algo algo;
    bool preprocessed;  ///< ran on the graph without its top ceil(k/2) degrees
    SubgraphResult result;
};

struct CombinedOutcome {
    SubgraphResult result;
    Algo winner = Algo::a1;
    bool preprocessed = false;
    std::vector<CombinedEntry> entries;
};

/// Runs one algorithm on `g` with the given size, returning raw vertices.
/// Returns nullopt when the algorithm's precondition excludes this k.
inline std::optional<SubgraphResult> run_algorithm(Algo algo, const Graph& g, std::size_t k,
                                                   const CombinedParams& params,
                                                   std::uint64_t branch) {
    switch (algo) {
        case Algo::a1: return a1_trivial(g, k);
        case Algo::a2:
            if (k < 2) return std::nullopt;
            return a2_greedy(g, k);
        case Algo::a3: return a3_neighborhood(g, k);
        case Algo::a4: return a4_composite(g, k);
        case Algo::a5: {
            FkpParams p = params.fkp;
            p.seed = SplitRng(params.fkp.seed).split({stream_key("combined-a5"), branch})();
            return a5_walks(g, k, p);
        }
        case Algo::a6: {
            A6Options o = params.a6;
            o.seed = SplitRng(params.a6.seed).split({stream_key("combined-a6"), branch})();
            return a6_damks(g, k, o);
        }
    }
    return std::nullopt;
}

/// Densest exactly-k answer over the included algorithms, each run on the
/// input graph and again after dropping its ceil(k/2) highest-degree
/// vertices. Short answers are padded with the lowest unused ids. Random
/// streams depend only on (seed, algorithm, branch), so enlarging `include`
/// never lowers the result.
inline CombinedOutcome combined_dks(const Graph& g, std::size_t k, const CombinedParams& params,
                                    const AlgorithmSet& include) {
    check_k(g, k);
    if (include.empty()) throw InputError("empty algorithm set");
    params.fkp.validate();

    std::optional<InducedSubgraph> reduced;
    if (half_up(k) < static_cast<std::size_t>(g.n())) reduced = remove_top_degrees_mapped(g, k);

    CombinedOutcome out;
    bool have = false;
    auto consider = [&](Algo algo, bool pre, SubgraphResult r) {
        out.entries.push_back({algo, pre, r});
        if (!have || better_result(r, out.result)) {
            out.result = std::move(r);
            out.winner = algo;
            out.preprocessed = pre;
            have = true;
        }
    };
    for (Algo algo : include.members()) {
        if (auto r = run_algorithm(algo, g, k, params, 0))
            consider(algo, false, induced_stats(g, pad_lowest_id(g, r->vertices, k)));
        if (!reduced || reduced->graph.n() == 0) continue;
        const std::size_t kk = std::min(k, static_cast<std::size_t>(reduced->graph.n()));
        if (auto r = run_algorithm(algo, reduced->graph, kk, params, 1))
            consider(algo, true, induced_stats(g, pad_lowest_id(g, reduced->lift(r->vertices), k)));
    }
    if (!have) throw InputError("no included algorithm accepts k = " + std::to_string(k));
    return out;
}

}  // namespace densek

#endif
