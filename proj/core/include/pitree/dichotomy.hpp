#ifndef PITREE_DICHOTOMY_HPP
#define PITREE_DICHOTOMY_HPP

#include "pitree/bounds.hpp"
#include "pitree/creature.hpp"
#include "pitree/embedding.hpp"
#include "pitree/graph.hpp"
#include "pitree/rooted_tree.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>

namespace pitree {

/// Counters and audit data collected across a whole engine run. The
/// engine re-checks its own claims at every recursion node (creature
/// parameter, witness palette, |W| bound); a violation throws
/// InternalError, so a completed run had zero assertion failures.
struct EngineStats {
    std::uint64_t creatures = 0;
    std::uint64_t local_embeddings = 0;
    std::uint64_t colorer_calls = 0;
    std::uint64_t colorer_cache_hits = 0;
    std::uint64_t creature_checks = 0;
    int max_w = 0;
};

/// What a neighborhood colorer may hand back: a proper coloring of the
/// given graph with at most tau colors, or a path-induced embedding of
/// the top-level spider in it (wrapped to keep the variant unambiguous).
struct ColorerEmbedding {
    Embedding embedding;
};
using NeighborhoodColorer =
    std::function<std::variant<Coloring, ColorerEmbedding>(const Graph&)>;

/// Result of the creature-or-embedding recursion, in the indexing of the
/// graph it ran on. Exactly one of the three members is set:
///  - local: a path-induced spider(d, k) embedding anchored at the call
///    vertex, built from d disjoint branch copies;
///  - propagated: an embedding surfaced by the neighborhood colorer
///    (top-level spider, anchored wherever the colorer found it);
///  - creature: a c(k)-creature containing the call vertex, with a proper
///    witness on at most f(k) colors.
struct EngineOutcome {
    std::optional<Embedding> local;
    std::optional<Embedding> propagated;
    std::optional<Creature> creature;
    std::vector<int> a_set; // audit: the greedy maximal family A
    std::vector<int> w_set; // audit: union of the branch-copy images
};

EngineOutcome creature_or_embedding(const Graph& g, int v, int d, int k,
                                    color_t tau, const NeighborhoodColorer& colorer,
                                    EngineStats* stats = nullptr);

struct EmbeddingResult {
    RootedTree tree;
    Embedding embedding;
    int anchor = -1; // the declared image of the root
};

struct ColoringResult {
    Coloring coloring;
    std::vector<PeelRecord> peels;
};

/// Exactly one branch is set and it passed its verifier before returning.
struct DichotomyResult {
    int d = 0, k = 0, t = 0;
    color_t bound = 0;
    std::optional<EmbeddingResult> embedding;
    std::optional<ColoringResult> coloring;
};

/// The level-t engine: returns a path-induced spider(d, k) embedding or a
/// proper coloring with palette B(t, d, k). Neighborhood colorings come
/// from the level-(t-1) engine; a level-(t-1) embedding short-circuits.
/// The coloring bound is unconditional; the promise that an embedding
/// appears whenever chi(G) > B(t) additionally needs omega(G) < t, which
/// is not checked here. At t <= 2 an edge in the graph means that
/// assumption already failed and a PreconditionError is raised.
DichotomyResult spider_dichotomy(const Graph& g, int d, int k, int t,
                                 EngineStats* stats = nullptr);

/// General rooted trees, via the spider cover: a fast direct search for
/// the tree short-circuits; otherwise the spider engine runs and an
/// embedding branch is restricted back to the tree.
DichotomyResult tree_dichotomy(const Graph& g, const RootedTree& tree, int t,
                               EngineStats* stats = nullptr);

} // namespace pitree

#endif // PITREE_DICHOTOMY_HPP
