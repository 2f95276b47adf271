#ifndef PITREE_EMBEDDING_HPP
#define PITREE_EMBEDDING_HPP

#include "pitree/graph.hpp"
#include "pitree/rooted_tree.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace pitree {

/// Injective map tree vertex -> graph vertex, stored positionally.
struct Embedding {
    std::vector<int> map;
};

enum class EmbeddingStatus {
    ok,
    not_total,      // malformed: entries missing or out of range
    not_injective,  // malformed: two tree vertices share an image
    missing_edge,   // a tree edge maps to a non-edge
    ancestor_chord, // images of an ancestor pair at distance >= 2 are adjacent
};

/// Verification outcome. Malformed maps (not_total / not_injective) are
/// reported distinctly from a well-formed map that is simply not
/// path-induced (missing_edge / ancestor_chord).
struct EmbeddingCheck {
    EmbeddingStatus status = EmbeddingStatus::ok;
    std::string detail;
    bool ok() const { return status == EmbeddingStatus::ok; }
    bool malformed() const {
        return status == EmbeddingStatus::not_total ||
               status == EmbeddingStatus::not_injective;
    }
};

/// Checks that phi is a path-induced copy of (T, root): injective, edge
/// preserving, and every comparable pair at tree distance >= 2 maps to a
/// non-adjacent graph pair. Equivalence with the path-by-path definition
/// is a tested invariant, not assumed.
EmbeddingCheck verify_path_induced(const Graph& g, const RootedTree& t,
                                   const Embedding& phi);

enum class SearchStatus {
    found,
    none,            // exhaustive search proved non-existence
    budget_exceeded, // distinct "unknown" outcome, never conflated with none
};

struct SearchOptions {
    std::optional<int> anchor;               // pin phi(root)
    std::optional<std::uint64_t> node_budget; // candidate placements tried
    bool sibling_symmetry_break = false;     // prune shape-equal sibling orderings
    int threads = 1; // >1 parallelizes unanchored unbudgeted searches only
};

struct SearchOutcome {
    SearchStatus status = SearchStatus::none;
    std::optional<Embedding> embedding;
    std::uint64_t nodes_expanded = 0;
};

/// Backtracking search for a path-induced copy of (T, root) in g.
/// Deterministic: tree vertices are placed in breadth-first order and
/// graph candidates tried in ascending id, so the returned certificate is
/// reproducible.
SearchOutcome find_path_induced(const Graph& g, const RootedTree& t,
                                const SearchOptions& options = {});

/// Restriction of a host-tree embedding along an inclusion map (as
/// produced by spider_cover): sub vertex x maps to phi(inclusion[x]).
/// Root paths of the subtree are root paths of the host, so the result is
/// again path-induced; this is re-verified before returning.
Embedding restrict_embedding(const Graph& g, const RootedTree& host_tree,
                             const Embedding& phi, const RootedTree& sub_tree,
                             const std::vector<int>& inclusion);

} // namespace pitree

#endif // PITREE_EMBEDDING_HPP
