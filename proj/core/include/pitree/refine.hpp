#ifndef PITREE_REFINE_HPP
#define PITREE_REFINE_HPP

#include "pitree/embedding.hpp"
#include "pitree/graph.hpp"
#include "pitree/rooted_tree.hpp"

#include <optional>

namespace pitree {

/// True iff, for every depth i, the images of the depth-i tree vertices
/// form a stable set. Requires a valid path-induced embedding.
bool is_level_stable(const Graph& g, const RootedTree& t, const Embedding& phi);

/// True iff image adjacency of incomparable pairs depends only on the
/// pair type. Requires a valid path-induced embedding.
bool is_type_uniform(const Graph& g, const RootedTree& t, const Embedding& phi);

struct RefineGoals {
    bool level_stable = false;
    bool type_uniform = false;
};

struct Refined {
    RootedTree tree; // the canonical spider(d, k)
    Embedding embedding;
};

/// Extracts a spider(d, k) sub-copy from a spider(D, k) embedding,
/// choosing d children per internal vertex top-down with backtracking so
/// that the requested predicates hold. Makes no quantitative promise: if
/// no selection works the outcome is an honest "insufficient branching"
/// (nullopt), not an error. Successful outputs pass verify_path_induced
/// and every requested predicate; the output image set is a subset of the
/// input image set.
std::optional<Refined> refine_embedding(const Graph& g, const RootedTree& host,
                                        const Embedding& phi, int d,
                                        RefineGoals goals);

} // namespace pitree

#endif // PITREE_REFINE_HPP
