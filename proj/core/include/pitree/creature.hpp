#ifndef PITREE_CREATURE_HPP
#define PITREE_CREATURE_HPP

#include "pitree/errors.hpp"
#include "pitree/graph.hpp"

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace pitree {

/// A c-creature of a host graph: every member has fewer than c neighbors
/// outside the set. Carries a proper witness coloring of the induced
/// subgraph (assignment set exactly on members).
struct Creature {
    VertexSet members;
    int c = 0;
    Coloring witness;
};

/// Definitional check: every vertex of x has fewer than c neighbors in
/// V(g) \ x.
bool is_creature(const Graph& g, const VertexSet& x, int c);

enum class ExtendErrorKind {
    palette_too_small, // palette < parts * c
    part_not_stable,
    creature_violated, // some member has >= c neighbors outside x
    base_improper,     // the outside coloring is partial, out of palette,
                       // or improper on g \ x
};

struct ExtendError : Error {
    ExtendError(ExtendErrorKind k, const std::string& msg) : Error(msg), kind(k) {}
    ExtendErrorKind kind;
};

/// Extends a proper coloring of g \ x across a c-creature x, given a
/// stable partition x_1..x_a of x. Part i draws from the color block
/// J_i = {(i-1)c+1 .. ic}, taking the smallest color not used by a
/// neighbor outside x; this always succeeds because each member has
/// fewer than c outside neighbors. The result agrees with `outside` off
/// x and uses colors within the declared palette.
Coloring extend_coloring(const Graph& g, const VertexSet& x, int c,
                         const std::vector<VertexSet>& parts,
                         const Coloring& outside, color_t palette);

/// One record per peel, kept as certificate metadata.
struct PeelRecord {
    std::vector<int> members; // host-graph vertex ids
    int c = 0;
    color_t witness_palette = 0; // the a of this peel
};

struct PeelResult {
    std::optional<Coloring> coloring; // empty iff the provider aborted
    std::vector<PeelRecord> peels;
};

/// Called with the current residual graph (vertices renumbered 0..r-1),
/// the residual-to-host vertex map, and the chosen vertex; returns a
/// creature of the residual containing that vertex, or nullopt to abort
/// the peeling.
using CreatureProvider = std::function<std::optional<Creature>(
    const Graph& residual, std::span<const int> to_host, int vertex)>;

/// Repeatedly peels provider-supplied creatures (always from the
/// smallest-id residual vertex) until the graph is exhausted, then
/// rebuilds a proper coloring of g by extending backwards over the peels.
/// Every peel must satisfy witness_palette * c <= palette.
PeelResult peel_coloring(const Graph& g, color_t palette,
                         const CreatureProvider& provider);

} // namespace pitree

#endif // PITREE_CREATURE_HPP
