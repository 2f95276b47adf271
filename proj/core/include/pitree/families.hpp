#ifndef PITREE_FAMILIES_HPP
#define PITREE_FAMILIES_HPP

#include "pitree/embedding.hpp"
#include "pitree/graph.hpp"
#include "pitree/rooted_tree.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace pitree {

// ---- generators ----

/// Standard Mycielski construction: 2n+1 vertices, a copy of g, a shadow
/// u' per vertex u adjacent to N(u), and an apex adjacent to all shadows.
/// Preserves triangle-freeness and raises the chromatic number by one.
Graph mycielskian(const Graph& g);

/// Kneser graph: vertices are the s-subsets of {1..n} in lexicographic
/// order, edges join disjoint subsets. Requires n >= 2s >= 2.
Graph kneser(int n, int s);

Graph complete_bipartite(int m, int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

/// Seed-deterministic G(n, p). Pairs (u,v), u < v, are visited in
/// lexicographic order and each edge is kept iff the next draw of a
/// 64-bit LCG (Knuth's constants: x <- 6364136223846793005*x +
/// 1442695040888963407, uniform value (x >> 11) / 2^53) is below p.
Graph random_graph(int n, double p, std::uint64_t seed);

/// CLI-facing family description.
struct FamilySpec {
    std::string family; // mycielski | kneser | complete_bipartite | random
                        // | path | cycle | complete
    int n = -1;
    int m = -1;
    int s = -1;
    int order = -1;     // mycielski chain index: 2 -> K_2, 3 -> C_5, ...
    double p = -1.0;
    std::uint64_t seed = 0;
};

Graph make_family(const FamilySpec& spec);

// ---- exact oracles (deliberately naive, code-disjoint from the solvers
// they check) ----

struct ChromaticResult {
    int chi = 0;
    Coloring witness;
};

/// Exact chromatic number by branch and bound with a witness coloring.
/// Graphs above the budget raise BudgetError("too large"), never a value.
ChromaticResult chromatic_number_exact(const Graph& g, int max_n = 20);

/// Exact clique number. Budgeted like the chromatic oracle.
int clique_number_exact(const Graph& g, int max_n = 60);

/// The literal definition of a path-induced copy: the map is injective
/// and the image of every root-to-vertex path is an induced path of g.
/// Requires a total map.
bool is_path_induced_by_definition(const Graph& g, const RootedTree& t,
                                   const Embedding& phi);

/// Exhaustive search over injective maps in lexicographic order (tree
/// vertices assigned in id order, candidates ascending), pruned only by
/// the literal path-by-path check on fully assigned root paths. Shares no
/// code with the embed search; the first witness in lexicographic map
/// order is returned.
SearchOutcome brute_force_path_induced(const Graph& g, const RootedTree& t,
                                       std::optional<int> anchor = std::nullopt);

} // namespace pitree

#endif // PITREE_FAMILIES_HPP
