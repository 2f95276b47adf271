#ifndef PITREE_GRAPH_HPP
#define PITREE_GRAPH_HPP

#include "pitree/bitset.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pitree {

using VertexSet = Bitset;
using color_t = std::int64_t; // palettes from the bound table can exceed 2^31

/// Immutable simple undirected graph on vertices 0..n-1 with bitset
/// adjacency rows (constant-time edge queries).
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Rejects self-loops, duplicate
    /// edges (in either orientation) and out-of-range endpoints.
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_edge(int u, int v) const;
    int degree(int v) const;

    /// N(v): the set of vertices adjacent to v.
    const VertexSet& neighbors(int v) const;

    /// M(v) = V \ (N(v) ∪ {v}).
    VertexSet non_neighborhood(int v) const;

    VertexSet vertex_set() const { return Bitset::full(n_); }

    /// True iff no edge has both endpoints in s.
    bool is_stable(const VertexSet& s) const;

    /// Sorted edge list, u < v.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// Canonical byte encoding of (n, adjacency); equal iff graphs equal.
    std::string adjacency_key() const;

private:
    void check_vertex(int v) const;
    int n_ = 0;
    std::vector<Bitset> adj_;
    std::vector<std::pair<int, int>> edges_;
};

/// Subgraph induced on a vertex subset, together with both index maps.
/// Vertices of the subgraph are the members of the subset in ascending
/// order, renumbered from 0.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_sub;    // parent vertex -> sub vertex, -1 if absent
    std::vector<int> to_parent; // sub vertex -> parent vertex
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Vertex coloring with a declared palette {1..palette}. Entry 0 means
/// unassigned; a coloring of an induced subgraph leaves the rest at 0.
struct Coloring {
    std::vector<color_t> assignment;
    color_t palette = 0;

    Coloring() = default;
    Coloring(int n, color_t palette_size) : assignment(n, 0), palette(palette_size) {}

    bool total() const;
    int colors_used() const; // number of distinct assigned values
};

/// True iff no edge of g is monochromatic. The coloring must be total and
/// within the palette; a partial or out-of-palette assignment is an
/// InputError, distinct from returning false.
bool is_proper_coloring(const Graph& g, const Coloring& coloring);

/// Same check restricted to an induced subgraph: assignment must cover
/// exactly `domain` and be within the palette.
bool is_proper_on(const Graph& g, const Coloring& coloring, const VertexSet& domain);

} // namespace pitree

#endif // PITREE_GRAPH_HPP
