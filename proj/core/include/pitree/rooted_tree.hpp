#ifndef PITREE_ROOTED_TREE_HPP
#define PITREE_ROOTED_TREE_HPP

#include <optional>
#include <span>
#include <vector>

namespace pitree {

/// Type of an incomparable pair: depths of the earlier vertex, the later
/// vertex and their join. "Earlier" is decided by the order of the two
/// children of the join the vertices descend through.
struct PairType {
    int earlier_depth = 0;
    int later_depth = 0;
    int join_depth = 0;
    bool operator==(const PairType&) const = default;
    auto operator<=>(const PairType&) const = default;
};

/// Rooted tree with a per-vertex linear order of children. The order is
/// part of the tree's identity: pair types depend on it.
class RootedTree {
public:
    RootedTree() = default;

    /// parent[root] must be -1; every other entry names the parent.
    /// children_order, when given, must list each vertex's children as a
    /// permutation; the default order is ascending vertex id.
    static RootedTree from_parents(
        int m, int root, std::span<const int> parent,
        std::optional<std::vector<std::vector<int>>> children_order = std::nullopt);

    /// The spider tree: a complete d-ary tree of depth k, numbered level
    /// by level (root 0, then the depth-1 vertices in child order, ...).
    /// It has 1 + d + d^2 + ... + d^k vertices and d^k leaves.
    static RootedTree spider(int d, int k);

    /// Path on `length` vertices rooted at one end; vertex i has parent i-1.
    static RootedTree path(int length);

    int vertex_count() const { return m_; }
    int root() const { return root_; }
    int parent(int v) const;              // -1 for the root
    int depth(int v) const;
    int height() const { return height_; }
    const std::vector<int>& children(int v) const;

    /// Inclusive: every vertex is an ancestor of itself.
    bool is_ancestor(int u, int v) const;

    bool comparable(int u, int v) const { return is_ancestor(u, v) || is_ancestor(v, u); }

    /// Deepest common ancestor.
    int join(int u, int v) const;

    /// Defined only for incomparable pairs; throws InputError otherwise.
    PairType pair_type(int u, int v) const;

    /// Vertices in breadth-first order from the root, children visited in
    /// children_order. Parents always precede children.
    const std::vector<int>& bfs_order() const { return bfs_order_; }

private:
    void check_vertex(int v) const;
    int m_ = 0;
    int root_ = -1;
    int height_ = 0;
    std::vector<int> parent_;
    std::vector<int> depth_;
    std::vector<std::vector<int>> children_;
    std::vector<int> bfs_order_;
};

/// Embedding of a tree into the smallest spider that hosts it: d is the
/// maximum child count (clamped to 2), k the height (clamped to 1), and
/// inclusion maps tree vertices to spider vertices preserving the root,
/// the parent relation and depth.
struct SpiderCover {
    int d = 0;
    int k = 0;
    std::vector<int> inclusion;
};

SpiderCover spider_cover(const RootedTree& t);

} // namespace pitree

#endif // PITREE_ROOTED_TREE_HPP
