#include "pitree/rooted_tree.hpp"

#include "pitree/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace pitree {

RootedTree RootedTree::from_parents(
    int m, int root, std::span<const int> parent,
    std::optional<std::vector<std::vector<int>>> children_order) {
    if (m <= 0) throw InputError("tree must have at least one vertex");
    if (root < 0 || root >= m) throw InputError("tree root out of range");
    if (static_cast<int>(parent.size()) != m)
        throw InputError("parent array size does not match vertex count");
    if (parent[root] != -1) throw InputError("root must have parent -1");

    RootedTree t;
    t.m_ = m;
    t.root_ = root;
    t.parent_.assign(parent.begin(), parent.end());
    for (int v = 0; v < m; ++v) {
        if (v == root) continue;
        if (parent[v] < 0 || parent[v] >= m || parent[v] == v)
            throw InputError("invalid parent of vertex " + std::to_string(v));
    }

    // Depths via parent walks; a walk longer than m vertices means a cycle.
    t.depth_.assign(m, -1);
    t.depth_[root] = 0;
    for (int v = 0; v < m; ++v) {
        std::vector<int> chain;
        int x = v;
        while (t.depth_[x] < 0) {
            chain.push_back(x);
            x = t.parent_[x];
            if (static_cast<int>(chain.size()) > m)
                throw InputError("parent links contain a cycle");
        }
        int d = t.depth_[x];
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) t.depth_[*it] = ++d;
    }
    t.height_ = *std::max_element(t.depth_.begin(), t.depth_.end());

    t.children_.assign(m, {});
    for (int v = 0; v < m; ++v)
        if (v != root) t.children_[parent[v]].push_back(v);
    if (children_order) {
        if (static_cast<int>(children_order->size()) != m)
            throw InputError("children order must cover every vertex");
        for (int v = 0; v < m; ++v) {
            auto given = (*children_order)[v];
            auto expect = t.children_[v];
            auto sorted = given;
            std::sort(sorted.begin(), sorted.end());
            std::sort(expect.begin(), expect.end());
            if (sorted != expect)
                throw InputError("children order of vertex " + std::to_string(v) +
                                 " is not a permutation of its children");
            t.children_[v] = std::move(given);
        }
    }

    t.bfs_order_.reserve(m);
    t.bfs_order_.push_back(root);
    for (std::size_t i = 0; i < t.bfs_order_.size(); ++i)
        for (int c : t.children_[t.bfs_order_[i]]) t.bfs_order_.push_back(c);
    if (static_cast<int>(t.bfs_order_.size()) != m)
        throw InputError("parent links do not form a connected tree");
    return t;
}

RootedTree RootedTree::spider(int d, int k) {
    if (d < 2) throw InputError("spider branching d must be at least 2");
    if (k < 1) throw InputError("spider depth k must be at least 1");
    std::uint64_t size = 1, level = 1;
    for (int j = 1; j <= k; ++j) {
        level *= static_cast<std::uint64_t>(d);
        size += level;
        if (size > 1'000'000) throw InputError("spider too large");
    }
    int m = static_cast<int>(size);
    std::vector<int> parent(m, -1);
    // Level-by-level numbering: children of the i-th vertex of level j sit
    // at positions i*d .. i*d+d-1 of level j+1.
    int level_start = 0, level_size = 1;
    while (level_start + level_size < m) {
        int next_start = level_start + level_size;
        for (int i = 0; i < level_size * d; ++i)
            parent[next_start + i] = level_start + i / d;
        level_start = next_start;
        level_size *= d;
    }
    return from_parents(m, 0, parent);
}

RootedTree RootedTree::path(int length) {
    if (length < 1) throw InputError("path must have at least one vertex");
    std::vector<int> parent(length);
    for (int i = 0; i < length; ++i) parent[i] = i - 1;
    return from_parents(length, 0, parent);
}

void RootedTree::check_vertex(int v) const {
    if (v < 0 || v >= m_)
        throw InputError("tree vertex out of range: " + std::to_string(v));
}

int RootedTree::parent(int v) const {
    check_vertex(v);
    return parent_[v];
}

int RootedTree::depth(int v) const {
    check_vertex(v);
    return depth_[v];
}

const std::vector<int>& RootedTree::children(int v) const {
    check_vertex(v);
    return children_[v];
}

bool RootedTree::is_ancestor(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    while (depth_[v] > depth_[u]) v = parent_[v];
    return u == v;
}

int RootedTree::join(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    while (depth_[u] > depth_[v]) u = parent_[u];
    while (depth_[v] > depth_[u]) v = parent_[v];
    while (u != v) {
        u = parent_[u];
        v = parent_[v];
    }
    return u;
}

PairType RootedTree::pair_type(int u, int v) const {
    if (comparable(u, v))
        throw InputError("pair type is defined only for incomparable vertices");
    int w = join(u, v);
    // Children of the join that u and v descend through.
    int cu = u, cv = v;
    while (parent_[cu] != w) cu = parent_[cu];
    while (parent_[cv] != w) cv = parent_[cv];
    const auto& order = children_[w];
    int pu = static_cast<int>(std::find(order.begin(), order.end(), cu) - order.begin());
    int pv = static_cast<int>(std::find(order.begin(), order.end(), cv) - order.begin());
    int earlier = pu < pv ? u : v;
    int later = pu < pv ? v : u;
    return PairType{depth_[earlier], depth_[later], depth_[w]};
}

SpiderCover spider_cover(const RootedTree& t) {
    int max_children = 0;
    for (int v = 0; v < t.vertex_count(); ++v)
        max_children = std::max(max_children, static_cast<int>(t.children(v).size()));
    SpiderCover cover;
    cover.d = std::max(2, max_children);
    cover.k = std::max(1, t.height());

    // Embed recursively: the i-th child of a vertex at spider position s,
    // depth j, goes to level_start(j+1) + index_within_level(s)*d + i.
    std::vector<std::int64_t> level_start(cover.k + 2, 0);
    std::int64_t sz = 1;
    for (int j = 1; j <= cover.k + 1; ++j) {
        level_start[j] = level_start[j - 1] + sz;
        sz *= cover.d;
        if (level_start[j] > 1'000'000)
            throw InputError("covering spider too large for this tree");
    }
    cover.inclusion.assign(t.vertex_count(), -1);
    cover.inclusion[t.root()] = 0;
    for (int v : t.bfs_order()) {
        std::int64_t s = cover.inclusion[v];
        int j = t.depth(v);
        std::int64_t within = s - level_start[j];
        const auto& kids = t.children(v);
        for (std::size_t i = 0; i < kids.size(); ++i)
            cover.inclusion[kids[i]] = static_cast<int>(
                level_start[j + 1] + within * cover.d + static_cast<std::int64_t>(i));
    }
    return cover;
}

} // namespace pitree
