#include "pitree/embedding.hpp"

#include "pitree/errors.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <string>
#include <thread>

namespace pitree {

EmbeddingCheck verify_path_induced(const Graph& g, const RootedTree& t,
                                   const Embedding& phi) {
    const int m = t.vertex_count();
    const int n = g.vertex_count();
    if (static_cast<int>(phi.map.size()) != m)
        return {EmbeddingStatus::not_total, "map does not cover the tree"};
    for (int v = 0; v < m; ++v)
        if (phi.map[v] < 0 || phi.map[v] >= n)
            return {EmbeddingStatus::not_total,
                    "tree vertex " + std::to_string(v) + " has no valid image"};
    std::vector<char> seen(n, 0);
    for (int v = 0; v < m; ++v) {
        if (seen[phi.map[v]])
            return {EmbeddingStatus::not_injective,
                    "image " + std::to_string(phi.map[v]) + " is used twice"};
        seen[phi.map[v]] = 1;
    }
    for (int v = 0; v < m; ++v) {
        if (v == t.root()) continue;
        if (!g.has_edge(phi.map[v], phi.map[t.parent(v)]))
            return {EmbeddingStatus::missing_edge,
                    "tree edge (" + std::to_string(t.parent(v)) + "," +
                        std::to_string(v) + ") maps to a non-edge"};
    }
    // Comparable pairs at tree distance >= 2 must map to non-adjacent pairs;
    // this makes every root path induced.
    for (int v = 0; v < m; ++v) {
        int a = t.parent(v);
        if (a < 0) continue;
        for (a = t.parent(a); a >= 0; a = t.parent(a)) {
            if (g.has_edge(phi.map[v], phi.map[a]))
                return {EmbeddingStatus::ancestor_chord,
                        "images of ancestor pair (" + std::to_string(a) + "," +
                            std::to_string(v) + ") are adjacent"};
        }
    }
    return {};
}

namespace {

// Canonical shape id per subtree, used to prune orderings of
// interchangeable sibling branches when the option is on.
std::vector<int> subtree_shapes(const RootedTree& t) {
    std::vector<int> shape(t.vertex_count(), -1);
    std::map<std::vector<int>, int> canon;
    const auto& order = t.bfs_order();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        std::vector<int> child_shapes;
        for (int c : t.children(*it)) child_shapes.push_back(shape[c]);
        std::sort(child_shapes.begin(), child_shapes.end());
        auto [pos, inserted] =
            canon.emplace(std::move(child_shapes), static_cast<int>(canon.size()));
        shape[*it] = pos->second;
    }
    return shape;
}

struct Searcher {
    const Graph& g;
    const RootedTree& t;
    bool symmetry_break;
    std::optional<std::uint64_t> budget;

    std::vector<int> order;                    // placement order (BFS)
    std::vector<std::vector<int>> far_ancestors; // ancestors at distance >= 2
    std::vector<int> prev_same_shape_sibling;  // -1 if none or option off

    std::vector<int> image;
    std::vector<char> used;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;

    Searcher(const Graph& graph, const RootedTree& tree, const SearchOptions& opt)
        : g(graph), t(tree), symmetry_break(opt.sibling_symmetry_break),
          budget(opt.node_budget), order(tree.bfs_order()),
          far_ancestors(tree.vertex_count()),
          prev_same_shape_sibling(tree.vertex_count(), -1),
          image(tree.vertex_count(), -1), used(graph.vertex_count(), 0) {
        for (int v = 0; v < t.vertex_count(); ++v) {
            int a = t.parent(v);
            if (a < 0) continue;
            for (a = t.parent(a); a >= 0; a = t.parent(a))
                far_ancestors[v].push_back(a);
        }
        if (symmetry_break) {
            auto shape = subtree_shapes(t);
            for (int v = 0; v < t.vertex_count(); ++v) {
                const auto& kids = t.children(v);
                for (std::size_t i = 1; i < kids.size(); ++i)
                    if (shape[kids[i]] == shape[kids[i - 1]])
                        prev_same_shape_sibling[kids[i]] = kids[i - 1];
            }
        }
    }

    bool feasible(int x, int c) const {
        if (used[c]) return false;
        int p = t.parent(x);
        if (p >= 0 && !g.has_edge(c, image[p])) return false;
        for (int a : far_ancestors[x])
            if (g.has_edge(c, image[a])) return false;
        int s = prev_same_shape_sibling[x];
        if (s >= 0 && c < image[s]) return false;
        return true;
    }

    bool place(std::size_t i, std::optional<int> anchor) {
        if (i == order.size()) return true;
        int x = order[i];
        auto try_candidate = [&](int c) -> bool {
            ++nodes;
            if (budget && nodes > *budget) {
                out_of_budget = true;
                return false;
            }
            if (!feasible(x, c)) return false;
            image[x] = c;
            used[c] = 1;
            if (place(i + 1, anchor)) return true;
            image[x] = -1;
            used[c] = 0;
            return false;
        };
        if (i == 0 && anchor) return try_candidate(*anchor);
        if (i == 0) {
            for (int c = 0; c < g.vertex_count(); ++c) {
                if (try_candidate(c)) return true;
                if (out_of_budget) return false;
            }
            return false;
        }
        // Non-root vertices must be adjacent to the parent image.
        const Bitset& cand = g.neighbors(image[t.parent(x)]);
        for (int c = cand.first(); c >= 0; c = cand.next(c)) {
            if (try_candidate(c)) return true;
            if (out_of_budget) return false;
        }
        return false;
    }

    SearchOutcome run(std::optional<int> anchor) {
        SearchOutcome out;
        if (t.vertex_count() > g.vertex_count()) {
            out.status = SearchStatus::none;
            return out;
        }
        bool ok = place(0, anchor);
        out.nodes_expanded = nodes;
        if (ok) {
            out.status = SearchStatus::found;
            out.embedding = Embedding{image};
        } else {
            out.status = out_of_budget ? SearchStatus::budget_exceeded
                                       : SearchStatus::none;
        }
        return out;
    }
};

SearchOutcome parallel_anchor_scan(const Graph& g, const RootedTree& t,
                                   const SearchOptions& options) {
    const int n = g.vertex_count();
    std::vector<std::optional<Embedding>> found(n);
    std::vector<std::uint64_t> node_counts(n, 0);
    std::atomic<int> next{0};
    std::atomic<int> best{n};
    auto worker = [&] {
        for (;;) {
            int a = next.fetch_add(1);
            if (a >= n) return;
            if (a > best.load()) continue; // cannot improve on a smaller anchor
            SearchOptions anchored = options;
            anchored.anchor = a;
            anchored.threads = 1;
            Searcher s(g, t, anchored);
            auto r = s.run(a);
            node_counts[a] = r.nodes_expanded;
            if (r.status == SearchStatus::found) {
                found[a] = std::move(r.embedding);
                int cur = best.load();
                while (a < cur && !best.compare_exchange_weak(cur, a)) {}
            }
        }
    };
    int workers = std::max(1, std::min(options.threads, n));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    SearchOutcome out;
    for (std::uint64_t c : node_counts) out.nodes_expanded += c;
    for (int a = 0; a < n; ++a) {
        if (found[a]) {
            out.status = SearchStatus::found;
            out.embedding = std::move(found[a]);
            return out;
        }
    }
    out.status = SearchStatus::none;
    return out;
}

} // namespace

SearchOutcome find_path_induced(const Graph& g, const RootedTree& t,
                                const SearchOptions& options) {
    if (options.anchor &&
        (*options.anchor < 0 || *options.anchor >= g.vertex_count()))
        throw InputError("anchor vertex out of range");
    if (options.threads < 1) throw InputError("threads must be at least 1");
    if (t.vertex_count() > g.vertex_count())
        return {SearchStatus::none, std::nullopt, 0};
    // Parallel exploration is restricted to unbudgeted unanchored searches,
    // where the merged result provably equals the sequential one.
    if (options.threads > 1 && !options.anchor && !options.node_budget)
        return parallel_anchor_scan(g, t, options);
    Searcher s(g, t, options);
    return s.run(options.anchor);
}

Embedding restrict_embedding(const Graph& g, const RootedTree& host_tree,
                             const Embedding& phi, const RootedTree& sub_tree,
                             const std::vector<int>& inclusion) {
    auto host_check = verify_path_induced(g, host_tree, phi);
    if (!host_check.ok())
        throw InputError("host embedding is not path-induced: " + host_check.detail);
    if (static_cast<int>(inclusion.size()) != sub_tree.vertex_count())
        throw InputError("inclusion does not cover the subtree");
    std::vector<char> hit(host_tree.vertex_count(), 0);
    for (int x = 0; x < sub_tree.vertex_count(); ++x) {
        int img = inclusion[x];
        if (img < 0 || img >= host_tree.vertex_count())
            throw InputError("inclusion image out of range");
        if (hit[img]) throw InputError("inclusion is not injective");
        hit[img] = 1;
    }
    if (inclusion[sub_tree.root()] != host_tree.root())
        throw InputError("inclusion must preserve the root");
    for (int x = 0; x < sub_tree.vertex_count(); ++x) {
        if (x == sub_tree.root()) continue;
        if (host_tree.parent(inclusion[x]) != inclusion[sub_tree.parent(x)])
            throw InputError("inclusion must preserve the parent relation");
    }
    Embedding out;
    out.map.resize(sub_tree.vertex_count());
    for (int x = 0; x < sub_tree.vertex_count(); ++x)
        out.map[x] = phi.map[inclusion[x]];
    auto check = verify_path_induced(g, sub_tree, out);
    if (!check.ok())
        throw InternalError("restricted embedding failed verification: " +
                            check.detail);
    return out;
}

} // namespace pitree
