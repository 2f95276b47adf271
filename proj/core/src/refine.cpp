#include "pitree/refine.hpp"

#include "pitree/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace pitree {

namespace {

void require_valid(const Graph& g, const RootedTree& t, const Embedding& phi) {
    auto check = verify_path_induced(g, t, phi);
    if (!check.ok())
        throw InputError("embedding is not path-induced: " + check.detail);
}

// Root child count and height of a complete d-ary spider; throws when the
// tree has any other shape.
std::pair<int, int> spider_shape(const RootedTree& t) {
    int k = t.height();
    if (k < 1) throw InputError("refinement host must have positive height");
    int d = static_cast<int>(t.children(t.root()).size());
    if (d < 2) throw InputError("refinement host must branch at the root");
    for (int v = 0; v < t.vertex_count(); ++v) {
        std::size_t want = t.depth(v) < k ? static_cast<std::size_t>(d) : 0;
        if (t.children(v).size() != want)
            throw InputError("refinement host is not a spider");
    }
    return {d, k};
}

} // namespace

bool is_level_stable(const Graph& g, const RootedTree& t, const Embedding& phi) {
    require_valid(g, t, phi);
    std::map<int, std::vector<int>> levels;
    for (int v = 0; v < t.vertex_count(); ++v)
        levels[t.depth(v)].push_back(phi.map[v]);
    for (const auto& [depth, image] : levels)
        for (std::size_t i = 0; i < image.size(); ++i)
            for (std::size_t j = i + 1; j < image.size(); ++j)
                if (g.has_edge(image[i], image[j])) return false;
    return true;
}

bool is_type_uniform(const Graph& g, const RootedTree& t, const Embedding& phi) {
    require_valid(g, t, phi);
    std::map<PairType, bool> seen;
    for (int u = 0; u < t.vertex_count(); ++u)
        for (int v = u + 1; v < t.vertex_count(); ++v) {
            if (t.comparable(u, v)) continue;
            PairType type = t.pair_type(u, v);
            bool adjacent = g.has_edge(phi.map[u], phi.map[v]);
            auto [it, fresh] = seen.emplace(type, adjacent);
            if (!fresh && it->second != adjacent) return false;
        }
    return true;
}

namespace {

// Backtracking selection of d children per internal vertex, top-down in
// breadth-first order. Subsets are enumerated in lexicographic order, a
// fixed processing order for the cross-group constraints.
struct RefineSearch {
    const Graph& g;
    const RootedTree& host;
    const Embedding& phi;
    const RootedTree& out_tree;
    int d;
    RefineGoals goals;

    std::vector<int> sel; // output vertex -> host vertex, -1 if not yet chosen

    RefineSearch(const Graph& graph, const RootedTree& host_tree,
                 const Embedding& embedding, const RootedTree& target, int branching,
                 RefineGoals wanted)
        : g(graph), host(host_tree), phi(embedding), out_tree(target), d(branching),
          goals(wanted), sel(target.vertex_count(), -1) {}

    int image(int out_v) const { return phi.map[sel[out_v]]; }

    // Constraints over all currently selected vertices; cheap at desk
    // scale, so re-checked in full after each subset choice.
    bool consistent() const {
        if (goals.level_stable) {
            for (int u = 0; u < out_tree.vertex_count(); ++u) {
                if (sel[u] < 0) continue;
                for (int v = u + 1; v < out_tree.vertex_count(); ++v) {
                    if (sel[v] < 0) continue;
                    if (out_tree.depth(u) == out_tree.depth(v) &&
                        g.has_edge(image(u), image(v)))
                        return false;
                }
            }
        }
        if (goals.type_uniform) {
            std::map<PairType, bool> seen;
            for (int u = 0; u < out_tree.vertex_count(); ++u) {
                if (sel[u] < 0) continue;
                for (int v = u + 1; v < out_tree.vertex_count(); ++v) {
                    if (sel[v] < 0) continue;
                    if (out_tree.comparable(u, v)) continue;
                    PairType type = out_tree.pair_type(u, v);
                    bool adjacent = g.has_edge(image(u), image(v));
                    auto [it, fresh] = seen.emplace(type, adjacent);
                    if (!fresh && it->second != adjacent) return false;
                }
            }
        }
        return true;
    }

    // idx walks the internal output vertices in BFS order.
    bool choose(std::size_t idx) {
        const auto& order = out_tree.bfs_order();
        while (idx < order.size() && out_tree.children(order[idx]).empty()) ++idx;
        if (idx == order.size()) return true;
        int out_v = order[idx];
        const auto& host_kids = host.children(sel[out_v]);
        const auto& out_kids = out_tree.children(out_v);
        const int avail = static_cast<int>(host_kids.size());

        // Lexicographic d-subsets of the host children; each stage first
        // requires the chosen sibling group itself to be workable, then
        // the cross-group constraints.
        std::vector<int> pick(d);
        std::iota(pick.begin(), pick.end(), 0);
        for (;;) {
            for (int i = 0; i < d; ++i) sel[out_kids[i]] = host_kids[pick[i]];
            if (consistent() && choose(idx + 1)) return true;
            for (int i = 0; i < d; ++i) sel[out_kids[i]] = -1;
            int i = d - 1;
            while (i >= 0 && pick[i] == avail - d + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
        }
        return false;
    }
};

} // namespace

std::optional<Refined> refine_embedding(const Graph& g, const RootedTree& host,
                                        const Embedding& phi, int d,
                                        RefineGoals goals) {
    require_valid(g, host, phi);
    auto [big_d, k] = spider_shape(host);
    if (d < 2) throw InputError("target branching must be at least 2");
    if (d > big_d) throw InputError("target branching exceeds the host's");

    RootedTree out_tree = RootedTree::spider(d, k);
    RefineSearch search(g, host, phi, out_tree, d, goals);
    search.sel[out_tree.root()] = host.root();
    if (!search.choose(0)) return std::nullopt; // insufficient branching

    Refined out;
    out.embedding.map.resize(out_tree.vertex_count());
    for (int v = 0; v < out_tree.vertex_count(); ++v)
        out.embedding.map[v] = phi.map[search.sel[v]];
    out.tree = std::move(out_tree);

    // The predicates are the gate, not the construction.
    auto check = verify_path_induced(g, out.tree, out.embedding);
    if (!check.ok())
        throw InternalError("refined embedding failed verification: " + check.detail);
    if (goals.level_stable && !is_level_stable(g, out.tree, out.embedding))
        throw InternalError("refined embedding is not level-stable");
    if (goals.type_uniform && !is_type_uniform(g, out.tree, out.embedding))
        throw InternalError("refined embedding is not type-uniform");
    return out;
}

} // namespace pitree
