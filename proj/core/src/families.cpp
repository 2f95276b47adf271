#include "pitree/families.hpp"

#include "pitree/errors.hpp"

#include <algorithm>
#include <numeric>

namespace pitree {

Graph mycielskian(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges(g.edges());
    // shadow of u is n+u, apex is 2n
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(n + u, v);
        edges.emplace_back(n + v, u);
    }
    for (int u = 0; u < n; ++u) edges.emplace_back(2 * n, n + u);
    return Graph::from_edges(2 * n + 1, edges);
}

Graph kneser(int n, int s) {
    if (s < 1 || n < 2 * s) throw InputError("kneser requires n >= 2s >= 2");
    std::vector<std::uint64_t> subsets;
    // s-subsets of {0..n-1} as bitmasks, generated in lexicographic order
    // of the member lists.
    std::vector<int> pick(s);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
        std::uint64_t mask = 0;
        for (int x : pick) mask |= std::uint64_t{1} << x;
        subsets.push_back(mask);
        int i = s - 1;
        while (i >= 0 && pick[i] == n - s + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = i + 1; j < subsets.size(); ++j)
            if ((subsets[i] & subsets[j]) == 0)
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph::from_edges(static_cast<int>(subsets.size()), edges);
}

Graph complete_bipartite(int m, int n) {
    if (m < 0 || n < 0) throw InputError("part sizes must be nonnegative");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) edges.emplace_back(u, m + v);
    return Graph::from_edges(m + n, edges);
}

Graph path_graph(int n) {
    if (n < 0) throw InputError("path size must be nonnegative");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw InputError("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    edges.emplace_back(0, n - 1);
    return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
    if (n < 0) throw InputError("size must be nonnegative");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

namespace {
struct Lcg {
    std::uint64_t state;
    explicit Lcg(std::uint64_t seed) : state(seed) {}
    double next_unit() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<double>(state >> 11) * 0x1.0p-53;
    }
};
} // namespace

Graph random_graph(int n, double p, std::uint64_t seed) {
    if (n < 0) throw InputError("size must be nonnegative");
    if (p < 0.0 || p > 1.0) throw InputError("edge probability must lie in [0,1]");
    Lcg rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_unit() < p) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph make_family(const FamilySpec& spec) {
    if (spec.family == "mycielski") {
        if (spec.order < 2 || spec.order > 11)
            throw InputError("mycielski order must lie in [2, 11]");
        Graph g = complete_graph(2);
        for (int j = 3; j <= spec.order; ++j) g = mycielskian(g);
        return g;
    }
    if (spec.family == "kneser") return kneser(spec.n, spec.s);
    if (spec.family == "complete_bipartite") return complete_bipartite(spec.m, spec.n);
    if (spec.family == "random") {
        if (spec.p < 0) throw InputError("random family needs --p");
        return random_graph(spec.n, spec.p, spec.seed);
    }
    if (spec.family == "path") return path_graph(spec.n);
    if (spec.family == "cycle") return cycle_graph(spec.n);
    if (spec.family == "complete") return complete_graph(spec.n);
    throw InputError("unknown family: " + spec.family);
}

// ---- chromatic number ----

namespace {

struct ChiSearch {
    const Graph& g;
    std::vector<int> order; // descending degree
    std::vector<color_t> color;
    std::vector<color_t> best_color;
    int best;

    explicit ChiSearch(const Graph& graph) : g(graph) {
        const int n = g.vertex_count();
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
        });
        color.assign(n, 0);
        best = n + 1;
    }

    bool admissible(int v, color_t c) const {
        const Bitset& nb = g.neighbors(v);
        for (int u = nb.first(); u >= 0; u = nb.next(u))
            if (color[u] == c) return false;
        return true;
    }

    void dive(int idx, int used) {
        if (used >= best) return;
        if (idx == g.vertex_count()) {
            best = used;
            best_color = color;
            return;
        }
        int v = order[idx];
        int limit = std::min(used + 1, best - 1);
        for (color_t c = 1; c <= limit; ++c) {
            if (!admissible(v, c)) continue;
            color[v] = c;
            dive(idx + 1, std::max<int>(used, static_cast<int>(c)));
            color[v] = 0;
        }
    }
};

} // namespace

ChromaticResult chromatic_number_exact(const Graph& g, int max_n) {
    if (g.vertex_count() > max_n)
        throw BudgetError("chromatic oracle: graph too large (n = " +
                          std::to_string(g.vertex_count()) + ", budget " +
                          std::to_string(max_n) + ")");
    ChromaticResult out;
    if (g.vertex_count() == 0) {
        out.chi = 0;
        out.witness = Coloring(0, 0);
        return out;
    }
    ChiSearch search(g);
    search.dive(0, 0);
    out.chi = search.best;
    out.witness.assignment = search.best_color;
    out.witness.palette = search.best;
    return out;
}

// ---- clique number ----

namespace {
void clique_expand(const Graph& g, int size, Bitset cand, int& best) {
    if (size > best) best = size;
    for (int v = cand.first(); v >= 0; v = cand.next(v)) {
        if (size + cand.count() <= best) return;
        cand.reset(v);
        clique_expand(g, size + 1, cand & g.neighbors(v), best);
    }
}
} // namespace

int clique_number_exact(const Graph& g, int max_n) {
    if (g.vertex_count() > max_n)
        throw BudgetError("clique oracle: graph too large (n = " +
                          std::to_string(g.vertex_count()) + ", budget " +
                          std::to_string(max_n) + ")");
    int best = 0;
    clique_expand(g, 0, g.vertex_set(), best);
    return best;
}

// ---- brute-force path-induced search ----

namespace {

bool image_is_induced_path(const Graph& g, const std::vector<int>& path,
                           const Embedding& phi) {
    for (std::size_t i = 0; i < path.size(); ++i)
        for (std::size_t j = i + 1; j < path.size(); ++j) {
            bool adjacent = g.has_edge(phi.map[path[i]], phi.map[path[j]]);
            if (adjacent != (j == i + 1)) return false;
        }
    return true;
}

struct BruteSearch {
    const Graph& g;
    const RootedTree& t;
    std::optional<int> anchor;
    std::vector<std::vector<int>> root_path; // per vertex, root..vertex
    std::vector<std::vector<int>> triggered; // paths fully assigned at id
    Embedding phi;
    std::vector<char> used;

    BruteSearch(const Graph& graph, const RootedTree& tree, std::optional<int> a)
        : g(graph), t(tree), anchor(a), root_path(tree.vertex_count()),
          triggered(tree.vertex_count()), used(graph.vertex_count(), 0) {
        phi.map.assign(t.vertex_count(), -1);
        for (int z = 0; z < t.vertex_count(); ++z) {
            std::vector<int> path;
            for (int x = z; x >= 0; x = t.parent(x)) path.push_back(x);
            std::reverse(path.begin(), path.end());
            int last = *std::max_element(path.begin(), path.end());
            triggered[last].push_back(z);
            root_path[z] = std::move(path);
        }
    }

    bool assign(int v) {
        if (v == t.vertex_count()) return true;
        for (int c = 0; c < g.vertex_count(); ++c) {
            if (used[c]) continue;
            if (v == t.root() && anchor && c != *anchor) continue;
            phi.map[v] = c;
            used[c] = 1;
            bool ok = true;
            for (int z : triggered[v])
                if (!image_is_induced_path(g, root_path[z], phi)) {
                    ok = false;
                    break;
                }
            if (ok && assign(v + 1)) return true;
            phi.map[v] = -1;
            used[c] = 0;
        }
        return false;
    }
};

} // namespace

bool is_path_induced_by_definition(const Graph& g, const RootedTree& t,
                                   const Embedding& phi) {
    if (static_cast<int>(phi.map.size()) != t.vertex_count())
        throw InputError("map does not cover the tree");
    std::vector<char> seen(g.vertex_count(), 0);
    for (int v = 0; v < t.vertex_count(); ++v) {
        int img = phi.map[v];
        if (img < 0 || img >= g.vertex_count())
            throw InputError("map image out of range");
        if (seen[img]) return false; // not an isomorphism onto a subgraph
        seen[img] = 1;
    }
    for (int z = 0; z < t.vertex_count(); ++z) {
        std::vector<int> path;
        for (int x = z; x >= 0; x = t.parent(x)) path.push_back(x);
        std::reverse(path.begin(), path.end());
        if (!image_is_induced_path(g, path, phi)) return false;
    }
    return true;
}

SearchOutcome brute_force_path_induced(const Graph& g, const RootedTree& t,
                                       std::optional<int> anchor) {
    if (anchor && (*anchor < 0 || *anchor >= g.vertex_count()))
        throw InputError("anchor vertex out of range");
    SearchOutcome out;
    if (t.vertex_count() > g.vertex_count()) {
        out.status = SearchStatus::none;
        return out;
    }
    BruteSearch search(g, t, anchor);
    if (search.assign(0)) {
        out.status = SearchStatus::found;
        out.embedding = std::move(search.phi);
    } else {
        out.status = SearchStatus::none;
    }
    return out;
}

} // namespace pitree
