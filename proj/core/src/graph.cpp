#include "pitree/graph.hpp"

#include "pitree/errors.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace pitree {

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    if (n < 0) throw InputError("vertex count must be nonnegative");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, Bitset(n));
    g.edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("edge endpoint out of range: (" + std::to_string(u) +
                             "," + std::to_string(v) + ")");
        if (u == v)
            throw InputError("self-loop rejected at vertex " + std::to_string(u));
        if (g.adj_[u].test(v))
            throw InputError("duplicate edge rejected: (" + std::to_string(u) +
                             "," + std::to_string(v) + ")");
        g.adj_[u].set(v);
        g.adj_[v].set(u);
        g.edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw InputError("vertex out of range: " + std::to_string(v));
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u].test(v);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return adj_[v].count();
}

const VertexSet& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

VertexSet Graph::non_neighborhood(int v) const {
    check_vertex(v);
    VertexSet m = adj_[v].complement();
    m.reset(v);
    return m;
}

bool Graph::is_stable(const VertexSet& s) const {
    if (s.universe() != n_) throw InputError("vertex set universe mismatch");
    for (int v = s.first(); v >= 0; v = s.next(v))
        if (adj_[v].intersects(s)) return false;
    return true;
}

std::string Graph::adjacency_key() const {
    std::string key(sizeof(int) + n_ * (adj_.empty() ? 0 : adj_[0].words().size()) * 8, '\0');
    std::size_t pos = 0;
    for (int b = 0; b < static_cast<int>(sizeof(int)); ++b)
        key[pos++] = static_cast<char>((static_cast<unsigned>(n_) >> (8 * b)) & 0xff);
    for (const auto& row : adj_)
        for (std::uint64_t w : row.words())
            for (int b = 0; b < 8; ++b) key[pos++] = static_cast<char>((w >> (8 * b)) & 0xff);
    return key;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.vertex_count()) throw InputError("vertex set universe mismatch");
    InducedSubgraph out;
    out.to_sub.assign(g.vertex_count(), -1);
    out.to_parent = s.members();
    for (std::size_t i = 0; i < out.to_parent.size(); ++i)
        out.to_sub[out.to_parent[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (s.test(u) && s.test(v))
            edges.emplace_back(out.to_sub[u], out.to_sub[v]);
    out.graph = Graph::from_edges(static_cast<int>(out.to_parent.size()), edges);
    return out;
}

bool Coloring::total() const {
    for (color_t c : assignment)
        if (c == 0) return false;
    return true;
}

int Coloring::colors_used() const {
    std::set<color_t> used;
    for (color_t c : assignment)
        if (c != 0) used.insert(c);
    return static_cast<int>(used.size());
}

bool is_proper_coloring(const Graph& g, const Coloring& coloring) {
    return is_proper_on(g, coloring, g.vertex_set());
}

bool is_proper_on(const Graph& g, const Coloring& coloring, const VertexSet& domain) {
    if (static_cast<int>(coloring.assignment.size()) != g.vertex_count())
        throw InputError("coloring size does not match graph");
    for (int v = 0; v < g.vertex_count(); ++v) {
        color_t c = coloring.assignment[v];
        if (domain.test(v)) {
            if (c == 0)
                throw InputError("partial coloring: vertex " + std::to_string(v) +
                                 " is unassigned");
            if (c < 1 || c > coloring.palette)
                throw InputError("color out of palette at vertex " + std::to_string(v));
        } else if (c != 0) {
            throw InputError("coloring assigns a vertex outside its domain: " +
                             std::to_string(v));
        }
    }
    for (auto [u, v] : g.edges())
        if (domain.test(u) && domain.test(v) &&
            coloring.assignment[u] == coloring.assignment[v])
            return false;
    return true;
}

} // namespace pitree
