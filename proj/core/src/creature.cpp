#include "pitree/creature.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace pitree {

bool is_creature(const Graph& g, const VertexSet& x, int c) {
    if (x.universe() != g.vertex_count()) throw InputError("vertex set universe mismatch");
    for (int v = x.first(); v >= 0; v = x.next(v)) {
        Bitset outside = g.neighbors(v).minus(x);
        if (outside.count() >= c) return false;
    }
    return true;
}

Coloring extend_coloring(const Graph& g, const VertexSet& x, int c,
                         const std::vector<VertexSet>& parts,
                         const Coloring& outside, color_t palette) {
    const int n = g.vertex_count();
    if (x.universe() != n) throw InputError("vertex set universe mismatch");
    if (c < 1) throw InputError("creature parameter must be positive");

    const auto a = static_cast<color_t>(parts.size());
    if (palette < a * c)
        throw ExtendError(ExtendErrorKind::palette_too_small,
                          "palette too small: " + std::to_string(palette) + " < " +
                              std::to_string(a) + " * " + std::to_string(c));

    // The parts must partition x and each must be stable.
    VertexSet covered(n);
    for (const auto& part : parts) {
        if (part.intersects(covered)) throw InputError("parts are not disjoint");
        covered |= part;
        if (!g.is_stable(part))
            throw ExtendError(ExtendErrorKind::part_not_stable,
                              "a part of the stable partition contains an edge");
    }
    if (!(covered == x)) throw InputError("parts do not partition the creature set");

    if (!is_creature(g, x, c))
        throw ExtendError(ExtendErrorKind::creature_violated,
                          "creature condition violated for parameter c = " +
                              std::to_string(c));

    VertexSet rest = x.complement();
    try {
        if (!is_proper_on(g, outside, rest))
            throw ExtendError(ExtendErrorKind::base_improper,
                              "outside coloring is not proper on g \\ x");
    } catch (const InputError& e) {
        throw ExtendError(ExtendErrorKind::base_improper,
                          std::string("outside coloring rejected: ") + e.what());
    }
    if (outside.palette > palette)
        throw ExtendError(ExtendErrorKind::base_improper,
                          "outside coloring exceeds the target palette");

    Coloring result = outside;
    result.palette = palette;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const color_t block_base = static_cast<color_t>(i) * c; // J_i = base+1 .. base+c
        for (int v = parts[i].first(); v >= 0; v = parts[i].next(v)) {
            Bitset out_nbrs = g.neighbors(v).minus(x);
            color_t chosen = 0;
            for (color_t cand = block_base + 1; cand <= block_base + c; ++cand) {
                bool clash = false;
                for (int u = out_nbrs.first(); u >= 0; u = out_nbrs.next(u))
                    if (result.assignment[u] == cand) {
                        clash = true;
                        break;
                    }
                if (!clash) {
                    chosen = cand;
                    break;
                }
            }
            if (chosen == 0)
                throw InternalError("no free color in block despite creature bound");
            result.assignment[v] = chosen;
        }
    }
    return result;
}

namespace {

// Distinct witness colors of a creature, in increasing color order, as
// stable parts of the host graph.
std::vector<VertexSet> witness_parts(const Graph& host, const Creature& cr) {
    std::map<color_t, VertexSet> classes;
    for (int v = cr.members.first(); v >= 0; v = cr.members.next(v)) {
        color_t col = cr.witness.assignment[v];
        if (col == 0) throw InputError("creature witness does not cover its members");
        auto [it, fresh] = classes.try_emplace(col, VertexSet(host.vertex_count()));
        it->second.set(v);
    }
    std::vector<VertexSet> parts;
    parts.reserve(classes.size());
    for (auto& [col, part] : classes) parts.push_back(std::move(part));
    return parts;
}

} // namespace

PeelResult peel_coloring(const Graph& g, color_t palette,
                         const CreatureProvider& provider) {
    struct Layer {
        InducedSubgraph residual;
        Creature creature; // residual-local indexing
        std::vector<VertexSet> parts;
    };

    PeelResult out;
    std::vector<Layer> layers;
    VertexSet alive = g.vertex_set();

    while (!alive.empty()) {
        Layer layer;
        layer.residual = induced_subgraph(g, alive);
        const Graph& rg = layer.residual.graph;
        int chosen = 0; // smallest-id residual vertex
        auto maybe = provider(rg, layer.residual.to_parent, chosen);
        if (!maybe) return out; // aborted: no coloring
        layer.creature = std::move(*maybe);

        if (layer.creature.members.universe() != rg.vertex_count())
            throw InputError("creature does not live in the residual graph");
        if (layer.creature.members.empty())
            throw InputError("provider returned an empty creature");
        if (!layer.creature.members.test(chosen))
            throw ContractError("provider creature does not contain the chosen vertex");
        if (!is_creature(rg, layer.creature.members, layer.creature.c))
            throw ContractError("provider creature violates its parameter");
        layer.parts = witness_parts(rg, layer.creature);
        if (static_cast<color_t>(layer.parts.size()) * layer.creature.c > palette)
            throw ContractError("peel needs more colors than the target palette");

        PeelRecord record;
        record.c = layer.creature.c;
        record.witness_palette = static_cast<color_t>(layer.parts.size());
        for (int v = layer.creature.members.first(); v >= 0;
             v = layer.creature.members.next(v)) {
            record.members.push_back(layer.residual.to_parent[v]);
            alive.reset(layer.residual.to_parent[v]);
        }
        out.peels.push_back(std::move(record));
        layers.push_back(std::move(layer));
    }

    // Rebuild by reverse extension: color the final (empty) residual, then
    // extend across each peeled creature back to the full graph.
    Coloring full(g.vertex_count(), palette);
    for (auto it = layers.rbegin(); it != layers.rend(); ++it) {
        const Graph& rg = it->residual.graph;
        Coloring outside(rg.vertex_count(), palette);
        for (int v = 0; v < rg.vertex_count(); ++v)
            if (!it->creature.members.test(v))
                outside.assignment[v] = full.assignment[it->residual.to_parent[v]];
        Coloring extended = extend_coloring(rg, it->creature.members, it->creature.c,
                                            it->parts, outside, palette);
        for (int v = 0; v < rg.vertex_count(); ++v)
            full.assignment[it->residual.to_parent[v]] = extended.assignment[v];
    }
    out.coloring = std::move(full);
    return out;
}

} // namespace pitree
