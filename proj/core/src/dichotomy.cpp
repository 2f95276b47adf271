#include "pitree/dichotomy.hpp"

#include "pitree/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_map>

namespace pitree {

namespace {

color_t checked_mul(color_t a, color_t b) {
    color_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error("witness palette overflow");
    return r;
}

// The creature-or-embedding recursion of the dichotomy engine. One
// instance serves a whole level-t run: it owns the c/f tables for the
// colorer bound tau and a cache of spider trees.
class Engine {
public:
    Engine(int d, int k_top, color_t tau, const NeighborhoodColorer& colorer,
           EngineStats* stats)
        : d_(d), k_top_(k_top), tau_(tau), colorer_(colorer), stats_(stats),
          c_(creature_parameters(d, k_top)), f_(witness_bounds(d, k_top, tau)),
          spiders_(k_top + 1) {}

    EngineOutcome run(const Graph& g, int v, int k);

private:
    const RootedTree& spider(int j) {
        if (!spiders_[j]) spiders_[j] = RootedTree::spider(d_, j);
        return *spiders_[j];
    }

    // Verifies and stores a locally assembled spider(d, k) embedding.
    void finish_local(const Graph& g, EngineOutcome& out, Embedding emb, int k) {
        auto check = verify_path_induced(g, spider(k), emb);
        if (!check.ok())
            throw InternalError("assembled embedding failed verification: " +
                                check.detail);
        if (stats_) ++stats_->local_embeddings;
        out.local = std::move(emb);
    }

    // Re-checks the claims of Theorem-style creature returns: v in X, the
    // creature parameter c(k), and a proper witness within f(k) colors.
    void finish_creature(const Graph& g, EngineOutcome& out, Creature cr, int k,
                         int v) {
        if (!cr.members.test(v))
            throw InternalError("creature does not contain its vertex");
        if (!is_creature(g, cr.members, cr.c))
            throw InternalError("creature parameter check failed");
        if (!is_proper_on(g, cr.witness, cr.members))
            throw InternalError("creature witness is not proper");
        if (cr.witness.palette != f_[k])
            throw InternalError("creature witness palette mismatch");
        if (stats_) {
            ++stats_->creature_checks;
            ++stats_->creatures;
        }
        out.creature = std::move(cr);
    }

    std::variant<Coloring, ColorerEmbedding> invoke_colorer(const Graph& sub) {
        if (stats_) ++stats_->colorer_calls;
        auto res = colorer_(sub);
        if (auto* col = std::get_if<Coloring>(&res)) {
            if (col->palette > tau_)
                throw ContractError("colorer palette exceeds tau");
            if (!is_proper_coloring(sub, *col))
                throw ContractError("colorer coloring is not proper");
        } else {
            auto& ce = std::get<ColorerEmbedding>(res);
            auto check = verify_path_induced(sub, spider(k_top_), ce.embedding);
            if (!check.ok())
                throw ContractError("colorer embedding failed verification: " +
                                    check.detail);
        }
        return res;
    }

    int d_;
    int k_top_;
    color_t tau_;
    const NeighborhoodColorer& colorer_;
    EngineStats* stats_;
    std::vector<color_t> c_;
    std::vector<color_t> f_;
    std::vector<std::optional<RootedTree>> spiders_;
};

EngineOutcome Engine::run(const Graph& g, int v, int k) {
    if (v < 0 || v >= g.vertex_count())
        throw InputError("engine vertex out of range");
    EngineOutcome out;

    if (k == 1) {
        // Base: d neighbors host the star spider(d, 1); otherwise {v} is a
        // c(1)-creature on one witness color.
        if (g.degree(v) >= d_) {
            Embedding emb;
            emb.map.reserve(d_ + 1);
            emb.map.push_back(v);
            const Bitset& nb = g.neighbors(v);
            int taken = 0;
            for (int u = nb.first(); u >= 0 && taken < d_; u = nb.next(u), ++taken)
                emb.map.push_back(u);
            finish_local(g, out, std::move(emb), 1);
            return out;
        }
        Creature cr;
        cr.members = Bitset(g.vertex_count());
        cr.members.set(v);
        cr.c = static_cast<int>(c_[1]);
        cr.witness = Coloring(g.vertex_count(), f_[1]);
        cr.witness.assignment[v] = 1;
        finish_creature(g, out, std::move(cr), 1, v);
        return out;
    }

    const Bitset& nv = g.neighbors(v);
    Bitset mv = g.non_neighborhood(v);

    // Greedy maximal family A: neighbors hosting pairwise disjoint
    // spider(d, k-1) copies inside {u} ∪ M(v), avoiding earlier copies.
    std::vector<int> a_set;
    std::vector<Embedding> branches; // copies in g indexing
    Bitset w(g.vertex_count());
    for (int u = nv.first(); u >= 0 && static_cast<int>(a_set.size()) < d_;
         u = nv.next(u)) {
        Bitset allowed = mv.minus(w);
        allowed.set(u);
        auto sub = induced_subgraph(g, allowed);
        SearchOptions opt;
        opt.anchor = sub.to_sub[u];
        auto res = find_path_induced(sub.graph, spider(k - 1), opt);
        if (res.status != SearchStatus::found) continue;
        Embedding in_g;
        in_g.map.reserve(res.embedding->map.size());
        for (int x : res.embedding->map) in_g.map.push_back(sub.to_parent[x]);
        for (int x : in_g.map) w.set(x);
        a_set.push_back(u);
        branches.push_back(std::move(in_g));
    }
    out.a_set = a_set;
    out.w_set = w.members();

    if (static_cast<int>(a_set.size()) == d_) {
        // Assemble spider(d, k) anchored at v: branch b of the spider is
        // branch copy b, matched child-by-child.
        const RootedTree& sk = spider(k);
        const RootedTree& sk1 = spider(k - 1);
        Embedding emb;
        emb.map.assign(sk.vertex_count(), -1);
        emb.map[sk.root()] = v;
        for (int b = 0; b < d_; ++b) {
            std::vector<std::pair<int, int>> stack{{sk.children(sk.root())[b],
                                                    sk1.root()}};
            while (!stack.empty()) {
                auto [x, y] = stack.back();
                stack.pop_back();
                emb.map[x] = branches[b].map[y];
                const auto& cx = sk.children(x);
                const auto& cy = sk1.children(y);
                for (std::size_t i = 0; i < cx.size(); ++i)
                    stack.emplace_back(cx[i], cy[i]);
            }
        }
        finish_local(g, out, std::move(emb), k);
        return out;
    }

    // |A| < d and A is maximal, so |W| <= (d-1)(1+d+...+d^{k-1}) = d^k - 1.
    const color_t d_pow_k = c_[k] - c_[k - 1]; // d^k by the recurrence
    if (static_cast<color_t>(w.count()) > d_pow_k - 1)
        throw InternalError("|W| exceeds d^k - 1");
    if (stats_) stats_->max_w = std::max(stats_->max_w, w.count());

    // Recurse on every u in N(v) \ A inside ({u} ∪ M(v)) \ W. Maximality
    // of A makes an anchored spider(d, k-1) copy there impossible.
    struct SubCreature {
        int u;
        Bitset members;               // g indexing
        std::vector<color_t> witness; // g indexing, 0 off the creature
    };
    std::vector<SubCreature> subs;
    for (int u = nv.first(); u >= 0; u = nv.next(u)) {
        if (std::find(a_set.begin(), a_set.end(), u) != a_set.end()) continue;
        Bitset allowed = mv.minus(w);
        allowed.set(u);
        auto sub = induced_subgraph(g, allowed);
        EngineOutcome rec = run(sub.graph, sub.to_sub[u], k - 1);
        if (rec.local)
            throw InternalError(
                "A-maximality breached: recursion found an anchored copy");
        if (rec.propagated) {
            Embedding in_g;
            in_g.map.reserve(rec.propagated->map.size());
            for (int x : rec.propagated->map) in_g.map.push_back(sub.to_parent[x]);
            out.propagated = std::move(in_g);
            return out;
        }
        SubCreature sc;
        sc.u = u;
        sc.members = Bitset(g.vertex_count());
        sc.witness.assign(g.vertex_count(), 0);
        const Creature& cr = *rec.creature;
        for (int x = cr.members.first(); x >= 0; x = cr.members.next(x)) {
            sc.members.set(sub.to_parent[x]);
            sc.witness[sub.to_parent[x]] = cr.witness.assignment[x];
        }
        subs.push_back(std::move(sc));
    }

    // X = {v} ∪ ⋃ X_u. Witness: iterate Lemma-2.2 extensions over the
    // creatures X_u \ {u} (ascending u) within f(k-1)·c(k-1) colors, give
    // N(v) ∩ X a fresh tau-block from the neighborhood colorer, then give
    // v the smallest color its X-neighbors avoid.
    Bitset x(g.vertex_count());
    x.set(v);
    for (const auto& sc : subs) x |= sc.members;

    const color_t fc = checked_mul(f_[k - 1], c_[k - 1]);
    Bitset y(g.vertex_count());
    std::vector<color_t> y_color(g.vertex_count(), 0);
    for (const auto& sc : subs) {
        Bitset dset = sc.members;
        dset.reset(sc.u);
        if (dset.empty()) continue;
        Bitset host_set = y | dset;
        auto host = induced_subgraph(g, host_set);
        Bitset x_local(host.graph.vertex_count());
        for (int m = dset.first(); m >= 0; m = dset.next(m))
            x_local.set(host.to_sub[m]);
        std::map<color_t, Bitset> classes;
        for (int m = dset.first(); m >= 0; m = dset.next(m)) {
            auto [it, fresh] = classes.try_emplace(sc.witness[m],
                                                   Bitset(host.graph.vertex_count()));
            it->second.set(host.to_sub[m]);
        }
        std::vector<Bitset> parts;
        parts.reserve(classes.size());
        for (auto& [col, part] : classes) parts.push_back(std::move(part));
        Coloring outside(host.graph.vertex_count(), fc);
        for (int m = 0; m < host.graph.vertex_count(); ++m) {
            int mg = host.to_parent[m];
            if (!dset.test(mg)) outside.assignment[m] = y_color[mg];
        }
        Coloring extended =
            extend_coloring(host.graph, x_local, static_cast<int>(c_[k - 1]),
                            parts, outside, fc);
        for (int m = 0; m < host.graph.vertex_count(); ++m)
            y_color[host.to_parent[m]] = extended.assignment[m];
        y |= dset;
    }

    std::vector<color_t> rest_color(g.vertex_count(), 0);
    if (!subs.empty()) {
        auto subn = induced_subgraph(g, nv);
        auto res = invoke_colorer(subn.graph);
        if (auto* ce = std::get_if<ColorerEmbedding>(&res)) {
            Embedding in_g;
            in_g.map.reserve(ce->embedding.map.size());
            for (int z : ce->embedding.map) in_g.map.push_back(subn.to_parent[z]);
            out.propagated = std::move(in_g);
            return out;
        }
        const Coloring& col = std::get<Coloring>(res);
        for (const auto& sc : subs)
            rest_color[sc.u] = fc + col.assignment[subn.to_sub[sc.u]];
    }

    Creature cr;
    cr.members = x;
    cr.c = static_cast<int>(c_[k]);
    cr.witness = Coloring(g.vertex_count(), f_[k]);
    for (int m = y.first(); m >= 0; m = y.next(m))
        cr.witness.assignment[m] = y_color[m];
    std::set<color_t> blocked;
    for (const auto& sc : subs) {
        cr.witness.assignment[sc.u] = rest_color[sc.u];
        blocked.insert(rest_color[sc.u]);
    }
    color_t v_color = 0;
    for (color_t cand = 1; cand <= f_[k]; ++cand)
        if (!blocked.count(cand)) {
            v_color = cand;
            break;
        }
    if (v_color == 0)
        throw InternalError("no witness color available for the anchor vertex");
    cr.witness.assignment[v] = v_color;
    finish_creature(g, out, std::move(cr), k, v);
    return out;
}

constexpr std::uint64_t kFastPathBudget = 200'000;

} // namespace

EngineOutcome creature_or_embedding(const Graph& g, int v, int d, int k,
                                    color_t tau, const NeighborhoodColorer& colorer,
                                    EngineStats* stats) {
    if (d < 2) throw InputError("creature_or_embedding requires d >= 2");
    if (k < 1) throw InputError("creature_or_embedding requires k >= 1");
    if (tau < 0) throw InputError("tau must be nonnegative");
    Engine engine(d, k, tau, colorer, stats);
    return engine.run(g, v, k);
}

DichotomyResult spider_dichotomy(const Graph& g, int d, int k, int t,
                                 EngineStats* stats) {
    BoundTable table = bounds(d, k, t);
    DichotomyResult result;
    result.d = d;
    result.k = k;
    result.t = t;
    result.bound = table.bound();

    if (t == 1) {
        if (g.vertex_count() > 0)
            throw PreconditionError("omega < t violated at base: t = 1 with a vertex");
        result.coloring = ColoringResult{Coloring(0, 0), {}};
        return result;
    }
    if (t == 2) {
        if (g.edge_count() > 0)
            throw PreconditionError("omega < t violated at base: t = 2 with an edge");
        // Edgeless: every vertex peels off as a singleton 1-creature.
        CreatureProvider provider = [](const Graph& residual, std::span<const int>,
                                       int vertex) -> std::optional<Creature> {
            Creature cr;
            cr.members = Bitset(residual.vertex_count());
            cr.members.set(vertex);
            cr.c = 1;
            cr.witness = Coloring(residual.vertex_count(), 1);
            cr.witness.assignment[vertex] = 1;
            return cr;
        };
        auto peel = peel_coloring(g, table.bound(), provider);
        if (!is_proper_coloring(g, *peel.coloring))
            throw InternalError("base coloring failed verification");
        result.coloring = ColoringResult{std::move(*peel.coloring),
                                         std::move(peel.peels)};
        return result;
    }

    // Level t >= 3: peel creatures produced by the engine, serving its
    // neighborhood colorer with the level-(t-1) engine. Colorings of
    // structurally identical neighborhood subgraphs are cached; cached
    // entries were verified when first produced.
    const color_t tau = table.B[t - 1];
    std::unordered_map<std::string, Coloring> memo;
    NeighborhoodColorer colorer =
        [&](const Graph& sub) -> std::variant<Coloring, ColorerEmbedding> {
        std::string key = sub.adjacency_key();
        if (auto it = memo.find(key); it != memo.end()) {
            if (stats) ++stats->colorer_cache_hits;
            return it->second;
        }
        DichotomyResult below = spider_dichotomy(sub, d, k, t - 1, stats);
        if (below.embedding)
            return ColorerEmbedding{std::move(below.embedding->embedding)};
        auto [it, fresh] = memo.emplace(std::move(key),
                                        std::move(below.coloring->coloring));
        return it->second;
    };

    Engine engine(d, k, tau, colorer, stats);
    std::optional<EmbeddingResult> found;
    CreatureProvider provider = [&](const Graph& residual, std::span<const int> to_host,
                                    int vertex) -> std::optional<Creature> {
        EngineOutcome outcome = engine.run(residual, vertex, k);
        if (outcome.creature) return std::move(*outcome.creature);
        const Embedding& emb = outcome.local ? *outcome.local : *outcome.propagated;
        Embedding in_g;
        in_g.map.reserve(emb.map.size());
        for (int z : emb.map) in_g.map.push_back(to_host[z]);
        EmbeddingResult er;
        er.tree = RootedTree::spider(d, k);
        er.anchor = in_g.map[er.tree.root()];
        er.embedding = std::move(in_g);
        found = std::move(er);
        return std::nullopt;
    };

    auto peel = peel_coloring(g, table.bound(), provider);
    if (!peel.coloring) {
        if (!found) throw InternalError("peeling aborted without an embedding");
        auto check = verify_path_induced(g, found->tree, found->embedding);
        if (!check.ok())
            throw InternalError("dichotomy embedding failed verification: " +
                                check.detail);
        result.embedding = std::move(found);
        return result;
    }
    if (!is_proper_coloring(g, *peel.coloring))
        throw InternalError("dichotomy coloring failed verification");
    result.coloring = ColoringResult{std::move(*peel.coloring), std::move(peel.peels)};
    return result;
}

DichotomyResult tree_dichotomy(const Graph& g, const RootedTree& tree, int t,
                               EngineStats* stats) {
    SpiderCover cover = spider_cover(tree);
    BoundTable table = bounds(cover.d, cover.k, t);

    // Fast path: a budgeted direct search for the tree itself. Success
    // short-circuits; "none" or an exhausted budget falls through to the
    // engine.
    SearchOptions opt;
    opt.node_budget = kFastPathBudget;
    auto direct = find_path_induced(g, tree, opt);
    if (direct.status == SearchStatus::found) {
        DichotomyResult result;
        result.d = cover.d;
        result.k = cover.k;
        result.t = t;
        result.bound = table.bound();
        EmbeddingResult er;
        er.tree = tree;
        er.anchor = direct.embedding->map[tree.root()];
        er.embedding = std::move(*direct.embedding);
        result.embedding = std::move(er);
        return result;
    }

    DichotomyResult inner = spider_dichotomy(g, cover.d, cover.k, t, stats);
    if (inner.embedding) {
        Embedding restricted =
            restrict_embedding(g, inner.embedding->tree, inner.embedding->embedding,
                               tree, cover.inclusion);
        EmbeddingResult er;
        er.tree = tree;
        er.anchor = restricted.map[tree.root()];
        er.embedding = std::move(restricted);
        inner.embedding = std::move(er);
    }
    return inner;
}

} // namespace pitree
