#include "pitree/certificates.hpp"

#include "pitree/bounds.hpp"
#include "pitree/errors.hpp"

#include <fstream>
#include <set>

namespace pitree {

using nlohmann::json;

json tree_to_json(const RootedTree& t) {
    json j;
    j["m"] = t.vertex_count();
    j["root"] = t.root();
    json parent = json::object();
    json order = json::object();
    for (int v = 0; v < t.vertex_count(); ++v) {
        if (v != t.root()) parent[std::to_string(v)] = t.parent(v);
        if (!t.children(v).empty()) order[std::to_string(v)] = t.children(v);
    }
    j["parent"] = std::move(parent);
    j["order"] = std::move(order);
    return j;
}

RootedTree tree_from_json(const json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("root") ||
        !j.contains("parent"))
        throw InputError("tree json: expected object with m, root, parent");
    int m = j["m"].get<int>();
    int root = j["root"].get<int>();
    if (m <= 0) throw InputError("tree json: m must be positive");
    std::vector<int> parent(m, -2);
    if (root >= 0 && root < m) parent[root] = -1;
    for (const auto& [key, value] : j["parent"].items()) {
        int child = 0;
        try {
            child = std::stoi(key);
        } catch (...) {
            throw InputError("tree json: non-integer parent key '" + key + "'");
        }
        if (child < 0 || child >= m)
            throw InputError("tree json: parent key out of range");
        if (child == root) throw InputError("tree json: root listed in parent map");
        parent[child] = value.get<int>();
    }
    for (int v = 0; v < m; ++v)
        if (parent[v] == -2)
            throw InputError("tree json: vertex " + std::to_string(v) +
                             " has no parent entry");
    std::optional<std::vector<std::vector<int>>> order;
    if (j.contains("order") && !j["order"].empty()) {
        order.emplace(m);
        for (const auto& [key, value] : j["order"].items()) {
            int v = 0;
            try {
                v = std::stoi(key);
            } catch (...) {
                throw InputError("tree json: non-integer order key '" + key + "'");
            }
            if (v < 0 || v >= m) throw InputError("tree json: order key out of range");
            (*order)[v] = value.get<std::vector<int>>();
        }
    }
    return RootedTree::from_parents(m, root, parent, std::move(order));
}

namespace {

json params_to_json(const DichotomyParams& p) {
    return json{{"d", p.d}, {"k", p.k}, {"t", p.t}, {"bound", p.bound}};
}

DichotomyParams params_from_json(const json& j) {
    DichotomyParams p;
    p.d = j.at("d").get<int>();
    p.k = j.at("k").get<int>();
    p.t = j.at("t").get<int>();
    p.bound = j.at("bound").get<color_t>();
    return p;
}

} // namespace

json certificate_to_json(const Certificate& cert) {
    json j;
    if (const auto* emb = std::get_if<EmbeddingCertificate>(&cert)) {
        j["kind"] = "embedding";
        if (emb->params) j["params"] = params_to_json(*emb->params);
        if (emb->anchor) j["anchor"] = *emb->anchor;
        j["tree"] = tree_to_json(emb->tree);
        json map = json::object();
        for (std::size_t v = 0; v < emb->embedding.map.size(); ++v)
            map[std::to_string(v)] = emb->embedding.map[v];
        j["map"] = std::move(map);
        return j;
    }
    const auto& col = std::get<ColoringCertificate>(cert);
    j["kind"] = "coloring";
    if (col.params) j["params"] = params_to_json(*col.params);
    j["palette"] = col.coloring.palette;
    json assignment = json::object();
    for (std::size_t v = 0; v < col.coloring.assignment.size(); ++v)
        assignment[std::to_string(v)] = col.coloring.assignment[v];
    j["assignment"] = std::move(assignment);
    json peels = json::array();
    for (const auto& peel : col.peels)
        peels.push_back(json{{"X", peel.members},
                             {"c", peel.c},
                             {"a", peel.witness_palette}});
    j["peels"] = std::move(peels);
    return j;
}

Certificate certificate_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw InputError("certificate json: missing kind");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "embedding") {
        EmbeddingCertificate cert;
        if (j.contains("params")) cert.params = params_from_json(j["params"]);
        if (j.contains("anchor")) cert.anchor = j["anchor"].get<int>();
        if (!j.contains("tree") || !j.contains("map"))
            throw InputError("embedding certificate: missing tree or map");
        cert.tree = tree_from_json(j["tree"]);
        cert.embedding.map.assign(cert.tree.vertex_count(), -1);
        for (const auto& [key, value] : j["map"].items()) {
            int v = 0;
            try {
                v = std::stoi(key);
            } catch (...) {
                throw InputError("embedding certificate: bad map key '" + key + "'");
            }
            if (v < 0 || v >= cert.tree.vertex_count())
                throw InputError("embedding certificate: map key out of range");
            cert.embedding.map[v] = value.get<int>();
        }
        return cert;
    }
    if (kind == "coloring") {
        ColoringCertificate cert;
        if (j.contains("params")) cert.params = params_from_json(j["params"]);
        if (!j.contains("palette") || !j.contains("assignment"))
            throw InputError("coloring certificate: missing palette or assignment");
        cert.coloring.palette = j["palette"].get<color_t>();
        std::size_t n = j["assignment"].size();
        cert.coloring.assignment.assign(n, 0);
        for (const auto& [key, value] : j["assignment"].items()) {
            int v = 0;
            try {
                v = std::stoi(key);
            } catch (...) {
                throw InputError("coloring certificate: bad assignment key '" + key +
                                 "'");
            }
            if (v < 0 || v >= static_cast<int>(n))
                throw InputError("coloring certificate: assignment keys must be "
                                 "dense 0..n-1");
            cert.coloring.assignment[v] = value.get<color_t>();
        }
        if (j.contains("peels"))
            for (const auto& p : j["peels"]) {
                PeelRecord record;
                record.members = p.at("X").get<std::vector<int>>();
                record.c = p.at("c").get<int>();
                record.witness_palette = p.at("a").get<color_t>();
                cert.peels.push_back(std::move(record));
            }
        return cert;
    }
    throw InputError("certificate json: unknown kind '" + kind + "'");
}

Certificate certificate_from_result(const DichotomyResult& result) {
    DichotomyParams params{result.d, result.k, result.t, result.bound};
    if (result.embedding) {
        EmbeddingCertificate cert;
        cert.params = params;
        cert.tree = result.embedding->tree;
        cert.embedding = result.embedding->embedding;
        cert.anchor = result.embedding->anchor;
        return cert;
    }
    ColoringCertificate cert;
    cert.params = params;
    cert.coloring = result.coloring->coloring;
    cert.peels = result.coloring->peels;
    return cert;
}

Certificate load_certificate(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open certificate file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InputError(std::string("certificate json: ") + e.what());
    }
    return certificate_from_json(j);
}

void save_certificate(const std::string& path, const Certificate& cert) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open output file: " + path);
    out << certificate_to_json(cert).dump(2) << "\n";
}

VerifyReport verify_certificate(const Graph& g, const Certificate& cert) {
    try {
        if (const auto* emb = std::get_if<EmbeddingCertificate>(&cert)) {
            auto check = verify_path_induced(g, emb->tree, emb->embedding);
            if (!check.ok()) return {false, check.detail};
            if (emb->anchor &&
                emb->embedding.map[emb->tree.root()] != *emb->anchor)
                return {false, "embedding root does not match the declared anchor"};
            if (emb->params) {
                // Re-derive the bound table; a certificate lying about its
                // parameters fails here rather than being trusted.
                BoundTable table = bounds(emb->params->d, emb->params->k,
                                          emb->params->t);
                if (table.bound() != emb->params->bound)
                    return {false, "declared bound does not match the recurrences"};
            }
            return {true, ""};
        }
        const auto& col = std::get<ColoringCertificate>(cert);
        if (!col.coloring.total()) return {false, "coloring is not total"};
        if (!is_proper_coloring(g, col.coloring))
            return {false, "coloring has a monochromatic edge"};
        if (col.params) {
            BoundTable table = bounds(col.params->d, col.params->k, col.params->t);
            if (table.bound() != col.params->bound)
                return {false, "declared bound does not match the recurrences"};
            if (col.coloring.palette > table.bound())
                return {false, "palette exceeds the bound for the declared parameters"};
        }
        if (!col.peels.empty()) {
            std::set<int> covered;
            for (const auto& peel : col.peels) {
                for (int v : peel.members) {
                    if (v < 0 || v >= g.vertex_count())
                        return {false, "peel member out of range"};
                    if (!covered.insert(v).second)
                        return {false, "peels overlap at vertex " + std::to_string(v)};
                }
            }
            if (static_cast<int>(covered.size()) != g.vertex_count())
                return {false, "peels do not cover the graph"};
        }
        return {true, ""};
    } catch (const Error& e) {
        return {false, e.what()};
    }
}

} // namespace pitree
