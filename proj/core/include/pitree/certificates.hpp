#ifndef PITREE_CERTIFICATES_HPP
#define PITREE_CERTIFICATES_HPP

#include "pitree/creature.hpp"
#include "pitree/dichotomy.hpp"
#include "pitree/embedding.hpp"
#include "pitree/graph.hpp"
#include "pitree/rooted_tree.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>

namespace pitree {

// Tree JSON: {"m": int, "root": int, "parent": {child: parent, ...},
// "order": {vertex: [children...], ...}}.
nlohmann::json tree_to_json(const RootedTree& t);
RootedTree tree_from_json(const nlohmann::json& j);

struct DichotomyParams {
    int d = 0, k = 0, t = 0;
    color_t bound = 0;
};

struct EmbeddingCertificate {
    std::optional<DichotomyParams> params;
    RootedTree tree;
    Embedding embedding;
    std::optional<int> anchor;
};

struct ColoringCertificate {
    std::optional<DichotomyParams> params;
    Coloring coloring;
    std::vector<PeelRecord> peels;
};

using Certificate = std::variant<EmbeddingCertificate, ColoringCertificate>;

nlohmann::json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

Certificate certificate_from_result(const DichotomyResult& result);

Certificate load_certificate(const std::string& path);
void save_certificate(const std::string& path, const Certificate& cert);

struct VerifyReport {
    bool ok = false;
    std::string reason; // human-readable, set on failure
};

/// The trust anchor: re-checks a certificate against a graph using only
/// the verifiers (no search code). Embeddings must pass the path-induced
/// check and match their declared anchor; colorings must be total and
/// proper, with the palette within the bound re-derived from the declared
/// parameters (the emitter is not trusted), and peel metadata, when
/// present, must partition the vertices.
VerifyReport verify_certificate(const Graph& g, const Certificate& cert);

} // namespace pitree

#endif // PITREE_CERTIFICATES_HPP
