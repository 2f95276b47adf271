#include "pitree/graph_io.hpp"

#include "pitree/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace pitree {

Graph read_dimacs(std::istream& in) {
    int n = -1;
    long declared_m = -1;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue; // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (n >= 0)
                throw InputError("dimacs line " + std::to_string(line_no) +
                                 ": duplicate problem line");
            std::string kind;
            if (!(ls >> kind >> n >> declared_m) ||
                (kind != "edge" && kind != "edges" && kind != "col") || n < 0 ||
                declared_m < 0)
                throw InputError("dimacs line " + std::to_string(line_no) +
                                 ": malformed problem line");
        } else if (tag == "e") {
            if (n < 0)
                throw InputError("dimacs line " + std::to_string(line_no) +
                                 ": edge before problem line");
            int u, v;
            if (!(ls >> u >> v))
                throw InputError("dimacs line " + std::to_string(line_no) +
                                 ": malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n)
                throw InputError("dimacs line " + std::to_string(line_no) +
                                 ": endpoint out of range");
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw InputError("dimacs line " + std::to_string(line_no) +
                             ": unknown line type '" + tag + "'");
        }
    }
    if (n < 0) throw InputError("dimacs input has no problem line");
    if (static_cast<long>(edges.size()) != declared_m)
        throw InputError("dimacs edge count mismatch: declared " +
                         std::to_string(declared_m) + ", found " +
                         std::to_string(edges.size()));
    try {
        return Graph::from_edges(n, edges);
    } catch (const InputError& e) {
        throw InputError(std::string("dimacs input: ") + e.what());
    }
}

void write_dimacs(std::ostream& out, const Graph& g) {
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
}

Graph read_graph_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("graph json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw InputError("graph json: expected object with \"n\" and \"edges\"");
    if (!j["n"].is_number_integer())
        throw InputError("graph json: \"n\" must be an integer");
    int n = j["n"].get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw InputError("graph json: each edge must be a pair of integers");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return Graph::from_edges(n, edges);
    } catch (const InputError& e) {
        throw InputError(std::string("graph json: ") + e.what());
    }
}

void write_graph_json(std::ostream& out, const Graph& g) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    out << j.dump() << "\n";
}

namespace {
bool has_suffix(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}
} // namespace

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open graph file: " + path);
    if (has_suffix(path, ".json")) return read_graph_json(in);
    return read_dimacs(in);
}

void save_graph(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open output file: " + path);
    if (has_suffix(path, ".json"))
        write_graph_json(out, g);
    else
        write_dimacs(out, g);
}

} // namespace pitree
