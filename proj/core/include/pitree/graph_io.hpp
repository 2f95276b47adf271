#ifndef PITREE_GRAPH_IO_HPP
#define PITREE_GRAPH_IO_HPP

#include "pitree/graph.hpp"

#include <iosfwd>
#include <string>

namespace pitree {

// DIMACS .col format: "c" comment lines, one "p edge <n> <m>" header,
// then m lines "e <u> <v>" with 1-indexed endpoints. Duplicate edges,
// self-loops and count mismatches are rejected.
Graph read_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const Graph& g);

// JSON format: {"n": int, "edges": [[u,v], ...]} with 0-indexed endpoints.
Graph read_graph_json(std::istream& in);
void write_graph_json(std::ostream& out, const Graph& g);

// Dispatch on extension: ".col"/".dimacs" vs ".json".
Graph load_graph(const std::string& path);
void save_graph(const std::string& path, const Graph& g);

} // namespace pitree

#endif // PITREE_GRAPH_IO_HPP
