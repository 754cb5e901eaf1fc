#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tubings/pseudograph.hpp"

namespace tubings {

/// A parsed graph file. Line numbers are 1-based, one per edge in file order.
struct GraphDocument {
    std::string source;
    Pseudograph graph;
    std::vector<std::size_t> edge_lines;
};

/// Line format: `node <id>`, `edge <id> <id> [<label>]`, `#` comments and
/// blank lines ignored. Without any node line the nodes are the edge endpoints.
GraphDocument parse_graph(std::string_view text);
GraphDocument read_graph_file(const std::string& path);

/// Node lines, then edges in canonical order. Reparses to an equal graph.
std::string serialize(const Pseudograph& g);

/// Comma-separated node ids and bundle-edge labels, e.g. `1,3,a,b`.
/// Throws UnknownMember or NotInAnyBundle.
Collection parse_collection(std::string_view text, const Pseudograph& g);

}  // namespace tubings
