#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "h22/graph/rooted_graph.hpp"

namespace h22::graph {

/// Parses the text graph format (see docs/graph_format.md). Throws ConfigError
/// with a line number on malformed input, and also when the resulting weights
/// are rejected by RootedGraph (disconnected support).
RootedGraph parse_graph(std::string_view text);

/// Reads and parses a graph file; FileError when it cannot be opened.
RootedGraph load_graph(const std::filesystem::path& path);

/// Round-trippable text form listing every nonzero upper-triangle weight.
std::string to_text(const RootedGraph& g);

}  // namespace h22::graph
