#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "domchrom/graph.hpp"

namespace domchrom {

/// Decodes one graph6 record. A leading ">>graph6<<" header and a trailing
/// line terminator are accepted. Throws ParseError carrying the byte offset of
/// the first offending character.
Graph parse_graph6(std::string_view text);

/// Encodes g (order >= 1) as a graph6 record without a line terminator.
std::string write_graph6(const Graph& g);

/// Reads a graph6 file: one record per line, optional header line, blank lines skipped.
std::vector<Graph> read_graph6_file(const std::filesystem::path& path);

}  // namespace domchrom
