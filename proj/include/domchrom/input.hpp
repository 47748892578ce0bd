#pragma once

#include <filesystem>
#include <string>

#include "domchrom/graph.hpp"

namespace domchrom {

/// Parses "kind:n" with an optional "^1/k" suffix, e.g. "star:3^1/5".
/// Throws ArgumentError on malformed text and ParameterError on bad sizes.
Graph parse_family_spec(const std::string& text);

/// Line `index` (0-based, counting graph6 records only) of a graph6 file.
Graph read_graph6_record(const std::filesystem::path& path, std::size_t index);

}  // namespace domchrom
