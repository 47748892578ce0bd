#include "domchrom/input.hpp"

#include <charconv>

#include "domchrom/error.hpp"
#include "domchrom/graph6.hpp"
#include "domchrom/ops.hpp"

namespace domchrom {

namespace {

int parse_int(std::string_view text, const std::string& whole) {
    int value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        throw ArgumentError("bad number '" + std::string(text) + "' in family spec '" + whole + "'");
    }
    return value;
}

}  // namespace

Graph parse_family_spec(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ArgumentError("family spec '" + text + "' is not of the form kind:n");
    const Family kind = parse_family_kind(text.substr(0, colon));

    std::string_view rest = std::string_view(text).substr(colon + 1);
    std::optional<int> k;
    if (const auto caret = rest.find('^'); caret != std::string_view::npos) {
        const std::string_view suffix = rest.substr(caret + 1);
        if (!suffix.starts_with("1/")) throw ArgumentError("subdivision suffix must be ^1/k in '" + text + "'");
        k = parse_int(suffix.substr(2), text);
        rest = rest.substr(0, caret);
    }
    const Graph g = make_family({kind, parse_int(rest, text)});
    return k ? subdivide(g, *k).graph : g;
}

Graph read_graph6_record(const std::filesystem::path& path, std::size_t index) {
    auto graphs = read_graph6_file(path);
    if (index >= graphs.size()) {
        throw ArgumentError("index " + std::to_string(index) + " out of range: " + path.string() + " has " +
                            std::to_string(graphs.size()) + " graphs");
    }
    return graphs[index];
}

}  // namespace domchrom
