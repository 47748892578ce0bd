#include "domchrom/graph6.hpp"

#include <cstdint>
#include <fstream>

#include "domchrom/error.hpp"

namespace domchrom {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

class Reader {
public:
    Reader(std::string_view text, std::size_t base) : text_(text), base_(base) {}

    bool done() const { return pos_ >= text_.size(); }
    std::size_t offset() const { return base_ + pos_; }

    int next6(const char* what) {
        if (done()) throw ParseError(std::string("truncated ") + what, offset());
        const int c = static_cast<unsigned char>(text_[pos_]);
        if (c < 63 || c > 126) {
            throw ParseError("character " + std::to_string(c) + " outside graph6 range 63..126",
                             offset());
        }
        ++pos_;
        return c - kBias;
    }

    std::uint64_t read_big(int groups) {
        std::uint64_t value = 0;
        for (int i = 0; i < groups; ++i) value = (value << 6) | static_cast<std::uint64_t>(next6("size field"));
        return value;
    }

private:
    std::string_view text_;
    std::size_t base_;
    std::size_t pos_ = 0;
};

}  // namespace

Graph parse_graph6(std::string_view text) {
    std::size_t base = 0;
    if (text.starts_with(kHeader)) {
        text.remove_prefix(kHeader.size());
        base = kHeader.size();
    }
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

    Reader in(text, base);
    std::uint64_t n = 0;
    const int first = in.next6("size field");
    if (first < 63) {
        n = static_cast<std::uint64_t>(first);
    } else {
        const std::size_t at = in.offset();
        if (!in.done() && static_cast<unsigned char>(text[at - base]) == 126) {
            in.next6("size field");
            n = in.read_big(6);
        } else {
            n = in.read_big(3);
        }
    }
    if (n > static_cast<std::uint64_t>(Graph::kMaxVertices)) {
        throw ParseError("graph order " + std::to_string(n) + " exceeds supported maximum " +
                         std::to_string(Graph::kMaxVertices),
                         base);
    }

    const int order = static_cast<int>(n);
    Graph g(order);
    int bits_left = 0;
    int chunk = 0;
    for (Vertex v = 1; v < order; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            if (bits_left == 0) {
                chunk = in.next6("adjacency bit stream");
                bits_left = 6;
            }
            --bits_left;
            if ((chunk >> bits_left) & 1) g.add_edge(u, v);
        }
    }
    if (!in.done()) throw ParseError("trailing characters after graph6 record", in.offset());
    return g;
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    if (n < 1) throw ArgumentError("graph6 encoding needs at least one vertex");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
    int chunk = 0;
    int filled = 0;
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            chunk = (chunk << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + kBias));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
    return out;
}

std::vector<Graph> read_graph6_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open graph6 file " + path.string());
    std::vector<Graph> graphs;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line == kHeader) continue;
        try {
            graphs.push_back(parse_graph6(line));
        } catch (const ParseError& e) {
            throw ParseError(path.string() + ":" + std::to_string(line_no) + ": " + e.what(), e.offset());
        }
    }
    if (in.bad()) throw IoError("error reading " + path.string());
    return graphs;
}

}  // namespace domchrom
