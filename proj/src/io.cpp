#include "geodex/io.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

namespace geodex {

namespace {

[[noreturn]] void fail(const std::string& source, int line, const std::string& what) {
    throw ParseError(source + ":" + std::to_string(line) + ": " + what);
}

bool comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Graph read_edge_list(std::istream& in, const std::string& source) {
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    long long seen = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (comment_or_blank(line)) continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0)
                fail(source, lineno, "expected header 'n m'");
            std::string rest;
            if (ls >> rest) fail(source, lineno, "trailing content after header");
            edges.reserve(static_cast<std::size_t>(m));
            continue;
        }
        long long u, v;
        if (!(ls >> u >> v)) fail(source, lineno, "expected edge 'u v'");
        std::string rest;
        if (ls >> rest) fail(source, lineno, "trailing content after edge");
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(source, lineno, "edge endpoint out of range [0, " + std::to_string(n) + ")");
        if (u == v) fail(source, lineno, "self-loop at vertex " + std::to_string(u));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        if (++seen == m) break;
    }
    if (n < 0) fail(source, lineno, "missing header 'n m'");
    if (seen != m)
        fail(source, lineno,
             "expected " + std::to_string(m) + " edges, found " + std::to_string(seen));
    return Graph::from_edges(static_cast<int>(n), edges);
}

Graph decode_graph6(const std::string& text, const std::string& source) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s = s.substr(header.size());
    if (s.empty()) fail(source, 1, "empty graph6 value");

    std::size_t pos = 0;
    auto need = [&](std::size_t k) {
        if (pos + k > s.size()) fail(source, 1, "graph6 value truncated");
    };
    auto byte_at = [&](std::size_t i) -> int {
        const unsigned char c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126)
            fail(source, 1, "invalid graph6 byte at position " + std::to_string(i));
        return c - 63;
    };

    long long n;
    if (s[0] == '~') {
        need(2);
        if (s[1] == '~') fail(source, 1, "graph6 values beyond 258047 vertices not supported");
        need(4);
        n = (static_cast<long long>(byte_at(1)) << 12) |
            (static_cast<long long>(byte_at(2)) << 6) | byte_at(3);
        pos = 4;
    } else {
        n = byte_at(0);
        pos = 1;
    }
    if (n > 100000) fail(source, 1, "graph6 value too large: n=" + std::to_string(n));

    const long long bits = n * (n - 1) / 2;
    const std::size_t chunks = static_cast<std::size_t>((bits + 5) / 6);
    need(chunks);
    if (pos + chunks != s.size()) fail(source, 1, "trailing content after graph6 value");

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            const int chunk = byte_at(pos + static_cast<std::size_t>(bit / 6));
            if (chunk >> (5 - bit % 6) & 1) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

Graph read_graph(std::istream& in, GraphFormat format, const std::string& source) {
    if (format == GraphFormat::edge_list) return read_edge_list(in, source);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!comment_or_blank(line)) return decode_graph6(line, source);
    }
    throw ParseError(source + ":" + std::to_string(lineno) + ": no graph6 value found");
}

Graph read_graph_file(const std::string& path, GraphFormat format) {
    if (path == "-") return read_graph(std::cin, format, "<stdin>");
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    return read_graph(in, format, path);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    const auto edges = g.edges();
    out << g.vertex_count() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

}  // namespace geodex
