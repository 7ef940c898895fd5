#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "geodex/graph.hpp"

namespace geodex {

// Malformed input file or string; the message carries the source name and
// line number.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class GraphFormat { edge_list, graph6 };

// Edge-list text format: the first non-comment line is "n m", followed by m
// lines "u v" (0-indexed). Lines starting with '#' are comments; blank lines
// are skipped. This is the canonical interchange format.
Graph read_edge_list(std::istream& in, const std::string& source = "<input>");

// One graph6 value: 6-bit chunks offset by 63, upper triangle of the
// adjacency matrix in column order. The optional ">>graph6<<" header is
// accepted and stripped.
Graph decode_graph6(const std::string& text, const std::string& source = "<input>");

// Reads the first graph found in the stream, in the given format.
Graph read_graph(std::istream& in, GraphFormat format, const std::string& source = "<input>");

Graph read_graph_file(const std::string& path, GraphFormat format);

void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace geodex
