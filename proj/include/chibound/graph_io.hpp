#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "chibound/graph.hpp"

namespace chibound::io {

enum class Format { dimacs, edgelist };

/// DIMACS .col: `c` comments, one `p edge n m` header, `e u v` lines (1-indexed).
Graph read_dimacs(std::istream& in);
/// Header `p edge n m`, then `e u v` with u < v in lexicographic order.
void write_dimacs(std::ostream& out, const Graph& g);

/// First line `n`, then one 0-indexed `u v` pair per line. `#` starts a comment.
Graph read_edgelist(std::istream& in);
void write_edgelist(std::ostream& out, const Graph& g);

/// `.col` and `.dimacs` are DIMACS; anything else is an edge list.
Format detect_format(const std::filesystem::path& path);
Format parse_format(const std::string& name);

Graph read_graph(const std::filesystem::path& path, Format format);
Graph read_graph(const std::filesystem::path& path);
std::string to_dimacs(const Graph& g);

} // namespace chibound::io
