#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "critgraph/graph.hpp"

namespace critgraph::dimacs {

// "c" comments, one "p edge <n> <m>" line, then exactly m "e <u> <v>" lines
// with 1-based endpoints. Vertices are 0-based in memory.

Graph parse(std::string_view text);
Graph read(std::istream& in);
Graph read_file(const std::filesystem::path& path);

/// Serializes g; optional comment lines are emitted before the problem line.
std::string write(const Graph& g, std::string_view comment = {});
void write(std::ostream& out, const Graph& g, std::string_view comment = {});
void write_file(const std::filesystem::path& path, const Graph& g, std::string_view comment = {});

}  // namespace critgraph::dimacs
