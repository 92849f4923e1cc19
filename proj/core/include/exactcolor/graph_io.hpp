#pragma once

#include "exactcolor/graph.hpp"

#include <string>
#include <string_view>

namespace exactcolor {

/// Parses DIMACS edge format: optional "c" comment lines, one "p edge <n> <m>"
/// header, then m lines "e <u> <v>" with 1-based endpoints. Repeated edges are
/// collapsed silently; self-loops, out-of-range endpoints, a duplicate or
/// missing header, an edge-count mismatch and unrecognized lines all throw
/// ParseError carrying the offending line number.
Graph read_dimacs_graph(std::string_view text);

/// Canonical DIMACS edge output: header, then edges sorted by (min, max)
/// endpoint, 1-based, LF line endings. read/write round-trips byte-for-byte
/// on files produced by this writer. Labels are not serialized.
std::string write_dimacs_graph(const Graph& g);

/// Graphviz DOT output with vertex labels. When `coloring` is non-null its
/// colors are rendered as fill colors (12-color palette, recycled mod 12).
std::string write_dot(const Graph& g, const Coloring* coloring = nullptr);

} // namespace exactcolor
