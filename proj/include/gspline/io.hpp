#ifndef GSPLINE_IO_HPP
#define GSPLINE_IO_HPP

#include "gspline/constructions.hpp"
#include "gspline/graph.hpp"

#include <string>

namespace gspline {

/// Canonical graph JSON:
/// {"modulus": "<dec>", "vertices": n,
///  "edges": [{"u": i, "v": j, "label": "<dec>"}, ...]}
/// with edges in canonical (j, i) order. Emission is byte-deterministic.
std::string graph_to_json(const EdgeLabeledGraph& g);
EdgeLabeledGraph graph_from_json(const std::string& text, bool require_proper = false);

/// Generating-set JSON:
/// {"splines": [["<res>", ...], ...], "certificate": "...", "rank": r,
///  "invariant_factors": ["<dec>", ...]}
std::string genset_to_json(const GeneratingSet& set);
GeneratingSet genset_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace gspline

#endif
