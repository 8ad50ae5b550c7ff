#ifndef RADMAX_FORMATS_HPP
#define RADMAX_FORMATS_HPP

#include <map>
#include <string>
#include <string_view>

#include "radmax/graph.hpp"

namespace radmax {

/// graph6 line (no trailing newline): N(n) then the upper triangle in
/// column-major order, 6 bits per byte, big-endian within each byte, offset 63.
std::string to_graph6(const Graph& g);

/// Strict decoder: optional ">>graph6<<" header, exact payload length,
/// zero padding bits. Throws std::invalid_argument on anything malformed.
Graph from_graph6(std::string_view text);

/// DOT for undirected graphs; every vertex gets a node statement so the
/// order survives a round trip. Optional labels become node label attributes.
std::string to_dot(const Graph& g, const std::map<std::string, int>* labels = nullptr);

/// Parses the DOT subset to_dot emits (integer node ids, -- edges).
Graph from_dot(std::string_view text);

/// "n m" header line followed by m lines "u v".
std::string to_edgelist(const Graph& g);
Graph from_edgelist(std::string_view text);

enum class GraphFormat { kGraph6, kDot, kEdgeList };

/// Format by first character: digit -> edge list, "graph"/"strict" -> DOT,
/// anything else -> graph6.
GraphFormat sniff_format(std::string_view text);

Graph parse_graph(std::string_view text, GraphFormat fmt);
Graph parse_graph_auto(std::string_view text);

std::string format_graph(const Graph& g, GraphFormat fmt,
                         const std::map<std::string, int>* labels = nullptr);

} // namespace radmax

#endif
