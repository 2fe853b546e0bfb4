#pragma once

#include <string>
#include <string_view>

#include "indratio/graph.hpp"

namespace indratio {

enum class GraphFormat { Auto, Graph6, EdgeList };

/// Decodes one graph6 line. An optional ">>graph6<<" header and trailing
/// newline are accepted. Supports n <= 258047; the 8-byte size form is rejected.
Graph parse_graph6(std::string_view text);

/// Encodes g as graph6 without header or newline.
std::string emit_graph6(const Graph& g);

/// Plain edge list: "n m" followed by m lines "u v", 0-based.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

/// Reads a single graph. With GraphFormat::Auto, a leading digit selects the
/// edge-list format and anything else graph6.
Graph read_graph(std::string_view text, GraphFormat format = GraphFormat::Auto);

GraphFormat parse_format_name(std::string_view name);

}  // namespace indratio
