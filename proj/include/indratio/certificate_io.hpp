#pragma once

#include <string>
#include <string_view>

#include "indratio/graph.hpp"
#include "indratio/reducer.hpp"

namespace indratio {

/// JSON record: constants and guarantee as reduced fractions, the step list,
/// and the final set. `g` supplies the informational size fields.
std::string certificate_to_json(const Certificate& cert, const Graph& g);

/// Inverse of certificate_to_json. Throws ParseError on malformed input.
Certificate certificate_from_json(std::string_view text);

}  // namespace indratio
