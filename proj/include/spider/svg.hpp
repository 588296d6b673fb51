// SVG drawing of a web's slice word, optionally with one state's flow lines.
#pragma once

#include "spider/web.hpp"

#include <optional>
#include <string>

namespace spider {

// Self-contained SVG: strands as polylines, trivalent vertices as dots, one
// orientation arrowhead at the middle of each strand. With a state, segments
// carrying nonzero flow are overdrawn in red (state 1) or blue (state -1).
// Throws MismatchError if the state's cuts do not fit the drawing.
std::string render_svg(const Web &w, const std::optional<StateRecord> &state = std::nullopt);

} // namespace spider
