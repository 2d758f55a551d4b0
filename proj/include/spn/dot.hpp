#pragma once

#include <string>

#include "spn/model.hpp"

namespace spn {

/// Graphviz rendering: places as circles annotated with filled-dot (positive)
/// and open-dot (negative) token counts, transitions as filled bars, positive
/// arcs solid, negative arcs dashed. Output is deterministic (canonical
/// vertex and arc order).
std::string export_dot(const SpnStructure& structure, const Marking& marking);
std::string export_dot(const SignedPetriNet& net);

}  // namespace spn
