#pragma once

#include <vector>

#include "spn/model.hpp"

namespace spn {

/// Sign of a transition: product of the signs of all arcs incident on it
/// (incoming and outgoing). Purely structural, independent of the marking.
Sign transition_sign(const SpnStructure& structure, VertexId t);

/// Structural sign of a place: product of the signs of its incident arcs.
Sign place_sign_wrt_arcs(const SpnStructure& structure, VertexId p);

/// Dynamic sign of a place: product of the token signs it currently holds.
/// Positive iff the negative-token count is even; an empty place is positive.
Sign place_sign_wrt_marking(const Marking& marking, VertexId p);

/// Sign used by the domination definitions: marking-based for places,
/// structural for transitions.
Sign vertex_sign(const SpnStructure& structure, const Marking& marking, VertexId v);

enum class SignBasis { arcs, marking };

struct VertexSignAssignment {
    VertexId vertex;
    Sign sign = Sign::plus;
    SignBasis basis = SignBasis::arcs;
};

/// Full sign table: arc-based sign for every vertex plus the marking-based
/// sign for every place, in canonical vertex order.
std::vector<VertexSignAssignment> sign_table(const SpnStructure& structure,
                                             const Marking& marking);

}  // namespace spn
