#include "spn/signing.hpp"

#include <stdexcept>

namespace spn {

namespace {

Sign incident_arc_product(const SpnStructure& structure, VertexId v) {
    Sign s = Sign::plus;
    for (VertexId u : structure.preset(v)) s *= structure.arc_sign(u, v);
    for (VertexId u : structure.postset(v)) s *= structure.arc_sign(v, u);
    return s;
}

}  // namespace

Sign transition_sign(const SpnStructure& structure, VertexId t) {
    if (!t.is_transition())
        throw std::invalid_argument("transition_sign expects a transition");
    structure.require_in_range(t);
    return incident_arc_product(structure, t);
}

Sign place_sign_wrt_arcs(const SpnStructure& structure, VertexId p) {
    if (!p.is_place())
        throw std::invalid_argument("place_sign_wrt_arcs expects a place");
    structure.require_in_range(p);
    return incident_arc_product(structure, p);
}

Sign place_sign_wrt_marking(const Marking& marking, VertexId p) {
    if (!p.is_place())
        throw std::invalid_argument("place_sign_wrt_marking expects a place");
    if (p.index < 0 || p.index >= marking.place_count())
        throw std::out_of_range("place index out of range for marking");
    return marking.negative[p.index] % 2 == 0 ? Sign::plus : Sign::minus;
}

Sign vertex_sign(const SpnStructure& structure, const Marking& marking,
                 VertexId v) {
    return v.is_place() ? place_sign_wrt_marking(marking, v)
                        : transition_sign(structure, v);
}

std::vector<VertexSignAssignment> sign_table(const SpnStructure& structure,
                                             const Marking& marking) {
    require_marking_compatible(structure, marking);
    std::vector<VertexSignAssignment> out;
    for (VertexId v : structure.vertices()) {
        if (v.is_place()) {
            out.push_back({v, place_sign_wrt_arcs(structure, v), SignBasis::arcs});
            out.push_back(
                {v, place_sign_wrt_marking(marking, v), SignBasis::marking});
        } else {
            out.push_back({v, transition_sign(structure, v), SignBasis::arcs});
        }
    }
    return out;
}

}  // namespace spn
