#include "spn/synthesis.hpp"

#include <stdexcept>

#include "spn/signing.hpp"

namespace spn {

namespace {

void require_usable(const SpnStructure& structure) {
    if (!structure.is_ordinary())
        throw std::invalid_argument(
            "marking synthesis requires an ordinary net (all arc weights 1)");
    if (!validate(structure).ok)
        throw std::invalid_argument(
            "marking synthesis requires a net without isolated vertices");
}

// Sign shared by all arcs incident on the place; nullopt when mixed.
std::optional<Sign> uniform_place_arc_sign(const SpnStructure& structure,
                                           VertexId p) {
    std::optional<Sign> sign;
    auto absorb = [&](Sign s) {
        if (!sign) sign = s;
        else if (*sign != s) sign = std::nullopt;
        return sign.has_value();
    };
    for (VertexId u : structure.preset(p))
        if (!absorb(structure.arc_sign(u, p))) return std::nullopt;
    for (VertexId u : structure.postset(p))
        if (!absorb(structure.arc_sign(p, u))) return std::nullopt;
    return sign;
}

void check_single_sign_places(const SpnStructure& structure,
                              SynthesisReport& report) {
    for (int i = 0; i < structure.place_count(); ++i) {
        VertexId p = VertexId::place(i);
        if (!uniform_place_arc_sign(structure, p))
            report.violated_hypotheses.push_back(
                "place " + structure.label(p) +
                " has incident arcs of both signs");
    }
}

void verify_dominates(const SpnStructure& structure, const VertexSet& d,
                      const Marking& marking) {
    if (!is_dominating(structure, d, marking).dominating)
        throw std::logic_error("synthesized marking failed its domination check");
}

}  // namespace

SynthesisReport synthesize_theorem1(const SpnStructure& structure) {
    require_usable(structure);

    SynthesisReport report;
    report.source_set = VertexSet(source_vertices(structure));
    report.parity_constraints.assign(structure.place_count(),
                                     TokenParity::unconstrained);

    for (int j = 0; j < structure.transition_count(); ++j) {
        VertexId t = VertexId::transition(j);
        if (transition_sign(structure, t) != Sign::plus)
            report.violated_hypotheses.push_back(
                "transition " + structure.label(t) + " is negatively signed");
    }
    check_single_sign_places(structure, report);
    if (!report.violated_hypotheses.empty()) return report;
    report.hypothesis_ok = true;

    // Places in A and places fed by members of A get the parity their own
    // arc sign requires; all other places stay free and are left empty.
    std::vector<char> constrained(structure.place_count(), 0);
    for (VertexId a : report.source_set.members) {
        if (a.is_place()) constrained[a.index] = 1;
        for (VertexId z : structure.postset(a))
            if (z.is_place()) constrained[z.index] = 1;
    }

    Marking marking(structure.place_count());
    for (int i = 0; i < structure.place_count(); ++i) {
        if (!constrained[i]) continue;
        Sign arc_sign = *uniform_place_arc_sign(structure, VertexId::place(i));
        report.parity_constraints[i] =
            arc_sign == Sign::plus ? TokenParity::even : TokenParity::odd;
        marking.negative[i] = arc_sign == Sign::plus ? 0 : 1;
    }

    VertexSet d = complement(structure, report.source_set);
    verify_dominates(structure, d, marking);
    report.marking = std::move(marking);
    report.dominating_sets = {std::move(d)};
    return report;
}

SynthesisReport synthesize_theorem2(const SpnStructure& structure) {
    require_usable(structure);

    SynthesisReport report;
    report.parity_constraints.assign(structure.place_count(),
                                     TokenParity::unconstrained);

    for (VertexId v : structure.vertices()) {
        if (structure.preset(v).empty())
            report.violated_hypotheses.push_back(
                (v.is_place() ? "place " : "transition ") + structure.label(v) +
                " is a source vertex");
        if (structure.postset(v).empty())
            report.violated_hypotheses.push_back(
                (v.is_place() ? "place " : "transition ") + structure.label(v) +
                " is a sink vertex");
    }
    check_single_sign_places(structure, report);

    Sign transitions_sign = transition_sign(structure, VertexId::transition(0));
    for (int j = 1; j < structure.transition_count(); ++j) {
        VertexId t = VertexId::transition(j);
        if (transition_sign(structure, t) != transitions_sign) {
            report.violated_hypotheses.push_back(
                "transitions " + structure.label(VertexId::transition(0)) +
                " and " + structure.label(t) + " differ in sign");
            break;
        }
    }
    if (!report.violated_hypotheses.empty()) return report;
    report.hypothesis_ok = true;

    Marking marking(structure.place_count());
    for (int i = 0; i < structure.place_count(); ++i) {
        Sign arc_sign = *uniform_place_arc_sign(structure, VertexId::place(i));
        bool even = (arc_sign == Sign::plus) == (transitions_sign == Sign::plus);
        report.parity_constraints[i] = even ? TokenParity::even : TokenParity::odd;
        marking.negative[i] = even ? 0 : 1;
    }

    std::vector<VertexId> places, transitions;
    for (int i = 0; i < structure.place_count(); ++i)
        places.push_back(VertexId::place(i));
    for (int j = 0; j < structure.transition_count(); ++j)
        transitions.push_back(VertexId::transition(j));
    VertexSet p_set{std::move(places)}, t_set{std::move(transitions)};

    verify_dominates(structure, p_set, marking);
    verify_dominates(structure, t_set, marking);
    report.marking = std::move(marking);
    report.dominating_sets = {std::move(p_set), std::move(t_set)};
    return report;
}

}  // namespace spn
