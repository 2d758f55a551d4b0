#include "spn/dot.hpp"

#include <sstream>

namespace spn {

std::string export_dot(const SpnStructure& structure, const Marking& marking) {
    require_marking_compatible(structure, marking);
    std::ostringstream out;
    out << "digraph spn {\n";
    out << "  rankdir=LR;\n";
    out << "  node [fontname=\"Helvetica\"];\n";
    for (int i = 0; i < structure.place_count(); ++i) {
        VertexId p = VertexId::place(i);
        std::string label = structure.label(p);
        std::string tokens;
        if (marking.positive[i] > 0)
            tokens += "●" + std::to_string(marking.positive[i]);
        if (marking.negative[i] > 0) {
            if (!tokens.empty()) tokens += ' ';
            tokens += "○" + std::to_string(marking.negative[i]);
        }
        out << "  \"" << label << "\" [shape=circle, label=\"" << label;
        if (!tokens.empty()) out << "\\n" << tokens;
        out << "\"];\n";
    }
    for (int j = 0; j < structure.transition_count(); ++j) {
        VertexId t = VertexId::transition(j);
        out << "  \"" << structure.label(t)
            << "\" [shape=box, style=filled, fillcolor=black, fontcolor=white,"
               " height=0.25];\n";
    }
    for (const Arc& a : structure.arcs()) {
        out << "  \"" << structure.label(a.source) << "\" -> \""
            << structure.label(a.target) << "\" [style="
            << (a.sign == Sign::plus ? "solid" : "dashed");
        if (a.weight != 1) out << ", label=\"" << a.weight << "\"";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string export_dot(const SignedPetriNet& net) {
    return export_dot(net.structure, net.initial_marking);
}

}  // namespace spn
