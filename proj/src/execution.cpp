#include "spn/execution.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace spn {

bool is_enabled(const SpnStructure& structure, const Marking& marking,
                VertexId t) {
    if (!t.is_transition())
        throw std::invalid_argument("is_enabled expects a transition");
    structure.require_in_range(t);
    require_marking_compatible(structure, marking);

    bool has_positive_input = false;
    bool has_negative_input = false;
    for (VertexId p : structure.preset(t)) {
        const Arc* a = structure.find_arc(p, t);
        if (a->sign == Sign::plus) {
            has_positive_input = true;
            if (marking.positive[p.index] < a->weight) return false;
        } else {
            has_negative_input = true;
            if (marking.negative[p.index] < a->weight) return false;
        }
    }

    for (VertexId p : structure.postset(t)) {
        Sign out = structure.arc_sign(t, p);
        if (has_positive_input && has_negative_input) return true;  // mixed
        if (has_positive_input) {
            if (out == Sign::plus) return true;
        } else if (has_negative_input) {
            if (out == Sign::minus) return true;
        } else {
            return true;  // no inputs: token conditions vacuous
        }
    }
    return false;  // empty postset, or no output arc of an admitted sign
}

Marking fire(const SpnStructure& structure, const Marking& marking, VertexId t) {
    if (!is_enabled(structure, marking, t))
        throw std::runtime_error("transition " + structure.label(t) +
                                 " is not enabled");
    Marking next = marking;
    for (VertexId p : structure.preset(t)) {
        const Arc* a = structure.find_arc(p, t);
        (a->sign == Sign::plus ? next.positive : next.negative)[p.index] -=
            a->weight;
    }
    for (VertexId p : structure.postset(t)) {
        const Arc* a = structure.find_arc(t, p);
        (a->sign == Sign::plus ? next.positive : next.negative)[p.index] +=
            a->weight;
    }
    return next;
}

FireSequenceResult fire_sequence(const SpnStructure& structure,
                                 const Marking& initial,
                                 const FiringSequence& sequence) {
    require_marking_compatible(structure, initial);
    FireSequenceResult result;
    result.trace.push_back(initial);
    for (std::size_t i = 0; i < sequence.transitions.size(); ++i) {
        VertexId t = sequence.transitions[i];
        if (!t.is_transition())
            throw std::invalid_argument("firing sequence contains a place");
        structure.require_in_range(t);
        if (!is_enabled(structure, result.trace.back(), t)) {
            result.failed_step = static_cast<int>(i);
            return result;
        }
        result.trace.push_back(fire(structure, result.trace.back(), t));
    }
    return result;
}

std::vector<int> ReachabilityTree::children(int node) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].parent == node) out.push_back(static_cast<int>(i));
    return out;
}

ReachabilityTree reachability_tree(const SignedPetriNet& net,
                                   const ExplorationCaps& caps) {
    if (caps.max_nodes < 1 || caps.max_depth < 1 || caps.max_tokens_per_place < 1)
        throw std::invalid_argument("exploration caps must all be >= 1");

    const SpnStructure& structure = net.structure;
    ReachabilityTree tree;
    tree.caps = caps;
    tree.nodes.push_back({net.initial_marking, -1, -1, 0});

    std::map<Marking, int> seen{{net.initial_marking, 0}};
    std::deque<int> frontier{0};

    auto over_token_cap = [&caps](const Marking& m) {
        auto over = [&caps](int c) { return c > caps.max_tokens_per_place; };
        return std::any_of(m.positive.begin(), m.positive.end(), over) ||
               std::any_of(m.negative.begin(), m.negative.end(), over);
    };

    while (!frontier.empty()) {
        int id = frontier.front();
        frontier.pop_front();
        for (int tj = 0; tj < structure.transition_count(); ++tj) {
            VertexId t = VertexId::transition(tj);
            if (!is_enabled(structure, tree.nodes[id].marking, t)) continue;
            if (tree.nodes[id].depth >= caps.max_depth) {
                tree.truncated = true;
                break;
            }
            Marking child = fire(structure, tree.nodes[id].marking, t);
            if (over_token_cap(child)) {
                tree.truncated = true;
                continue;
            }
            if (static_cast<int>(tree.nodes.size()) >= caps.max_nodes) {
                tree.truncated = true;
                return tree;
            }
            int child_id = static_cast<int>(tree.nodes.size());
            tree.nodes.push_back(
                {std::move(child), id, tj, tree.nodes[id].depth + 1});
            auto [it, inserted] = seen.emplace(tree.nodes[child_id].marking, child_id);
            if (inserted) frontier.push_back(child_id);
            // repeated markings stay as tree nodes but are not expanded
        }
    }
    return tree;
}

bool ReachabilitySet::contains(const Marking& marking) const {
    return std::binary_search(markings.begin(), markings.end(), marking);
}

ReachabilitySet reachability_set(const SignedPetriNet& net,
                                 const ExplorationCaps& caps) {
    ReachabilityTree tree = reachability_tree(net, caps);
    ReachabilitySet set;
    set.markings.reserve(tree.nodes.size());
    for (const TreeNode& n : tree.nodes) set.markings.push_back(n.marking);
    std::sort(set.markings.begin(), set.markings.end());
    set.markings.erase(std::unique(set.markings.begin(), set.markings.end()),
                       set.markings.end());
    set.complete = !tree.truncated;
    return set;
}

}  // namespace spn
