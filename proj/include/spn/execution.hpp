#pragma once

#include <optional>
#include <vector>

#include "spn/model.hpp"

namespace spn {

/// Whether t may fire at the marking. Two conditions must hold:
///   1. token coverage: every positive input arc is covered by positive
///      tokens and every negative input arc by negative tokens;
///   2. output-sign rule: some output arc of t has a sign admitted by the
///      input signs (all-positive inputs need a positive output arc,
///      all-negative inputs a negative one, mixed inputs admit either; with
///      no input arcs either kind of output arc qualifies).
/// A transition with an empty postset can never fire.
bool is_enabled(const SpnStructure& structure, const Marking& marking, VertexId t);

/// Fires t: each input arc removes its weight from the token population of
/// its own sign, each output arc adds its weight to the population of its
/// own sign. Every output arc produces, regardless of which case of the
/// output-sign rule enabled the firing. Throws when t is not enabled.
Marking fire(const SpnStructure& structure, const Marking& marking, VertexId t);

struct FiringSequence {
    std::vector<VertexId> transitions;  // repeats allowed
};

/// Trace of a firing sequence. `trace` starts with the initial marking and
/// gains one entry per fired step; when a step is disabled, `failed_step`
/// holds its 0-based position in the sequence and the trace stays partial.
struct FireSequenceResult {
    std::vector<Marking> trace;
    std::optional<int> failed_step;

    bool ok() const { return !failed_step.has_value(); }
};

FireSequenceResult fire_sequence(const SpnStructure& structure,
                                 const Marking& initial,
                                 const FiringSequence& sequence);

/// Exploration bounds; nets may be unbounded, so every cap is mandatory.
struct ExplorationCaps {
    int max_nodes = 10000;
    int max_depth = 64;
    int max_tokens_per_place = 255;
};

struct TreeNode {
    Marking marking;
    int parent = -1;  // -1 for the root
    int via = -1;     // transition index fired to reach this node
    int depth = 0;
};

/// Rooted tree of markings produced by breadth-first firing from the initial
/// marking; children are ordered by transition index. A node whose marking
/// was already seen stays in the tree but is not expanded further, so the
/// construction terminates whenever the reachable marking set is finite.
struct ReachabilityTree {
    std::vector<TreeNode> nodes;  // BFS order; node id = index; root = 0
    bool truncated = false;       // some cap cut the exploration short
    ExplorationCaps caps;

    std::vector<int> children(int node) const;
};

ReachabilityTree reachability_tree(const SignedPetriNet& net,
                                   const ExplorationCaps& caps = {});

/// Deduplicated markings of the reachability tree under the same caps.
struct ReachabilitySet {
    std::vector<Marking> markings;  // sorted ascending
    bool complete = false;          // exploration closed without hitting a cap

    bool contains(const Marking& marking) const;
};

ReachabilitySet reachability_set(const SignedPetriNet& net,
                                 const ExplorationCaps& caps = {});

}  // namespace spn
