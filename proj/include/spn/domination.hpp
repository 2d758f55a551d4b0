#pragma once

#include <optional>
#include <vector>

#include "spn/execution.hpp"
#include "spn/model.hpp"

namespace spn {

/// Canonically ordered set of vertices; duplicates are removed on construction.
struct VertexSet {
    std::vector<VertexId> members;

    VertexSet() = default;
    explicit VertexSet(std::vector<VertexId> vs);

    bool contains(VertexId v) const;
    int size() const { return static_cast<int>(members.size()); }
    bool empty() const { return members.empty(); }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

/// Every vertex of the structure.
VertexSet full_vertex_set(const SpnStructure& structure);
/// Vertices of the structure not contained in the given set.
VertexSet complement(const SpnStructure& structure, const VertexSet& set);

/// Set of markings, deduplicated and sorted on construction. `origin`
/// optionally records the reachability-tree node ids the markings came from.
struct MarkingSet {
    std::vector<Marking> markings;
    std::optional<std::vector<int>> origin;

    MarkingSet() = default;
    explicit MarkingSet(std::vector<Marking> ms,
                        std::optional<std::vector<int>> origin_nodes = {});
};

/// Marking set holding the markings of the given tree nodes.
MarkingSet marking_set_from_tree(const ReachabilityTree& tree,
                                 const std::vector<int>& nodes);

enum class DominationFailureReason {
    empty_postset_intersection,  // v's postset misses D entirely
    sign_mismatch,               // sigma(v,u) != S(v)*S(u) for some u in v's postset within D
};

struct DominationFailure {
    VertexId vertex;
    DominationFailureReason reason = DominationFailureReason::empty_postset_intersection;
    std::optional<VertexId> witness;  // the offending u for sign mismatches
    std::optional<int> context;       // marking index or tree node id, per operation
};

struct DominationReport {
    VertexSet set;
    bool dominating = false;
    std::vector<DominationFailure> failures;
};

/// Whether D dominates with respect to the marking: D is the whole vertex
/// set, or every outside vertex v has a postset member in D and
/// sigma(v,u) = S(v)*S(u) holds for each such member u, where S is the
/// marking-based sign for places and the structural sign for transitions.
/// Requires an ordinary structure.
DominationReport is_dominating(const SpnStructure& structure, const VertexSet& d,
                               const Marking& marking);

/// Whether D dominates with respect to every marking in the set. The set
/// must contain at least two distinct markings. Failures carry the index of
/// the offending marking in `context`.
DominationReport is_dominating_over(const SpnStructure& structure,
                                    const VertexSet& d, const MarkingSet& markings);

/// Whether D dominates over the markings of the given tree nodes, which must
/// form a non-empty connected subtree (throws otherwise). Duplicate markings
/// at different nodes are checked per node; failures carry the node id in
/// `context`.
DominationReport is_dependent_dominating(const SpnStructure& structure,
                                         const VertexSet& d,
                                         const ReachabilityTree& tree,
                                         const std::vector<int>& nodes);

/// Largest root-anchored connected set of tree nodes whose markings D all
/// dominates: a node is kept iff D dominates its marking and its parent is
/// kept (the root iff it is dominated). May be empty.
std::vector<int> maximal_dependent_marking_set(const SpnStructure& structure,
                                               const VertexSet& d,
                                               const ReachabilityTree& tree);

inline constexpr int kExhaustiveVertexLimit = 20;

/// All inclusion-minimal dominating sets with respect to the marking:
/// dominating sets none of whose proper subsets dominate. The sign condition
/// makes domination non-monotone, so the full subset lattice is enumerated
/// (optionally restricted to subsets of `restrict_to`); results are ordered by
/// cardinality, then lexicographically in canonical vertex order. Throws
/// std::length_error when the vertex count exceeds `max_vertices`.
std::vector<VertexSet> minimal_dominating_sets(
    const SpnStructure& structure, const Marking& marking,
    const std::optional<VertexSet>& restrict_to = {},
    int max_vertices = kExhaustiveVertexLimit);

/// A smallest-cardinality dominating set (ties broken by canonical order).
/// One always exists because the full vertex set dominates.
VertexSet minimum_dominating_set(const SpnStructure& structure,
                                 const Marking& marking,
                                 int max_vertices = kExhaustiveVertexLimit);

/// Result of the hub-and-leaves similarity analysis.
struct SimilarityReport {
    std::vector<VertexId> similar;  // leaf places flagged as similar
    VertexSet d2;                   // minimum transition set added to the place set
    bool d1_dominates = false;      // the place set alone already dominated
    VertexId hub;                   // the hub place
};

/// Runs the domination-based similarity check on a star-shaped net: one hub
/// place feeding k transitions through negative arcs, each transition feeding
/// its own leaf place through a negative arc. Starting from D1 = all places,
/// finds the unique minimum transition set D2 such that D1 union D2 dominates
/// with respect to `post_matching`, and reports the leaves whose transitions
/// stayed outside D2 as similar. Throws when the net is not of this shape.
SimilarityReport similarity_report(const SpnStructure& structure,
                                   const Marking& post_matching);

}  // namespace spn
