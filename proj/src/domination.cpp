#include "spn/domination.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "spn/signing.hpp"

namespace spn {

VertexSet::VertexSet(std::vector<VertexId> vs) : members(std::move(vs)) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool VertexSet::contains(VertexId v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

VertexSet full_vertex_set(const SpnStructure& structure) {
    return VertexSet(structure.vertices());
}

VertexSet complement(const SpnStructure& structure, const VertexSet& set) {
    std::vector<VertexId> out;
    for (VertexId v : structure.vertices())
        if (!set.contains(v)) out.push_back(v);
    return VertexSet(std::move(out));
}

MarkingSet::MarkingSet(std::vector<Marking> ms,
                       std::optional<std::vector<int>> origin_nodes)
    : markings(std::move(ms)), origin(std::move(origin_nodes)) {
    std::sort(markings.begin(), markings.end());
    markings.erase(std::unique(markings.begin(), markings.end()),
                   markings.end());
}

MarkingSet marking_set_from_tree(const ReachabilityTree& tree,
                                 const std::vector<int>& nodes) {
    std::vector<Marking> ms;
    ms.reserve(nodes.size());
    for (int id : nodes) {
        if (id < 0 || id >= static_cast<int>(tree.nodes.size()))
            throw std::out_of_range("tree node id out of range");
        ms.push_back(tree.nodes[id].marking);
    }
    return MarkingSet(std::move(ms), nodes);
}

namespace {

void require_ordinary(const SpnStructure& structure) {
    if (!structure.is_ordinary())
        throw std::invalid_argument(
            "domination analysis requires an ordinary net (all arc weights 1)");
}

void require_members_in_range(const SpnStructure& structure, const VertexSet& d) {
    for (VertexId v : d.members) structure.require_in_range(v);
}

// One-marking domination check shared by all the domination operations.
// Appends failures tagged with `context` and returns whether the check passed.
bool check_dominating_at(const SpnStructure& structure, const VertexSet& d,
                         const Marking& marking, std::optional<int> context,
                         std::vector<DominationFailure>& failures) {
    bool ok = true;
    if (d.size() == structure.vertex_count()) return true;  // D = V
    for (VertexId v : structure.vertices()) {
        if (d.contains(v)) continue;
        bool any_in_d = false;
        for (VertexId u : structure.postset(v)) {
            if (!d.contains(u)) continue;
            any_in_d = true;
            Sign required = vertex_sign(structure, marking, v) *
                            vertex_sign(structure, marking, u);
            if (structure.arc_sign(v, u) != required) {
                failures.push_back(
                    {v, DominationFailureReason::sign_mismatch, u, context});
                ok = false;
            }
        }
        if (!any_in_d) {
            failures.push_back(
                {v, DominationFailureReason::empty_postset_intersection,
                 std::nullopt, context});
            ok = false;
        }
    }
    return ok;
}

}  // namespace

DominationReport is_dominating(const SpnStructure& structure, const VertexSet& d,
                               const Marking& marking) {
    require_ordinary(structure);
    require_members_in_range(structure, d);
    require_marking_compatible(structure, marking);
    DominationReport report{d, false, {}};
    report.dominating =
        check_dominating_at(structure, d, marking, std::nullopt, report.failures);
    return report;
}

DominationReport is_dominating_over(const SpnStructure& structure,
                                    const VertexSet& d,
                                    const MarkingSet& markings) {
    require_ordinary(structure);
    require_members_in_range(structure, d);
    if (markings.markings.size() < 2)
        throw std::invalid_argument(
            "a marking set needs at least two distinct markings");
    for (const Marking& m : markings.markings)
        require_marking_compatible(structure, m);

    DominationReport report{d, true, {}};
    for (std::size_t i = 0; i < markings.markings.size(); ++i)
        report.dominating &=
            check_dominating_at(structure, d, markings.markings[i],
                                static_cast<int>(i), report.failures);
    return report;
}

DominationReport is_dependent_dominating(const SpnStructure& structure,
                                         const VertexSet& d,
                                         const ReachabilityTree& tree,
                                         const std::vector<int>& nodes) {
    require_ordinary(structure);
    require_members_in_range(structure, d);
    if (nodes.empty()) throw std::invalid_argument("empty tree node set");

    std::set<int> node_set;
    for (int id : nodes) {
        if (id < 0 || id >= static_cast<int>(tree.nodes.size()))
            throw std::out_of_range("tree node id out of range");
        node_set.insert(id);
    }
    // A subset of tree nodes is connected iff exactly one member's parent
    // lies outside the subset.
    int tops = 0;
    for (int id : node_set) {
        int parent = tree.nodes[id].parent;
        if (parent < 0 || !node_set.count(parent)) ++tops;
    }
    if (tops != 1)
        throw std::invalid_argument(
            "node set is not a connected subtree of the reachability tree");

    DominationReport report{d, true, {}};
    for (int id : node_set)
        report.dominating &= check_dominating_at(
            structure, d, tree.nodes[id].marking, id, report.failures);
    return report;
}

std::vector<int> maximal_dependent_marking_set(const SpnStructure& structure,
                                               const VertexSet& d,
                                               const ReachabilityTree& tree) {
    require_ordinary(structure);
    require_members_in_range(structure, d);
    std::vector<char> kept(tree.nodes.size(), 0);
    std::vector<int> out;
    std::vector<DominationFailure> scratch;
    // Nodes are stored in BFS order, so parents precede children.
    for (std::size_t id = 0; id < tree.nodes.size(); ++id) {
        int parent = tree.nodes[id].parent;
        if (parent >= 0 && !kept[parent]) continue;
        scratch.clear();
        if (check_dominating_at(structure, d, tree.nodes[id].marking,
                                std::nullopt, scratch)) {
            kept[id] = 1;
            out.push_back(static_cast<int>(id));
        }
    }
    return out;
}

namespace {

// Bitmask-based domination checker over the canonical vertex numbering
// (bit i = flat vertex id i). Valid for one fixed marking.
struct MaskChecker {
    int vertex_count = 0;
    std::uint32_t full = 0;
    std::vector<std::uint32_t> post_mask;  // postset of each vertex
    std::vector<std::uint32_t> bad_mask;   // postset members violating the sign rule

    MaskChecker(const SpnStructure& structure, const Marking& marking) {
        vertex_count = structure.vertex_count();
        full = (vertex_count == 32) ? ~0u : ((1u << vertex_count) - 1);
        post_mask.assign(vertex_count, 0);
        bad_mask.assign(vertex_count, 0);
        for (VertexId v : structure.vertices()) {
            int i = structure.flat(v);
            for (VertexId u : structure.postset(v)) {
                std::uint32_t bit = 1u << structure.flat(u);
                post_mask[i] |= bit;
                Sign required = vertex_sign(structure, marking, v) *
                                vertex_sign(structure, marking, u);
                if (structure.arc_sign(v, u) != required) bad_mask[i] |= bit;
            }
        }
    }

    bool dominating(std::uint32_t d) const {
        if (d == full) return true;
        for (int i = 0; i < vertex_count; ++i) {
            if (d & (1u << i)) continue;
            if (!(post_mask[i] & d) || (bad_mask[i] & d)) return false;
        }
        return true;
    }
};

VertexSet set_from_mask(const SpnStructure& structure, std::uint32_t mask) {
    std::vector<VertexId> members;
    for (int i = 0; i < structure.vertex_count(); ++i)
        if (mask & (1u << i)) members.push_back(structure.unflat(i));
    return VertexSet(std::move(members));
}

std::uint32_t mask_from_set(const SpnStructure& structure, const VertexSet& set) {
    std::uint32_t mask = 0;
    for (VertexId v : set.members) {
        structure.require_in_range(v);
        mask |= 1u << structure.flat(v);
    }
    return mask;
}

void require_enumerable(const SpnStructure& structure, int max_vertices) {
    if (max_vertices < 1 || max_vertices > 25)
        throw std::invalid_argument("exhaustive vertex limit must be in [1,25]");
    if (structure.vertex_count() > max_vertices)
        throw std::length_error(
            "net has too many vertices for exhaustive enumeration (" +
            std::to_string(structure.vertex_count()) + " > " +
            std::to_string(max_vertices) + ")");
}

}  // namespace

std::vector<VertexSet> minimal_dominating_sets(
    const SpnStructure& structure, const Marking& marking,
    const std::optional<VertexSet>& restrict_to, int max_vertices) {
    require_ordinary(structure);
    require_marking_compatible(structure, marking);
    require_enumerable(structure, max_vertices);

    MaskChecker checker(structure, marking);
    std::uint32_t universe =
        restrict_to ? mask_from_set(structure, *restrict_to) : checker.full;

    std::size_t table = std::size_t{1} << checker.vertex_count;
    std::vector<std::uint8_t> dom(table, 0);
    for (std::uint32_t m = universe;; m = (m - 1) & universe) {
        dom[m] = checker.dominating(m);
        if (m == 0) break;
    }

    // g[m] = some dominating subset of m exists. A set is minimal exactly
    // when it dominates and no single-bit removal leads to a dominating
    // subset; domination is not monotone, so the whole lattice is scanned.
    std::vector<std::uint8_t> g(table, 0);
    std::vector<std::uint32_t> minimal_masks;
    for (std::uint32_t m = 0; m < table; ++m) {
        bool proper_subset_dominates = false;
        for (std::uint32_t bits = m; bits;) {
            std::uint32_t bit = bits & (~bits + 1);
            bits ^= bit;
            if (g[m ^ bit]) {
                proper_subset_dominates = true;
                break;
            }
        }
        g[m] = dom[m] || proper_subset_dominates;
        if (dom[m] && !proper_subset_dominates) minimal_masks.push_back(m);
    }

    std::vector<VertexSet> out;
    out.reserve(minimal_masks.size());
    for (std::uint32_t m : minimal_masks) out.push_back(set_from_mask(structure, m));
    std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.members < b.members;
    });
    return out;
}

VertexSet minimum_dominating_set(const SpnStructure& structure,
                                 const Marking& marking, int max_vertices) {
    require_ordinary(structure);
    require_marking_compatible(structure, marking);
    require_enumerable(structure, max_vertices);

    MaskChecker checker(structure, marking);
    int n = checker.vertex_count;
    // k-subsets in lexicographic index order give the canonical tie-break.
    std::vector<int> idx;
    for (int k = 0; k <= n; ++k) {
        idx.resize(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            std::uint32_t mask = 0;
            for (int i : idx) mask |= 1u << i;
            if (checker.dominating(mask)) return set_from_mask(structure, mask);
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    // Unreachable: the full set always dominates.
    return full_vertex_set(structure);
}

namespace {

// Shape check for the similarity net: hub place -> t_i -> leaf place, all
// arcs negative and weight 1. Returns the hub and the leaf of each transition.
struct StarShape {
    int hub = 0;
    std::vector<int> leaf_of_transition;
};

StarShape require_star_topology(const SpnStructure& structure) {
    auto fail = [](const std::string& why) {
        throw std::runtime_error("not a hub-and-leaves similarity net: " + why);
    };
    if (!structure.is_ordinary()) fail("net has arc weights > 1");
    if (structure.place_count() != structure.transition_count() + 1)
        fail("need exactly one more place than transitions");
    for (const Arc& a : structure.arcs())
        if (a.sign != Sign::minus) fail("all arcs must be negative");

    int hub = -1;
    for (int i = 0; i < structure.place_count(); ++i) {
        VertexId p = VertexId::place(i);
        if (structure.preset(p).empty() && !structure.postset(p).empty()) {
            if (hub >= 0) fail("more than one hub candidate");
            hub = i;
        }
    }
    if (hub < 0) fail("no hub place (empty preset, non-empty postset)");
    if (static_cast<int>(structure.postset(VertexId::place(hub)).size()) !=
        structure.transition_count())
        fail("hub must feed every transition");

    StarShape shape;
    shape.hub = hub;
    shape.leaf_of_transition.resize(structure.transition_count());
    std::vector<char> leaf_used(structure.place_count(), 0);
    for (int j = 0; j < structure.transition_count(); ++j) {
        VertexId t = VertexId::transition(j);
        const auto& pre = structure.preset(t);
        const auto& post = structure.postset(t);
        if (pre.size() != 1 || pre[0] != VertexId::place(hub))
            fail("transition " + structure.label(t) + " must read only the hub");
        if (post.size() != 1 || post[0].index == hub)
            fail("transition " + structure.label(t) + " must feed exactly one leaf");
        int leaf = post[0].index;
        if (leaf_used[leaf])
            fail("two transitions share leaf " +
                 structure.label(VertexId::place(leaf)));
        leaf_used[leaf] = 1;
        if (!structure.postset(post[0]).empty())
            fail("leaf " + structure.label(post[0]) + " must be a sink");
        shape.leaf_of_transition[j] = leaf;
    }
    return shape;
}

}  // namespace

SimilarityReport similarity_report(const SpnStructure& structure,
                                   const Marking& post_matching) {
    require_marking_compatible(structure, post_matching);
    StarShape shape = require_star_topology(structure);

    std::vector<VertexId> places;
    for (int i = 0; i < structure.place_count(); ++i)
        places.push_back(VertexId::place(i));
    VertexSet d1{std::move(places)};

    DominationReport base = is_dominating(structure, d1, post_matching);

    SimilarityReport report;
    report.hub = VertexId::place(shape.hub);
    report.d1_dominates = base.dominating;

    // Any transition that fails the check must join D2, and D2 made of
    // exactly the failing transitions restores domination, so this D2 is the
    // unique minimum choice.
    std::vector<VertexId> d2_members;
    for (const DominationFailure& f : base.failures)
        d2_members.push_back(f.vertex);
    report.d2 = VertexSet(std::move(d2_members));

    for (int j = 0; j < structure.transition_count(); ++j)
        if (!report.d2.contains(VertexId::transition(j)))
            report.similar.push_back(
                VertexId::place(shape.leaf_of_transition[j]));
    std::sort(report.similar.begin(), report.similar.end());

    std::vector<VertexId> joined = d1.members;
    joined.insert(joined.end(), report.d2.members.begin(),
                  report.d2.members.end());
    if (!is_dominating(structure, VertexSet(std::move(joined)), post_matching)
             .dominating)
        throw std::logic_error("similarity analysis produced a non-dominating set");
    return report;
}

}  // namespace spn
