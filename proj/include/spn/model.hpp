#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace spn {

/// Two-valued sign with the usual product; (-)·(-) = (+).
enum class Sign : std::int8_t { plus = 1, minus = -1 };

constexpr Sign operator*(Sign a, Sign b) { return a == b ? Sign::plus : Sign::minus; }
constexpr Sign& operator*=(Sign& a, Sign b) { return a = a * b; }
constexpr char to_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

enum class VertexKind : std::uint8_t { place, transition };

/// A place or transition, identified by kind and per-kind index.
/// The derived ordering (places before transitions, ascending index) is the
/// canonical vertex order; every set-valued result in the library uses it.
struct VertexId {
    VertexKind kind = VertexKind::place;
    int index = 0;

    static constexpr VertexId place(int i) { return {VertexKind::place, i}; }
    static constexpr VertexId transition(int i) { return {VertexKind::transition, i}; }

    constexpr bool is_place() const { return kind == VertexKind::place; }
    constexpr bool is_transition() const { return kind == VertexKind::transition; }

    friend constexpr auto operator<=>(const VertexId&, const VertexId&) = default;
};

/// Directed arc between a place and a transition (either direction).
/// Place->transition arcs carry the transition's input weight, transition->place
/// arcs its output weight. At most one arc may exist per ordered (source, target)
/// pair, which keeps the sign labeling a function on the arc set.
struct Arc {
    VertexId source;
    VertexId target;
    int weight = 1;
    Sign sign = Sign::plus;

    friend constexpr auto operator<=>(const Arc&, const Arc&) = default;
};

/// Token distribution: per-place counts of positive and negative tokens.
struct Marking {
    std::vector<int> positive;
    std::vector<int> negative;

    Marking() = default;
    explicit Marking(int place_count)
        : positive(place_count, 0), negative(place_count, 0) {}
    Marking(std::vector<int> pos, std::vector<int> neg);

    int place_count() const { return static_cast<int>(positive.size()); }

    friend bool operator==(const Marking&, const Marking&) = default;
    friend auto operator<=>(const Marking&, const Marking&) = default;
};

/// Renders a marking in vector notation, e.g. ((1,0,1,0),(1,0,0,0)).
std::string to_string(const Marking& marking);

/// Immutable net structure: places, transitions and signed weighted arcs.
///
/// Construction enforces the hard invariants (non-empty place and transition
/// sets, bipartite arcs with in-range endpoints, unique ordered pairs, weights
/// >= 1, unique labels) and throws std::invalid_argument on violation. The
/// remaining structural conditions (no isolated vertices) are reported by
/// validate() as data, so files can be loaded first and diagnosed afterwards.
class SpnStructure {
public:
    SpnStructure(int place_count, int transition_count, std::vector<Arc> arcs,
                 std::vector<std::string> place_labels = {},
                 std::vector<std::string> transition_labels = {});

    int place_count() const { return place_count_; }
    int transition_count() const { return transition_count_; }
    int vertex_count() const { return place_count_ + transition_count_; }

    /// All arcs in canonical order (by source, then target).
    const std::vector<Arc>& arcs() const { return arcs_; }

    bool in_range(VertexId v) const;
    void require_in_range(VertexId v) const;

    /// Flat vertex number: place i -> i, transition j -> place_count + j.
    int flat(VertexId v) const {
        return v.is_place() ? v.index : place_count_ + v.index;
    }
    VertexId unflat(int id) const {
        return id < place_count_ ? VertexId::place(id)
                                 : VertexId::transition(id - place_count_);
    }

    const Arc* find_arc(VertexId source, VertexId target) const;
    Sign arc_sign(VertexId source, VertexId target) const;

    /// Input weight of (place, transition), 0 when the arc is absent.
    int input_weight(int place_index, int transition_index) const;
    /// Output weight of (transition, place), 0 when the arc is absent.
    int output_weight(int place_index, int transition_index) const;

    const std::vector<VertexId>& preset(VertexId v) const;
    const std::vector<VertexId>& postset(VertexId v) const;

    /// All vertices in canonical order.
    std::vector<VertexId> vertices() const;

    const std::string& label(VertexId v) const;
    std::optional<VertexId> find_vertex(const std::string& label) const;

    /// True when every arc weight is 1. The domination and synthesis
    /// operations require this.
    bool is_ordinary() const;

    friend bool operator==(const SpnStructure&, const SpnStructure&);

private:
    int place_count_ = 0;
    int transition_count_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::string> labels_;              // indexed by flat id
    std::vector<std::vector<VertexId>> presets_;   // indexed by flat id
    std::vector<std::vector<VertexId>> postsets_;  // indexed by flat id
};

/// A net structure together with its initial marking.
struct SignedPetriNet {
    SpnStructure structure;
    Marking initial_marking;

    SignedPetriNet(SpnStructure s, Marking m0);

    friend bool operator==(const SignedPetriNet&, const SignedPetriNet&) = default;
};

struct Violation {
    std::string code;
    VertexId vertex;
    std::string message;
};

struct ValidationReport {
    bool ok = false;
    std::vector<Violation> violations;
    bool is_ordinary = false;
    bool is_negative_spn = false;  // every arc carries a negative sign
    bool has_sources = false;      // some vertex has an empty preset
    bool has_sinks = false;        // some vertex has an empty postset
};

/// Checks the structural net conditions that are not enforced at
/// construction (currently: every vertex must have at least one incident arc)
/// and computes the report flags. Violations are data, not errors.
ValidationReport validate(const SpnStructure& structure);

struct Adjacency {
    std::vector<VertexId> preset;
    std::vector<VertexId> postset;
};

/// Preset and postset of a vertex, canonically ordered.
Adjacency adjacency(const SpnStructure& structure, VertexId v);

/// Vertices with an empty preset, canonically ordered.
std::vector<VertexId> source_vertices(const SpnStructure& structure);

/// Throws std::invalid_argument when the marking length does not match the
/// structure's place count.
void require_marking_compatible(const SpnStructure& structure, const Marking& marking);

}  // namespace spn
