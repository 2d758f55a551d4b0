#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spn/domination.hpp"
#include "spn/model.hpp"

namespace spn {

/// Parity requirement on a place's negative-token count.
enum class TokenParity { even, odd, unconstrained };

constexpr const char* to_string(TokenParity p) {
    switch (p) {
        case TokenParity::even: return "even";
        case TokenParity::odd: return "odd";
        default: return "free";
    }
}

struct SynthesisReport {
    bool hypothesis_ok = false;
    std::vector<std::string> violated_hypotheses;
    std::optional<Marking> marking;          // present iff hypothesis_ok
    std::vector<VertexSet> dominating_sets;  // verified against the marking
    VertexSet source_set;                    // the source vertices A (may be empty)
    std::vector<TokenParity> parity_constraints;  // per place, on negative tokens
};

/// Constructs a marking under which V minus the source vertices dominates,
/// for an ordinary valid structure whose transitions are all positively
/// signed and whose places each carry arcs of a single sign. Source vertices
/// and the places they feed get the parity their arc sign demands on the
/// negative-token count (even for positive arcs, odd for negative ones);
/// every free value is fixed to its least representative. Hypothesis
/// violations come back in the report instead of raising.
SynthesisReport synthesize_theorem1(const SpnStructure& structure);

/// Constructs a marking under which both the place set and the transition
/// set dominate, for an ordinary valid structure with no source or sink
/// vertices, single-sign places, and uniformly signed transitions. With
/// positively signed transitions a place's negative-token parity follows its
/// arc sign; with negatively signed transitions the parity flips.
SynthesisReport synthesize_theorem2(const SpnStructure& structure);

}  // namespace spn
