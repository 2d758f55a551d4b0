#pragma once

#include <stdexcept>
#include <string>

#include "spn/model.hpp"

namespace spn {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Parses a model document (UTF-8 JSON, see README for the schema). Hard
/// invariants (bipartite arcs, unique labels, non-negative token counts,
/// marking lengths) are enforced here with field diagnostics; the softer
/// structural conditions are left for validate().
SignedPetriNet load_model(const std::string& text);
SignedPetriNet load_model_file(const std::string& path);

/// Canonical serialization: fixed key order, arcs sorted by source then
/// target, two-space indent, trailing newline. Structurally equal nets
/// always serialize to identical text.
std::string save_model(const SignedPetriNet& net);
void save_model_file(const SignedPetriNet& net, const std::string& path);

/// Parses a marking in vector notation, e.g. ((1,0),(0,2)).
Marking parse_marking(const std::string& text, int place_count);

}  // namespace spn
