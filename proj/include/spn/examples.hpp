#pragma once

#include <string>
#include <vector>

#include "spn/model.hpp"

namespace spn {

/// A bundled demonstration model. Every bundled model passes validate() and
/// the behaviors described in `notes` are pinned by the test suite.
struct ExampleModel {
    std::string id;
    std::string summary;  // one line, shown by `examples list`
    std::string notes;    // construction notes
    SignedPetriNet model;
};

/// The bundled corpus, in a fixed order:
/// fig1a, fig1b, product-decision, producer-consumer, bees, plagiarism-k5.
const std::vector<ExampleModel>& bundled_models();

/// Looks up a bundled model by id; nullptr when unknown.
const ExampleModel* find_example(const std::string& id);

}  // namespace spn
