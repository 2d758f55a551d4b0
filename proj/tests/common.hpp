#pragma once

#include <stdexcept>
#include <string>

#include "spn/examples.hpp"

namespace testutil {

inline const spn::SignedPetriNet& example(const std::string& id) {
    const spn::ExampleModel* e = spn::find_example(id);
    if (!e) throw std::runtime_error("missing bundled model " + id);
    return e->model;
}

inline spn::VertexId P(int i) { return spn::VertexId::place(i); }
inline spn::VertexId T(int j) { return spn::VertexId::transition(j); }

}  // namespace testutil
