#include <doctest.h>

#include <fstream>
#include <sstream>

#include "common.hpp"
#include "spn/io.hpp"

using namespace spn;
using testutil::example;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string models_dir() { return SPN_MODELS_DIR; }

}  // namespace

TEST_CASE("bundled fig1a file loads with the documented initial marking") {
    SignedPetriNet net = load_model_file(models_dir() + "/fig1a.spn.json");
    CHECK(net.initial_marking == Marking({1, 0, 1, 0}, {1, 0, 0, 0}));
    CHECK(net.structure.place_count() == 4);
    CHECK(net.structure.transition_count() == 2);
    CHECK(net == example("fig1a"));
}

TEST_CASE("bundled model files are the canonical serialization") {
    for (const ExampleModel& e : bundled_models()) {
        CAPTURE(e.id);
        CHECK(save_model(e.model) ==
              read_file(models_dir() + "/" + e.id + ".spn.json"));
    }
}

TEST_CASE("every bundled model validates clean") {
    for (const ExampleModel& e : bundled_models()) {
        CAPTURE(e.id);
        CHECK(validate(e.model.structure).ok);
    }
}

TEST_CASE("load rejects malformed documents with field diagnostics") {
    const char* negative_tokens = R"({
      "places": ["a"], "transitions": ["t"],
      "arcs": [{"from": "a", "to": "t", "sign": "+"}],
      "initial_marking": {"positive": [-1], "negative": [0]}
    })";
    CHECK_THROWS_WITH_AS(load_model(negative_tokens),
                         "initial_marking.positive[0] is negative", ParseError);

    const char* short_marking = R"({
      "places": ["a", "b"], "transitions": ["t"],
      "arcs": [{"from": "a", "to": "t"}, {"from": "t", "to": "b"}],
      "initial_marking": {"positive": [1], "negative": [0, 0]}
    })";
    CHECK_THROWS_AS(load_model(short_marking), ParseError);

    const char* unknown_vertex = R"({
      "places": ["a"], "transitions": ["t"],
      "arcs": [{"from": "a", "to": "x"}],
      "initial_marking": {"positive": [0], "negative": [0]}
    })";
    CHECK_THROWS_WITH_AS(load_model(unknown_vertex),
                         "arcs[0] references unknown vertex \"x\"", ParseError);

    const char* bad_sign = R"({
      "places": ["a"], "transitions": ["t"],
      "arcs": [{"from": "a", "to": "t", "sign": "?"}],
      "initial_marking": {"positive": [0], "negative": [0]}
    })";
    CHECK_THROWS_AS(load_model(bad_sign), ParseError);

    const char* bad_weight = R"({
      "places": ["a"], "transitions": ["t"],
      "arcs": [{"from": "a", "to": "t", "weight": 0}],
      "initial_marking": {"positive": [0], "negative": [0]}
    })";
    CHECK_THROWS_AS(load_model(bad_weight), ParseError);

    CHECK_THROWS_AS(load_model("{"), ParseError);
    CHECK_THROWS_AS(load_model(R"({"places": []})"), ParseError);
    CHECK_THROWS_AS(load_model_file("/nonexistent/x.spn.json"), ParseError);
}

TEST_CASE("arc weight defaults to 1 and sign to + when omitted") {
    const char* doc = R"({
      "places": ["a"], "transitions": ["t"],
      "arcs": [{"from": "a", "to": "t"}],
      "initial_marking": {"positive": [0], "negative": [0]}
    })";
    SignedPetriNet net = load_model(doc);
    REQUIRE(net.structure.arcs().size() == 1);
    CHECK(net.structure.arcs()[0].weight == 1);
    CHECK(net.structure.arcs()[0].sign == Sign::plus);
}

TEST_CASE("empty markings serialize explicit zero vectors") {
    std::string text = save_model(example("plagiarism-k5"));
    CHECK(text.find("\"positive\": [") != std::string::npos);
    CHECK(load_model(text).initial_marking == Marking(6));
}

TEST_CASE("marking parser accepts vector notation") {
    CHECK(parse_marking("((1,0,1,0),(1,0,0,0))", 4) ==
          Marking({1, 0, 1, 0}, {1, 0, 0, 0}));
    CHECK(parse_marking(" ( (3, 0, 0) , (0, 1, 0) ) ", 3) ==
          Marking({3, 0, 0}, {0, 1, 0}));
    CHECK_THROWS_AS(parse_marking("((1,0),(0))", 2), ParseError);
    CHECK_THROWS_AS(parse_marking("((1,0),(0,0))", 3), ParseError);
    CHECK_THROWS_AS(parse_marking("(1,0)", 1), ParseError);
    CHECK_THROWS_AS(parse_marking("((1,0),(0,0))x", 2), ParseError);
}
