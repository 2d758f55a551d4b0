#include "spn/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace spn {

namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> read_name_list(const json& doc, const char* field) {
    if (!doc.contains(field))
        throw ParseError(std::string("missing \"") + field + "\" list");
    const json& list = doc[field];
    if (!list.is_array() || list.empty())
        throw ParseError(std::string("\"") + field +
                         "\" must be a non-empty list of names");
    std::vector<std::string> names;
    for (const json& item : list) {
        if (!item.is_string())
            throw ParseError(std::string("\"") + field +
                             "\" entries must be strings");
        names.push_back(item.get<std::string>());
    }
    return names;
}

std::vector<int> read_count_vector(const json& marking, const char* field,
                                   std::size_t places) {
    if (!marking.contains(field))
        throw ParseError(std::string("initial_marking is missing \"") + field +
                         "\"");
    const json& list = marking[field];
    if (!list.is_array())
        throw ParseError(std::string("initial_marking.") + field +
                         " must be a list");
    if (list.size() != places)
        throw ParseError(std::string("initial_marking.") + field + " has " +
                         std::to_string(list.size()) + " entries but the net has " +
                         std::to_string(places) + " places");
    std::vector<int> counts;
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (!list[i].is_number_integer())
            throw ParseError(std::string("initial_marking.") + field + "[" +
                             std::to_string(i) + "] must be an integer");
        int c = list[i].get<int>();
        if (c < 0)
            throw ParseError(std::string("initial_marking.") + field + "[" +
                             std::to_string(i) + "] is negative");
        counts.push_back(c);
    }
    return counts;
}

}  // namespace

SignedPetriNet load_model(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!doc.is_object()) throw ParseError("model document must be an object");

    std::vector<std::string> places = read_name_list(doc, "places");
    std::vector<std::string> transitions = read_name_list(doc, "transitions");

    auto resolve = [&](const std::string& name,
                       std::size_t arc_index) -> VertexId {
        for (std::size_t i = 0; i < places.size(); ++i)
            if (places[i] == name) return VertexId::place(static_cast<int>(i));
        for (std::size_t j = 0; j < transitions.size(); ++j)
            if (transitions[j] == name)
                return VertexId::transition(static_cast<int>(j));
        throw ParseError("arcs[" + std::to_string(arc_index) +
                         "] references unknown vertex \"" + name + "\"");
    };

    if (!doc.contains("arcs") || !doc["arcs"].is_array())
        throw ParseError("missing \"arcs\" list");
    std::vector<Arc> arcs;
    std::size_t index = 0;
    for (const json& entry : doc["arcs"]) {
        if (!entry.is_object() || !entry.contains("from") || !entry.contains("to"))
            throw ParseError("arcs[" + std::to_string(index) +
                             "] needs \"from\" and \"to\" fields");
        Arc arc;
        arc.source = resolve(entry["from"].get<std::string>(), index);
        arc.target = resolve(entry["to"].get<std::string>(), index);
        std::string sign =
            entry.contains("sign") ? entry["sign"].get<std::string>() : "+";
        if (sign == "+") arc.sign = Sign::plus;
        else if (sign == "-") arc.sign = Sign::minus;
        else
            throw ParseError("arcs[" + std::to_string(index) +
                             "].sign must be \"+\" or \"-\"");
        if (entry.contains("weight")) {
            if (!entry["weight"].is_number_integer() ||
                entry["weight"].get<int>() < 1)
                throw ParseError("arcs[" + std::to_string(index) +
                                 "].weight must be a positive integer");
            arc.weight = entry["weight"].get<int>();
        }
        arcs.push_back(arc);
        ++index;
    }

    if (!doc.contains("initial_marking") || !doc["initial_marking"].is_object())
        throw ParseError("missing \"initial_marking\" object");
    std::vector<int> positive =
        read_count_vector(doc["initial_marking"], "positive", places.size());
    std::vector<int> negative =
        read_count_vector(doc["initial_marking"], "negative", places.size());

    int place_count = static_cast<int>(places.size());
    int transition_count = static_cast<int>(transitions.size());
    try {
        SpnStructure structure(place_count, transition_count, std::move(arcs),
                               std::move(places), std::move(transitions));
        return SignedPetriNet(std::move(structure),
                              Marking(std::move(positive), std::move(negative)));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

SignedPetriNet load_model_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open model file " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return load_model(buffer.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string save_model(const SignedPetriNet& net) {
    const SpnStructure& s = net.structure;
    json doc;
    doc["places"] = json::array();
    for (int i = 0; i < s.place_count(); ++i)
        doc["places"].push_back(s.label(VertexId::place(i)));
    doc["transitions"] = json::array();
    for (int j = 0; j < s.transition_count(); ++j)
        doc["transitions"].push_back(s.label(VertexId::transition(j)));
    doc["arcs"] = json::array();
    for (const Arc& a : s.arcs()) {  // already in canonical order
        json entry;
        entry["from"] = s.label(a.source);
        entry["to"] = s.label(a.target);
        entry["sign"] = std::string(1, to_char(a.sign));
        entry["weight"] = a.weight;
        doc["arcs"].push_back(entry);
    }
    doc["initial_marking"]["positive"] = net.initial_marking.positive;
    doc["initial_marking"]["negative"] = net.initial_marking.negative;
    return doc.dump(2) + "\n";
}

void save_model_file(const SignedPetriNet& net, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write model file " + path);
    out << save_model(net);
}

Marking parse_marking(const std::string& text, int place_count) {
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);

    std::size_t pos = 0;
    auto expect = [&](char c) {
        if (pos >= compact.size() || compact[pos] != c)
            throw ParseError("marking syntax error: expected '" +
                             std::string(1, c) + "' at offset " +
                             std::to_string(pos) + " in \"" + text + "\"");
        ++pos;
    };
    auto read_vector = [&]() {
        expect('(');
        std::vector<int> out;
        if (pos < compact.size() && compact[pos] == ')') {
            ++pos;
            return out;
        }
        while (true) {
            std::size_t start = pos;
            while (pos < compact.size() &&
                   std::isdigit(static_cast<unsigned char>(compact[pos])))
                ++pos;
            if (start == pos)
                throw ParseError("marking syntax error: expected a count at offset " +
                                 std::to_string(pos) + " in \"" + text + "\"");
            out.push_back(std::stoi(compact.substr(start, pos - start)));
            if (pos < compact.size() && compact[pos] == ',') {
                ++pos;
                continue;
            }
            expect(')');
            return out;
        }
    };

    expect('(');
    std::vector<int> positive = read_vector();
    expect(',');
    std::vector<int> negative = read_vector();
    expect(')');
    if (pos != compact.size())
        throw ParseError("marking syntax error: trailing characters in \"" + text +
                         "\"");
    if (static_cast<int>(positive.size()) != place_count ||
        static_cast<int>(negative.size()) != place_count)
        throw ParseError("marking \"" + text + "\" does not have " +
                         std::to_string(place_count) + " entries per vector");
    return Marking(std::move(positive), std::move(negative));
}

}  // namespace spn
