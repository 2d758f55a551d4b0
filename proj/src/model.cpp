#include "spn/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace spn {

Marking::Marking(std::vector<int> pos, std::vector<int> neg)
    : positive(std::move(pos)), negative(std::move(neg)) {
    if (positive.size() != negative.size())
        throw std::invalid_argument("marking vectors must have equal length");
    for (int c : positive)
        if (c < 0) throw std::invalid_argument("negative positive-token count");
    for (int c : negative)
        if (c < 0) throw std::invalid_argument("negative negative-token count");
}

std::string to_string(const Marking& marking) {
    std::ostringstream out;
    auto vec = [&out](const std::vector<int>& v) {
        out << '(';
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out << ',';
            out << v[i];
        }
        out << ')';
    };
    out << '(';
    vec(marking.positive);
    out << ',';
    vec(marking.negative);
    out << ')';
    return out.str();
}

namespace {

std::string default_label(VertexId v) {
    return (v.is_place() ? "p" : "t") + std::to_string(v.index);
}

}  // namespace

SpnStructure::SpnStructure(int place_count, int transition_count,
                           std::vector<Arc> arcs,
                           std::vector<std::string> place_labels,
                           std::vector<std::string> transition_labels)
    : place_count_(place_count),
      transition_count_(transition_count),
      arcs_(std::move(arcs)) {
    if (place_count_ < 1)
        throw std::invalid_argument("a net needs at least one place");
    if (transition_count_ < 1)
        throw std::invalid_argument("a net needs at least one transition");

    for (const Arc& a : arcs_) {
        if (a.source.kind == a.target.kind)
            throw std::invalid_argument(
                "arc " + default_label(a.source) + "->" + default_label(a.target) +
                " connects vertices of the same kind");
        if (!in_range(a.source) || !in_range(a.target))
            throw std::invalid_argument(
                "arc " + default_label(a.source) + "->" + default_label(a.target) +
                " has an out-of-range endpoint");
        if (a.weight < 1)
            throw std::invalid_argument(
                "arc " + default_label(a.source) + "->" + default_label(a.target) +
                " has weight < 1");
    }

    std::sort(arcs_.begin(), arcs_.end(),
              [](const Arc& a, const Arc& b) {
                  return std::tie(a.source, a.target) < std::tie(b.source, b.target);
              });
    for (std::size_t i = 1; i < arcs_.size(); ++i)
        if (arcs_[i - 1].source == arcs_[i].source &&
            arcs_[i - 1].target == arcs_[i].target)
            throw std::invalid_argument(
                "duplicate arc " + default_label(arcs_[i].source) + "->" +
                default_label(arcs_[i].target));

    if (!place_labels.empty() &&
        static_cast<int>(place_labels.size()) != place_count_)
        throw std::invalid_argument("place label count mismatch");
    if (!transition_labels.empty() &&
        static_cast<int>(transition_labels.size()) != transition_count_)
        throw std::invalid_argument("transition label count mismatch");

    labels_.resize(vertex_count());
    for (int i = 0; i < place_count_; ++i)
        labels_[i] = place_labels.empty() ? default_label(VertexId::place(i))
                                          : place_labels[i];
    for (int j = 0; j < transition_count_; ++j)
        labels_[place_count_ + j] =
            transition_labels.empty() ? default_label(VertexId::transition(j))
                                      : transition_labels[j];

    std::set<std::string> seen;
    for (const std::string& l : labels_) {
        if (l.empty()) throw std::invalid_argument("empty vertex label");
        if (!seen.insert(l).second)
            throw std::invalid_argument("duplicate vertex label \"" + l + "\"");
    }

    presets_.resize(vertex_count());
    postsets_.resize(vertex_count());
    for (const Arc& a : arcs_) {
        postsets_[flat(a.source)].push_back(a.target);
        presets_[flat(a.target)].push_back(a.source);
    }
    for (auto& v : presets_) std::sort(v.begin(), v.end());
    for (auto& v : postsets_) std::sort(v.begin(), v.end());
}

bool SpnStructure::in_range(VertexId v) const {
    int limit = v.is_place() ? place_count_ : transition_count_;
    return v.index >= 0 && v.index < limit;
}

void SpnStructure::require_in_range(VertexId v) const {
    if (!in_range(v))
        throw std::out_of_range("vertex " + default_label(v) + " is out of range");
}

const Arc* SpnStructure::find_arc(VertexId source, VertexId target) const {
    auto it = std::lower_bound(
        arcs_.begin(), arcs_.end(), std::make_pair(source, target),
        [](const Arc& a, const std::pair<VertexId, VertexId>& key) {
            return std::tie(a.source, a.target) < std::tie(key.first, key.second);
        });
    if (it != arcs_.end() && it->source == source && it->target == target)
        return &*it;
    return nullptr;
}

Sign SpnStructure::arc_sign(VertexId source, VertexId target) const {
    const Arc* a = find_arc(source, target);
    if (!a)
        throw std::out_of_range("no arc " + default_label(source) + "->" +
                                default_label(target));
    return a->sign;
}

int SpnStructure::input_weight(int place_index, int transition_index) const {
    const Arc* a = find_arc(VertexId::place(place_index),
                            VertexId::transition(transition_index));
    return a ? a->weight : 0;
}

int SpnStructure::output_weight(int place_index, int transition_index) const {
    const Arc* a = find_arc(VertexId::transition(transition_index),
                            VertexId::place(place_index));
    return a ? a->weight : 0;
}

const std::vector<VertexId>& SpnStructure::preset(VertexId v) const {
    require_in_range(v);
    return presets_[flat(v)];
}

const std::vector<VertexId>& SpnStructure::postset(VertexId v) const {
    require_in_range(v);
    return postsets_[flat(v)];
}

std::vector<VertexId> SpnStructure::vertices() const {
    std::vector<VertexId> out;
    out.reserve(vertex_count());
    for (int i = 0; i < place_count_; ++i) out.push_back(VertexId::place(i));
    for (int j = 0; j < transition_count_; ++j)
        out.push_back(VertexId::transition(j));
    return out;
}

const std::string& SpnStructure::label(VertexId v) const {
    require_in_range(v);
    return labels_[flat(v)];
}

std::optional<VertexId> SpnStructure::find_vertex(const std::string& label) const {
    for (int id = 0; id < vertex_count(); ++id)
        if (labels_[id] == label) return unflat(id);
    return std::nullopt;
}

bool SpnStructure::is_ordinary() const {
    return std::all_of(arcs_.begin(), arcs_.end(),
                       [](const Arc& a) { return a.weight == 1; });
}

bool operator==(const SpnStructure& a, const SpnStructure& b) {
    return a.place_count_ == b.place_count_ &&
           a.transition_count_ == b.transition_count_ && a.arcs_ == b.arcs_ &&
           a.labels_ == b.labels_;
}

SignedPetriNet::SignedPetriNet(SpnStructure s, Marking m0)
    : structure(std::move(s)), initial_marking(std::move(m0)) {
    require_marking_compatible(structure, initial_marking);
}

ValidationReport validate(const SpnStructure& structure) {
    ValidationReport report;
    for (VertexId v : structure.vertices()) {
        bool no_in = structure.preset(v).empty();
        bool no_out = structure.postset(v).empty();
        if (no_in && no_out)
            report.violations.push_back(
                {"isolated-vertex", v,
                 (v.is_place() ? "place " : "transition ") + structure.label(v) +
                     " has no incident arcs"});
        report.has_sources = report.has_sources || no_in;
        report.has_sinks = report.has_sinks || no_out;
    }
    report.ok = report.violations.empty();
    report.is_ordinary = structure.is_ordinary();
    report.is_negative_spn =
        std::all_of(structure.arcs().begin(), structure.arcs().end(),
                    [](const Arc& a) { return a.sign == Sign::minus; });
    return report;
}

Adjacency adjacency(const SpnStructure& structure, VertexId v) {
    structure.require_in_range(v);
    return {structure.preset(v), structure.postset(v)};
}

std::vector<VertexId> source_vertices(const SpnStructure& structure) {
    std::vector<VertexId> out;
    for (VertexId v : structure.vertices())
        if (structure.preset(v).empty()) out.push_back(v);
    return out;
}

void require_marking_compatible(const SpnStructure& structure,
                                const Marking& marking) {
    if (marking.place_count() != structure.place_count() ||
        marking.positive.size() != marking.negative.size())
        throw std::invalid_argument("marking length does not match place count");
}

}  // namespace spn
