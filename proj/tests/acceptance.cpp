// Acceptance suite: runs every pinned behavior of the toolkit end to end and
// prints one PASS/FAIL line per criterion. Exit status is the failure count.

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "oracle.hpp"
#include "spn/domination.hpp"
#include "spn/examples.hpp"
#include "spn/execution.hpp"
#include "spn/io.hpp"
#include "spn/signing.hpp"
#include "spn/synthesis.hpp"

using namespace spn;

namespace {

struct Check {
    std::vector<std::string> problems;

    void expect(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
    template <typename A, typename B>
    void expect_eq(const A& actual, const B& expected, const std::string& what) {
        if (!(actual == expected)) {
            std::ostringstream msg;
            msg << what;
            problems.push_back(msg.str());
        }
    }
};

const SignedPetriNet& model(const char* id) { return find_example(id)->model; }

VertexId P(int i) { return VertexId::place(i); }
VertexId T(int j) { return VertexId::transition(j); }

// --- criterion 1: firing reproduction --------------------------------------
void firing_reproduction(Check& c) {
    const SignedPetriNet& a = model("fig1a");
    c.expect_eq(fire(a.structure, a.initial_marking, T(0)),
                Marking({0, 1, 1, 0}, {1, 0, 1, 0}), "fig1a: fire t1");
    c.expect_eq(fire(a.structure, a.initial_marking, T(1)),
                Marking({1, 0, 2, 0}, {0, 1, 0, 1}), "fig1a: fire t2");
    const SignedPetriNet& b = model("fig1b");
    c.expect_eq(fire(b.structure, b.initial_marking, T(0)),
                Marking({0, 0, 1, 0}, {0, 0, 0, 1}), "fig1b: fire t1");
    c.expect(!is_enabled(b.structure, b.initial_marking, T(1)),
             "fig1b: t2 must be disabled at the initial marking");
}

// --- criterion 2: decision-table reproduction ------------------------------
void decision_table(Check& c) {
    const SignedPetriNet& net = model("product-decision");
    struct Row {
        Marking votes;
        int first, second;
        Sign sign;
        bool decided;
    };
    const std::vector<Row> rows = {
        {Marking({1, 1, 0}, {0, 0, 0}), 0, 2, Sign::plus, true},
        {Marking({1, 0, 0}, {0, 1, 0}), 0, 3, Sign::minus, false},
        {Marking({0, 1, 0}, {1, 0, 0}), 1, 2, Sign::minus, false},
        {Marking({0, 0, 0}, {1, 1, 0}), 1, 3, Sign::plus, true},
    };
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Row& row = rows[i];
        FireSequenceResult run = fire_sequence(
            net.structure, row.votes, {{T(row.first), T(row.second)}});
        std::string tag = "decision row " + std::to_string(i + 1);
        c.expect(run.ok(), tag + ": both transitions must fire");
        if (!run.ok()) continue;
        const Marking& final_marking = run.trace.back();
        bool has_token =
            final_marking.positive[2] + final_marking.negative[2] > 0;
        Sign r_sign = place_sign_wrt_marking(final_marking, P(2));
        c.expect(has_token, tag + ": r must hold tokens");
        c.expect_eq(r_sign, row.sign, tag + ": sign of r");
        c.expect_eq(has_token && r_sign == Sign::plus, row.decided,
                    tag + ": decision");
    }
    // the bundled initial marking is the one-approval/one-rejection scenario
    c.expect_eq(net.initial_marking, Marking({1, 0, 0}, {0, 1, 0}),
                "bundled voting scenario");
    FireSequenceResult scenario = fire_sequence(
        net.structure, net.initial_marking, {{T(0), T(3)}});
    c.expect(scenario.ok() && place_sign_wrt_marking(scenario.trace.back(),
                                                     P(2)) == Sign::minus,
             "bundled scenario must reproduce the no-decision row");
}

// --- criterion 3: sign tables ----------------------------------------------
void sign_tables(Check& c) {
    const SignedPetriNet& a = model("fig1a");
    for (int j = 0; j < 2; ++j)
        c.expect(transition_sign(a.structure, T(j)) == Sign::minus,
                 "fig1a: transition signs");
    for (int i = 0; i < 4; ++i)
        c.expect(place_sign_wrt_arcs(a.structure, P(i)) == Sign::minus,
                 "fig1a: arc-based place signs");
    const Sign a_marking[] = {Sign::minus, Sign::plus, Sign::plus, Sign::plus};
    for (int i = 0; i < 4; ++i)
        c.expect(place_sign_wrt_marking(a.initial_marking, P(i)) == a_marking[i],
                 "fig1a: marking-based place signs");

    const SignedPetriNet& b = model("fig1b");
    const Sign b_arcs[] = {Sign::plus, Sign::minus, Sign::plus, Sign::minus};
    for (int i = 0; i < 4; ++i)
        c.expect(place_sign_wrt_arcs(b.structure, P(i)) == b_arcs[i],
                 "fig1b: arc-based place signs");
    for (int i = 0; i < 4; ++i)
        c.expect(place_sign_wrt_marking(b.initial_marking, P(i)) == Sign::plus,
                 "fig1b: marking-based place signs");
    for (int j = 0; j < 2; ++j)
        c.expect(transition_sign(b.structure, T(j)) == Sign::minus,
                 "fig1b: transition signs");
}

// --- criterion 4: bees domination -------------------------------------------
void bees_domination(Check& c) {
    const SignedPetriNet& net = model("bees");
    c.expect_eq(net.initial_marking, Marking({3, 0, 0}, {0, 1, 0}),
                "bees initial marking");
    VertexSet d1({P(0), P(2), T(0), T(1), T(2), T(3)});
    VertexSet d2({P(0), P(1), T(0), T(1), T(2), T(3)});
    c.expect(is_dominating(net.structure, d1, net.initial_marking).dominating,
             "D1 must dominate the initial marking");
    c.expect(!is_dominating(net.structure, d2, net.initial_marking).dominating,
             "D2 must not dominate the initial marking");
}

// --- criteria 5/6: theorem property suites ----------------------------------
void theorem1_suite(Check& c) {
    gen::Rng rng(1001);
    for (int i = 0; i < 200; ++i) {
        SpnStructure s = gen::random_theorem1_structure(rng);
        SynthesisReport report = synthesize_theorem1(s);
        c.expect(report.hypothesis_ok,
                 "instance " + std::to_string(i) + ": hypotheses must hold");
        if (!report.hypothesis_ok) continue;
        c.expect(is_dominating(s, report.dominating_sets[0], *report.marking)
                     .dominating,
                 "instance " + std::to_string(i) + ": V\\A must dominate");
    }
}

void theorem2_suite(Check& c) {
    gen::Rng rng(1002);
    for (int i = 0; i < 200; ++i) {
        Sign sign = i < 100 ? Sign::plus : Sign::minus;
        SpnStructure s = gen::random_theorem2_structure(rng, sign);
        SynthesisReport report = synthesize_theorem2(s);
        c.expect(report.hypothesis_ok,
                 "instance " + std::to_string(i) + ": hypotheses must hold");
        if (!report.hypothesis_ok) continue;
        c.expect(report.dominating_sets.size() == 2,
                 "instance " + std::to_string(i) + ": two candidate sets");
        for (const VertexSet& d : report.dominating_sets)
            c.expect(is_dominating(s, d, *report.marking).dominating,
                     "instance " + std::to_string(i) + ": P and T must dominate");
    }
}

// --- criterion 7: minimal/minimum oracle equivalence ------------------------
void oracle_equivalence(Check& c) {
    gen::Rng rng(1003);
    for (int i = 0; i < 50; ++i) {
        SpnStructure s = gen::random_structure(rng);  // at most 10 vertices
        Marking mu = gen::random_marking(rng, s.place_count());
        std::uint32_t universe = (1u << s.vertex_count()) - 1;

        auto expected = oracle::minimal_dominating_masks(s, mu, universe);
        auto actual = minimal_dominating_sets(s, mu);
        bool same = actual.size() == expected.size();
        if (same)
            for (const VertexSet& found : actual) {
                bool present = false;
                for (std::uint32_t m : expected)
                    present = present ||
                              VertexSet(oracle::mask_to_members(s, m)) == found;
                same = same && present;
            }
        c.expect(same, "net " + std::to_string(i) +
                           ": minimal sets must match the brute-force oracle");

        int best = s.vertex_count();
        for (std::uint32_t m : expected)
            best = std::min(best, std::popcount(m));
        c.expect(minimum_dominating_set(s, mu).size() == best,
                 "net " + std::to_string(i) + ": minimum cardinality must agree");
    }
}

// --- criterion 8: non-monotonicity exhibit -----------------------------------
void non_monotonicity(Check& c) {
    gen::Rng rng(1004);
    bool found = false;
    for (int i = 0; i < 500 && !found; ++i) {
        gen::StructureOpts opts;
        opts.max_places = 4;
        opts.max_transitions = 4;
        SpnStructure s = gen::random_structure(rng, opts);
        Marking mu = gen::random_marking(rng, s.place_count());
        std::uint32_t full = (1u << s.vertex_count()) - 1;
        for (std::uint32_t m = 0; m <= full && !found; ++m) {
            if (!oracle::mask_dominates(s, mu, m)) continue;
            for (int b = 0; b < s.vertex_count() && !found; ++b) {
                std::uint32_t grown = m | (1u << b);
                if (grown == m || grown == full) continue;
                if (!oracle::mask_dominates(s, mu, grown)) {
                    // cross-check through the library path
                    found = is_dominating(s, VertexSet(oracle::mask_to_members(
                                                 s, m)),
                                          mu)
                                .dominating &&
                            !is_dominating(s, VertexSet(oracle::mask_to_members(
                                                  s, grown)),
                                           mu)
                                 .dominating;
                }
            }
        }
    }
    c.expect(found,
             "search must find a dominating D with a non-dominating superset");
}

// --- criterion 9: similarity workflow ----------------------------------------
void similarity_workflow(Check& c) {
    const SignedPetriNet& net = model("plagiarism-k5");
    SimilarityReport two = similarity_report(
        net.structure, Marking({0, 0, 0, 0, 0, 0}, {0, 1, 0, 1, 0, 0}));
    c.expect_eq(two.similar, std::vector<VertexId>{P(1), P(3)},
                "matches in p1,p3: similar set");
    c.expect_eq(two.d2, VertexSet({T(1), T(3), T(4)}),
                "matches in p1,p3: D2 = {t2,t4,t5}");

    SimilarityReport all = similarity_report(
        net.structure, Marking({0, 0, 0, 0, 0, 0}, {0, 1, 1, 1, 1, 1}));
    c.expect(all.d1_dominates && all.d2.empty(),
             "all-similar boundary: places alone dominate");
    c.expect_eq(all.similar.size(), std::size_t{5}, "all-similar boundary: size");

    SimilarityReport none = similarity_report(net.structure, Marking(6));
    c.expect(none.similar.empty(), "none-similar boundary: empty result");
    c.expect_eq(none.d2.size(), 5, "none-similar boundary: D2 = T");
}

// --- criterion 10: execution invariants ---------------------------------------
void execution_invariants(Check& c) {
    gen::Rng rng(1005);
    int fired = 0, trees = 0;
    for (int i = 0; i < 10000; ++i) {
        gen::StructureOpts opts;
        opts.max_weight = 3;
        SpnStructure s = gen::random_structure(rng, opts);
        Marking mu = gen::random_marking(rng, s.place_count(), 4);
        VertexId t = T(gen::pick(rng, 0, s.transition_count() - 1));

        if (is_enabled(s, mu, t)) {
            ++fired;
            Marking nu = fire(s, mu, t);
            for (int p = 0; p < s.place_count(); ++p) {
                if (nu.positive[p] < 0 || nu.negative[p] < 0) {
                    c.expect(false, "firing produced a negative count");
                    return;
                }
                int pos_delta = 0, neg_delta = 0;
                if (const Arc* in = s.find_arc(P(p), t))
                    (in->sign == Sign::plus ? pos_delta : neg_delta) -= in->weight;
                if (const Arc* out = s.find_arc(t, P(p)))
                    (out->sign == Sign::plus ? pos_delta : neg_delta) += out->weight;
                if (nu.positive[p] - mu.positive[p] != pos_delta ||
                    nu.negative[p] - mu.negative[p] != neg_delta) {
                    c.expect(false, "marking delta mixed the two token kinds");
                    return;
                }
            }
        }

        if (i % 50 == 0) {
            ++trees;
            SignedPetriNet net(s, mu);
            ReachabilityTree tree = reachability_tree(net, {100, 6, 40});
            for (std::size_t id = 0; id < tree.nodes.size(); ++id) {
                std::vector<int> path;
                for (int at = static_cast<int>(id); tree.nodes[at].parent >= 0;
                     at = tree.nodes[at].parent)
                    path.push_back(tree.nodes[at].via);
                Marking replay = net.initial_marking;
                for (auto it = path.rbegin(); it != path.rend(); ++it)
                    replay = fire(net.structure, replay, T(*it));
                if (!(replay == tree.nodes[id].marking)) {
                    c.expect(false, "tree replay diverged from a stored marking");
                    return;
                }
            }
        }
    }
    c.expect(fired >= 1000, "sample must exercise a healthy number of firings");
    c.expect(trees >= 200, "sample must exercise tree replay");
}

struct Criterion {
    int id;
    std::string name;
    double time_limit_seconds;
    std::function<void(Check&)> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "firing reproduction (fig1a, fig1b)", 10, firing_reproduction},
        {2, "decision-table reproduction (product-decision)", 10, decision_table},
        {3, "sign tables (fig1a, fig1b)", 10, sign_tables},
        {4, "bees domination verdicts", 10, bees_domination},
        {5, "theorem 1 synthesis verifies on 200 instances", 30, theorem1_suite},
        {6, "theorem 2 synthesis verifies on 200 instances", 30, theorem2_suite},
        {7, "minimal/minimum sets match the brute-force oracle", 60,
         oracle_equivalence},
        {8, "non-monotonicity exhibit found by search", 10, non_monotonicity},
        {9, "similarity workflow on plagiarism-k5", 10, similarity_workflow},
        {10, "execution invariants over 10000 random triples", 10,
         execution_invariants},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        Check check;
        auto start = std::chrono::steady_clock::now();
        try {
            criterion.body(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("unexpected exception: ") + e.what());
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (elapsed > criterion.time_limit_seconds)
            check.expect(false, "exceeded the " +
                                    std::to_string(criterion.time_limit_seconds) +
                                    "s budget");
        if (check.problems.empty()) {
            std::printf("[PASS] criterion %2d: %s (%.2fs)\n", criterion.id,
                        criterion.name.c_str(), elapsed);
        } else {
            ++failures;
            std::printf("[FAIL] criterion %2d: %s (%.2fs)\n", criterion.id,
                        criterion.name.c_str(), elapsed);
            for (const std::string& problem : check.problems)
                std::printf("       - %s\n", problem.c_str());
        }
    }
    if (failures)
        std::printf("%d criterion(s) failed\n", failures);
    else
        std::printf("all %zu criteria passed\n", criteria.size());
    return failures;
}
