#include "spn/examples.hpp"

namespace spn {

namespace {

constexpr Sign P = Sign::plus;
constexpr Sign N = Sign::minus;

Arc arc(VertexId from, VertexId to, Sign sign) { return {from, to, 1, sign}; }

SignedPetriNet make_fig1a() {
    auto p = [](int i) { return VertexId::place(i); };
    auto t = [](int j) { return VertexId::transition(j); };
    SpnStructure s(4, 2,
                   {
                       arc(p(0), t(0), P),  // p1 -> t1
                       arc(t(0), p(1), P),  // t1 -> p2
                       arc(t(0), p(2), N),  // t1 -> p3
                       arc(p(0), t(1), N),  // p1 -> t2
                       arc(t(1), p(1), N),  // t2 -> p2
                       arc(t(1), p(2), P),  // t2 -> p3
                       arc(t(1), p(3), N),  // t2 -> p4
                   },
                   {"p1", "p2", "p3", "p4"}, {"t1", "t2"});
    return SignedPetriNet(std::move(s), Marking({1, 0, 1, 0}, {1, 0, 0, 0}));
}

SignedPetriNet make_fig1b() {
    auto p = [](int i) { return VertexId::place(i); };
    auto t = [](int j) { return VertexId::transition(j); };
    SpnStructure s(4, 2,
                   {
                       arc(p(0), t(0), P),  // p1 -> t1
                       arc(t(0), p(2), P),  // t1 -> p3
                       arc(t(0), p(3), N),  // t1 -> p4
                       arc(p(1), t(1), N),  // p2 -> t2
                       arc(t(1), p(0), P),  // t2 -> p1
                   },
                   {"p1", "p2", "p3", "p4"}, {"t1", "t2"});
    return SignedPetriNet(std::move(s), Marking({1, 0, 0, 0}, {0, 0, 0, 0}));
}

SignedPetriNet make_product_decision() {
    auto p = [](int i) { return VertexId::place(i); };
    auto t = [](int j) { return VertexId::transition(j); };
    SpnStructure s(3, 4,
                   {
                       arc(p(0), t(0), P),  // p -> t1 (approval vote)
                       arc(t(0), p(2), P),  // t1 -> r
                       arc(p(0), t(1), N),  // p -> t2 (rejection vote)
                       arc(t(1), p(2), N),  // t2 -> r
                       arc(p(1), t(2), P),  // q -> t3
                       arc(t(2), p(2), P),  // t3 -> r
                       arc(p(1), t(3), N),  // q -> t4
                       arc(t(3), p(2), N),  // t4 -> r
                   },
                   {"p", "q", "r"}, {"t1", "t2", "t3", "t4"});
    return SignedPetriNet(std::move(s), Marking({1, 0, 0}, {0, 1, 0}));
}

SignedPetriNet make_producer_consumer() {
    auto p = [](int i) { return VertexId::place(i); };
    auto t = [](int j) { return VertexId::transition(j); };
    SpnStructure s(8, 7,
                   {
                       arc(p(0), t(0), P),  // p1 -> t1: producer 1 starts
                       arc(t(0), p(1), P),  // t1 -> p2: producer 1 busy
                       arc(p(1), t(1), P),  // p2 -> t2: producer 1 finishes
                       arc(t(1), p(0), P),  // t2 -> p1: back to idle
                       arc(t(1), p(4), P),  // t2 -> p5: item into stock 1
                       arc(p(2), t(2), P),  // p3 -> t3: producer 2 starts
                       arc(t(2), p(3), P),  // t3 -> p4: producer 2 busy
                       arc(p(3), t(3), P),  // p4 -> t4: producer 2 finishes
                       arc(t(3), p(2), P),  // t4 -> p3: back to idle
                       arc(t(3), p(5), P),  // t4 -> p6: item into stock 2
                       arc(p(4), t(4), P),  // p5 -> t5: buy from stock 1
                       arc(p(6), t(4), P),  // p7 -> t5: consumer was ready
                       arc(t(4), p(7), P),  // t5 -> p8: consuming
                       arc(p(5), t(5), P),  // p6 -> t6: buy from stock 2
                       arc(p(6), t(5), P),  // p7 -> t6: consumer was ready
                       arc(t(5), p(7), P),  // t6 -> p8: consuming
                       arc(p(7), t(6), P),  // p8 -> t7: consumption ends
                       arc(t(6), p(6), P),  // t7 -> p7: ready again
                   },
                   {"p1", "p2", "p3", "p4", "p5", "p6", "p7", "p8"},
                   {"t1", "t2", "t3", "t4", "t5", "t6", "t7"});
    return SignedPetriNet(std::move(s),
                          Marking({1, 0, 1, 0, 0, 0, 1, 0},
                                  {0, 0, 0, 0, 0, 0, 0, 0}));
}

SignedPetriNet make_bees() {
    auto p = [](int i) { return VertexId::place(i); };
    auto t = [](int j) { return VertexId::transition(j); };
    SpnStructure s(3, 4,
                   {
                       arc(p(1), t(0), N),  // p2 -> t1: food found at p2
                       arc(t(0), p(0), N),  // t1 -> p1: food brought to hive
                       arc(p(0), t(1), P),  // p1 -> t2: bee A flies out
                       arc(t(1), p(1), P),  // t2 -> p2: bee A at location 1
                       arc(p(0), t(2), P),  // p1 -> t3: bee B flies out
                       arc(t(2), p(2), P),  // t3 -> p3: bee B at location 2
                       arc(p(2), t(3), N),  // p3 -> t4: food found at p3
                       arc(t(3), p(0), N),  // t4 -> p1: food brought to hive
                   },
                   {"p1", "p2", "p3"}, {"t1", "t2", "t3", "t4"});
    return SignedPetriNet(std::move(s), Marking({3, 0, 0}, {0, 1, 0}));
}

SignedPetriNet make_plagiarism_k5() {
    auto p = [](int i) { return VertexId::place(i); };
    auto t = [](int j) { return VertexId::transition(j); };
    std::vector<Arc> arcs;
    for (int i = 1; i <= 5; ++i) {
        arcs.push_back(arc(p(0), t(i - 1), N));  // p0 -> ti
        arcs.push_back(arc(t(i - 1), p(i), N));  // ti -> pi
    }
    SpnStructure s(6, 5, std::move(arcs),
                   {"p0", "p1", "p2", "p3", "p4", "p5"},
                   {"t1", "t2", "t3", "t4", "t5"});
    return SignedPetriNet(std::move(s),
                          Marking({0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}));
}

std::vector<ExampleModel> make_corpus() {
    std::vector<ExampleModel> corpus;
    corpus.push_back(
        {"fig1a",
         "mixed-sign execution demo with tokens of both signs in p1",
         "p1 holds one positive and one negative token, so t1 (positive input "
         "arc) and t2 (negative input arc) are both enabled at the start. "
         "Firing t1 gives ((0,1,1,0),(1,0,1,0)); firing t2 gives "
         "((1,0,2,0),(0,1,0,1)). Every transition and every place is "
         "negatively signed with respect to the arcs.",
         make_fig1a()});
    corpus.push_back(
        {"fig1b",
         "execution demo where an all-positive input produces a negative token",
         "Only t1 is enabled at the start; t2 waits for a negative token in "
         "p2 that nothing supplies. Firing t1 consumes the positive token in "
         "p1 and emits a positive token into p3 together with a negative one "
         "into p4, giving ((0,0,1,0),(0,0,0,1)). Arc-based place signs are "
         "(+,-,+,-).",
         make_fig1b()});
    corpus.push_back(
        {"product-decision",
         "two board members vote on a product; the sign of r is the verdict",
         "Members p and q hold a positive token to approve or a negative one "
         "to reject. t1/t3 move approval votes and t2/t4 rejection votes into "
         "the decision place r. After both votes land in r, an even count of "
         "negative tokens (sign +) means the members agreed, an odd count "
         "(sign -) means no decision. The bundled marking has p approving "
         "and q rejecting.",
         make_product_decision()});
    corpus.push_back(
        {"producer-consumer",
         "two producers fill separate stocks; one consumer buys from either",
         "Producer i cycles idle/busy through t1,t2 (resp. t3,t4) and "
         "deposits items into its stock place p5 (resp. p6). The consumer "
         "cycle is p7 (ready) -> t5/t6 (buy from stock 1 or 2) -> p8 "
         "(consuming) -> t7 -> p7. All tokens are positive. Market-domination "
         "queries compare D1 = V\\{p7,t7} (with stock p6 occupied) against "
         "D2 = V\\{p8,t7}.",
         make_producer_consumer()});
    corpus.push_back(
        {"bees",
         "scout bees search two food locations; the finder dominates the hive",
         "Hive p1 holds three bees (positive tokens); location p2 holds food "
         "(one negative token), p3 holds none. t2/t3 move a bee to a "
         "location; t1/t4 complete a search by carrying found food back to "
         "the hive along negative arcs. D1 = {p1,p3,t1,t2,t3,t4} dominates "
         "the initial marking (bee A wins) while D2 = {p1,p2,t1,t2,t3,t4} "
         "does not.",
         make_bees()});
    corpus.push_back(
        {"plagiarism-k5",
         "hub document compared against five articles through negative arcs",
         "Hub place p0 feeds transitions t1..t5, one per article place "
         "p1..p5; every arc is negative. A match with article i puts a "
         "negative token into p0, and firing ti moves it into pi. After "
         "matching, the similar articles are exactly the leaf places whose "
         "negative-token count is odd; similarity_report recovers them "
         "by extending the place set to a dominating set.",
         make_plagiarism_k5()});
    return corpus;
}

}  // namespace

const std::vector<ExampleModel>& bundled_models() {
    static const std::vector<ExampleModel> corpus = make_corpus();
    return corpus;
}

const ExampleModel* find_example(const std::string& id) {
    for (const ExampleModel& e : bundled_models())
        if (e.id == id) return &e;
    return nullptr;
}

}  // namespace spn
