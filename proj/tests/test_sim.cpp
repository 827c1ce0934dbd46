#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace hornfit;
using namespace hornfit::test;

namespace {

ABox loop_abox() { return abox("r(d, d)"); }

ABox path_abox(size_t steps) {
    ABox out;
    for (size_t i = 0; i < steps; ++i)
        out.assert_role("r", "p" + std::to_string(i), "p" + std::to_string(i + 1));
    return out;
}

} // namespace

TEST_CASE("reflexivity: the identity is contained and total") {
    Rng rng(11);
    for (int round = 0; round < 50; ++round) {
        Interpretation i = rand_interp(rng, 4, 2, 2);
        for (LogicTag l : {logic::EL, logic::ELBot, logic::ELI, logic::ELIBot}) {
            SimResult s = max_simulation(l, i, i);
            CHECK(s.total);
            for (ElemId d = 0; d < i.size(); ++d) CHECK(s.pair(d, d));
        }
    }
}

TEST_CASE("fork example: forward-only simulation exists, two-way does not") {
    ABox a2 = abox("r(a1, b) r(a2, b) A1(a1) A2(a2)");
    ABox a1 = abox("r(a1, b1) r(a2, b2) A1(a1) A2(a2)");

    SimResult el = max_simulation(logic::ELBot, a2.interp(), a1.interp());
    CHECK(el.total);
    auto pairOf = [&](const char* x, const char* y) {
        return el.pair(*a2.interp().named_element(x), *a1.interp().named_element(y));
    };
    CHECK(pairOf("a1", "a1"));
    CHECK(pairOf("a2", "a2"));
    CHECK(pairOf("b", "b1"));
    CHECK(pairOf("b", "b2"));

    SimResult eli = max_simulation(logic::ELIBot, a2.interp(), a1.interp());
    CHECK(!eli.total);
    CHECK(eli.rows[*a2.interp().named_element("b")].none());
}

TEST_CASE("a loop only simulates into a finite path in the forward logic") {
    ABox loop = loop_abox();
    ABox path = path_abox(3);
    ElemId d = *loop.interp().named_element("d");

    SimResult el = max_simulation(logic::EL, loop.interp(), path.interp());
    CHECK(el.rows[d].none()); // every forward chain in the path is finite

    SimResult eli = max_simulation(logic::ELI, loop.interp(), path.interp());
    CHECK(eli.rows[d].none());

    ABox cycle = abox("r(c0, c1) r(c1, c0)");
    SimResult intoCycle = max_simulation(logic::ELI, loop.interp(), cycle.interp());
    CHECK(intoCycle.rows[d].count() == 2);
}

TEST_CASE("bounded simulation: zero rounds compare labels only") {
    ABox from = abox("A(x) B(x)");
    ABox to1 = abox("A(y) B(y) C(y)");
    ABox to2 = abox("A(y)");
    ElemId x = *from.interp().named_element("x");
    ElemId y1 = *to1.interp().named_element("y");
    ElemId y2 = *to2.interp().named_element("y");
    CHECK(k_simulates(logic::EL, 0, from.interp(), x, to1.interp(), y1));
    CHECK(!k_simulates(logic::EL, 0, from.interp(), x, to2.interp(), y2));
}

TEST_CASE("bounded simulation: loop into a three-step path") {
    ABox loop = loop_abox();
    ABox path = path_abox(3);
    ElemId d = *loop.interp().named_element("d");
    ElemId p0 = *path.interp().named_element("p0");
    for (uint64_t k = 0; k <= 3; ++k)
        CHECK(k_simulates(logic::EL, k, loop.interp(), d, path.interp(), p0));
    CHECK(!k_simulates(logic::EL, 4, loop.interp(), d, path.interp(), p0));
}

TEST_CASE("bounded agrees with the oracle and saturates at the size product") {
    Rng rng(2024);
    std::uniform_int_distribution<int> kd(0, 5);
    for (int round = 0; round < 500; ++round) {
        Interpretation i1 = rand_interp(rng, 3, 2, 1);
        Interpretation i2 = rand_interp(rng, 3, 2, 1);
        LogicTag l = (round % 4 == 0)   ? logic::EL
                     : (round % 4 == 1) ? logic::ELBot
                     : (round % 4 == 2) ? logic::ELI
                                        : logic::ELIBot;
        uint64_t k = static_cast<uint64_t>(kd(rng));
        std::uniform_int_distribution<ElemId> e1(0, static_cast<ElemId>(i1.size() - 1));
        std::uniform_int_distribution<ElemId> e2(0, static_cast<ElemId>(i2.size() - 1));
        ElemId d1 = e1(rng), d2 = e2(rng);
        CHECK(k_simulates(l, k, i1, d1, i2, d2) ==
              oracle_k_simulates(l, k, i1, d1, i2, d2));

        uint64_t sat = static_cast<uint64_t>(i1.size() * i2.size());
        CHECK(k_simulates(l, sat, i1, d1, i2, d2) == simulates(l, i1, d1, i2, d2));
    }
}

TEST_CASE("fixpoint output passes the condition audit") {
    Rng rng(31337);
    for (int round = 0; round < 200; ++round) {
        Interpretation i1 = rand_interp(rng, 4, 2, 2);
        Interpretation i2 = rand_interp(rng, 4, 2, 2);
        for (LogicTag l : {logic::EL, logic::ELI}) {
            SimResult s = max_simulation(l, i1, i2);
            CHECK(audit_simulation(l, s.pairs(), i1, i2));
        }
    }
}

TEST_CASE("greatestness: surviving candidate pairs are already included") {
    Rng rng(4242);
    for (int round = 0; round < 200; ++round) {
        Interpretation i1 = rand_interp(rng, 4, 2, 1);
        Interpretation i2 = rand_interp(rng, 4, 2, 1);
        LogicTag l = (round % 2) ? logic::ELI : logic::EL;
        SimResult s = max_simulation(l, i1, i2);
        std::uniform_int_distribution<ElemId> e1(0, static_cast<ElemId>(i1.size() - 1));
        std::uniform_int_distribution<ElemId> e2(0, static_cast<ElemId>(i2.size() - 1));
        ElemId d1 = e1(rng), d2 = e2(rng);
        auto pairs = s.pairs();
        pairs.emplace_back(d1, d2);
        // If the union still audits as a simulation, the pair was in the fixpoint.
        if (audit_simulation(l, pairs, i1, i2)) CHECK(s.pair(d1, d2));
    }
}

TEST_CASE("every homomorphism is contained in the two-way greatest simulation") {
    Rng rng(808);
    for (int round = 0; round < 200; ++round) {
        Interpretation target = rand_interp(rng, 4, 2, 1, 0.6, 0.4);
        for (ElemId e = 0; e < target.size(); ++e)
            target.set_named(target.element_name(e), e);
        std::vector<Atom> atoms;
        std::uniform_int_distribution<size_t> pick(0, 2);
        std::vector<std::string> vars = {"x", "y", "z"};
        for (size_t i = 0; i < 3; ++i) {
            if (pick(rng) == 0)
                atoms.push_back(Atom{"A0", {var(vars[pick(rng)])}});
            else
                atoms.push_back(Atom{"r0", {var(vars[pick(rng)]), var(vars[pick(rng)])}});
        }
        CQ q(atoms);
        auto h = find_cq_hom(q, target);
        if (!h) continue;
        Interpretation qi = cq_interp(q);
        SimResult s = max_simulation(logic::ELIBot, qi, target);
        for (const auto& [termName, image] : *h) {
            auto te = qi.find_element(termName);
            REQUIRE(te.has_value());
            CHECK(s.pair(*te, image));
        }
    }
}

TEST_CASE("composition of greatest simulations stays inside the composite") {
    Rng rng(606);
    for (int round = 0; round < 150; ++round) {
        Interpretation i1 = rand_interp(rng, 3, 2, 1);
        Interpretation i2 = rand_interp(rng, 3, 2, 1);
        Interpretation i3 = rand_interp(rng, 3, 2, 1);
        LogicTag l = (round % 2) ? logic::ELI : logic::EL;
        SimResult s12 = max_simulation(l, i1, i2);
        SimResult s23 = max_simulation(l, i2, i3);
        SimResult s13 = max_simulation(l, i1, i3);
        for (ElemId a = 0; a < i1.size(); ++a)
            s12.rows[a].for_each([&](size_t b) {
                s23.rows[b].for_each([&](size_t c) { CHECK(s13.pair(a, static_cast<ElemId>(c))); });
            });
    }
}

TEST_CASE("bounded simulation is antitone in the bound") {
    Rng rng(909);
    for (int round = 0; round < 200; ++round) {
        Interpretation i1 = rand_interp(rng, 3, 2, 1);
        Interpretation i2 = rand_interp(rng, 3, 2, 1);
        LogicTag l = (round % 2) ? logic::ELIBot : logic::ELBot;
        std::uniform_int_distribution<ElemId> e1(0, static_cast<ElemId>(i1.size() - 1));
        std::uniform_int_distribution<ElemId> e2(0, static_cast<ElemId>(i2.size() - 1));
        std::uniform_int_distribution<uint64_t> kd(0, 4);
        ElemId d1 = e1(rng), d2 = e2(rng);
        uint64_t k = kd(rng);
        if (k_simulates(l, k + 1, i1, d1, i2, d2))
            CHECK(k_simulates(l, k, i1, d1, i2, d2));
    }
}
