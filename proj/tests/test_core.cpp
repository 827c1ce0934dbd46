#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hornfit/construct.hpp"
#include "support.hpp"

using namespace hornfit;
using namespace hornfit::test;

TEST_CASE("role double inversion is the identity") {
    Role r{"works", false};
    CHECK(r.inverse().inverse() == r);
    CHECK(r.inverse() != r);
}

TEST_CASE("conjunction canonicalization: flatten, sort, dedup") {
    Concept a = concept_name("A"), b = concept_name("B");
    Concept left = concept_and(concept_and(b, a), a);
    Concept right = concept_and(a, b);
    CHECK(concept_eq(left, right));
    CHECK(left->conjuncts().size() == 2);
    CHECK(concept_eq(concept_and(a, concept_top()), a));
    CHECK(concept_eq(concept_and(std::vector<Concept>{}), concept_top()));
    CHECK(serialize_concept(left) == "(and A B)");
}

TEST_CASE("role depth") {
    Concept c = C("(and A (some r (some (inv s) B)))");
    CHECK(c->role_depth() == 2);
    CHECK(C("top")->role_depth() == 0);
}

TEST_CASE("logic membership checks") {
    CHECK(concept_in_logic(C("(some r A)"), logic::EL));
    CHECK(!concept_in_logic(C("(some (inv r) A)"), logic::EL));
    CHECK(concept_in_logic(C("(some (inv r) A)"), logic::ELI));
    CHECK(!concept_in_logic(C("bot"), logic::ELI));
    CHECK(concept_in_logic(C("bot"), logic::ELIBot));
    Interpretation loop;
    loop.add_element("d");
    loop.add_edge("r", 0, 0);
    Concept sq = concept_sim(logic::ELI, loop, 0);
    CHECK(!concept_in_logic(sq, logic::ELIBot, false));
    CHECK(concept_in_logic(sq, logic::ELIBot, true));
    CHECK_THROWS_AS(concept_sim(logic::ELIBot, loop, 0), InvalidInput);
}

TEST_CASE("evaluation: top, labels, inverse roles") {
    ABox a = abox("r(a1, b) r(a2, b) A1(a1) A2(a2)");
    const Interpretation& i = a.interp();
    CHECK(eval_concept(C("top"), i).count() == i.size());
    CHECK(eval_concept(C("bot"), i).none());

    DynBitset ext = eval_concept(C("(and (some (inv r) A1) (some (inv r) A2))"), i);
    CHECK(ext.count() == 1);
    CHECK(ext.test(*i.named_element("b")));
}

TEST_CASE("evaluation: simulation quantifier over loop payload") {
    Interpretation loop;
    loop.add_element("d");
    loop.add_edge("r", 0, 0);
    Concept sq = concept_sim(logic::ELI, loop, 0);

    // finite path of three steps: nothing simulates the loop
    ABox path = abox("r(p0, p1) r(p1, p2) r(p2, p3)");
    CHECK(eval_concept(sq, path.interp()).none());

    // a cycle simulates it everywhere
    ABox cycle = abox("r(c0, c1) r(c1, c2) r(c2, c0)");
    CHECK(eval_concept(sq, cycle.interp()).count() == 3);
}

TEST_CASE("is_model basics") {
    ABox a = abox("A(d)");
    CHECK(is_model(a.interp(), Ontology{}));
    Ontology o;
    o.add(concept_name("A"), concept_name("B"));
    CHECK(!is_model(a.interp(), o));
    ABox b = abox("A(d) B(d)");
    CHECK(is_model(b.interp(), o));
}

TEST_CASE("the assertion-complement model satisfies the complement ontology") {
    // The expansion of a positive ABox by complement markers is a model of
    // the ontology built from the negatives.
    ExampleCollection ec = inst(R"(
logic elb
query-lang consistency
positive { abox { A(a) r(a, b) B(b) } }
negative { abox { B(x) r(x, x) } }
)");
    Ontology o = synth_alternative_consistency(ec, logic::ELBot);
    Interpretation j;
    ElemId a = j.add_element("p0.a"), b = j.add_element("p0.b");
    j.add_label(a, "A");
    j.add_label(b, "B");
    j.add_edge("r", a, b);
    j.add_label(a, "_V.p0.b");
    j.add_label(b, "_V.p0.a");
    CHECK(is_model(j, o));
}

TEST_CASE("homomorphism search") {
    ABox a = abox("A(a)");
    CQ q(std::vector<Atom>{Atom{"A", {ind("a")}}});
    auto h = find_cq_hom(q, a.interp());
    REQUIRE(h.has_value());
    CHECK(h->at("a") == *a.interp().named_element("a"));

    ABox edge = abox("r(a, c)");
    CQ q2(std::vector<Atom>{Atom{"r", {ind("a"), var("x")}}, Atom{"A", {var("x")}}});
    CHECK(!find_cq_hom(q2, edge.interp()).has_value());

    CQ q3(std::vector<Atom>{Atom{"A", {ind("missing")}}});
    CHECK_THROWS_AS(find_cq_hom(q3, a.interp()), InvalidInput);
}

TEST_CASE("coloring queries embed iff colorable") {
    // triangle query into the 3-clique ABox: a 3-coloring exists
    UndirectedGraph triangle{3, {{1, 2}, {1, 3}, {2, 3}}};
    ExampleCollection ecT = normalize_individuals(gen_coloring_instance(triangle, 0));
    const Example& negT = ecT.negatives[0];
    CHECK(satisfies_cq(negT.abox.interp(), negT.query.disjuncts[0]));

    // K4 needs four colors: no homomorphism
    UndirectedGraph k4{4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
    ExampleCollection ecK = normalize_individuals(gen_coloring_instance(k4, 0));
    const Example& negK = ecK.negatives[0];
    CHECK(!satisfies_cq(negK.abox.interp(), negK.query.disjuncts[0]));
}

TEST_CASE("hom search agrees with exhaustive assignment enumeration") {
    Rng rng(20240809);
    std::uniform_int_distribution<size_t> nAtoms(1, 5);
    std::uniform_int_distribution<size_t> pick(0, 3);
    for (int round = 0; round < 300; ++round) {
        Interpretation target = rand_interp(rng, 4, 2, 2);
        for (ElemId e = 0; e < target.size(); ++e)
            target.set_named(target.element_name(e), e);
        std::vector<Atom> atoms;
        std::vector<std::string> terms = {"x", "y", "z", "w"};
        size_t m = nAtoms(rng);
        for (size_t i = 0; i < m; ++i) {
            if (pick(rng) < 2) {
                atoms.push_back(Atom{"A" + std::to_string(pick(rng) % 2),
                                     {var(terms[pick(rng)])}});
            } else {
                atoms.push_back(Atom{"r" + std::to_string(pick(rng) % 2),
                                     {var(terms[pick(rng)]), var(terms[pick(rng)])}});
            }
        }
        CQ q(atoms);
        CHECK(find_cq_hom(q, target).has_value() == oracle_has_hom(q, target));
    }
}

TEST_CASE("satisfies_ucq takes any disjunct") {
    ABox a = abox("A(a)");
    UCQ q;
    q.disjuncts.push_back(CQ(std::vector<Atom>{Atom{"B", {ind("a")}}}));
    CHECK(!satisfies_ucq(a.interp(), q));
    q.disjuncts.push_back(CQ(std::vector<Atom>{Atom{"A", {ind("a")}}}));
    CHECK(satisfies_ucq(a.interp(), q));
}

TEST_CASE("evaluation is monotone for bottom-free concepts") {
    Rng rng(7);
    for (int round = 0; round < 200; ++round) {
        Interpretation small = rand_interp(rng, 5, 2, 2, 0.4, 0.2);
        Interpretation big = small;
        std::uniform_int_distribution<ElemId> el(0, static_cast<ElemId>(big.size() - 1));
        big.add_label(el(rng), "A0");
        big.add_edge("r0", el(rng), el(rng));
        Concept c = rand_concept(rng, logic::ELI, 3, 2, 2);
        DynBitset before = eval_concept(c, small);
        DynBitset after = eval_concept(c, big);
        CHECK(before.subset_of(after));
    }
}

TEST_CASE("concepts of bounded depth transfer along bounded simulations") {
    Rng rng(99);
    for (int round = 0; round < 300; ++round) {
        Interpretation i1 = rand_interp(rng, 4, 2, 2);
        Interpretation i2 = rand_interp(rng, 4, 2, 2);
        LogicTag l = (round % 2) ? logic::ELI : logic::EL;
        Concept c = rand_concept(rng, l, 3, 2, 2);
        uint64_t k = static_cast<uint64_t>(c->role_depth());
        DynBitset e1 = eval_concept(c, i1);
        DynBitset e2 = eval_concept(c, i2);
        for (ElemId d1 = 0; d1 < i1.size(); ++d1) {
            if (!e1.test(d1)) continue;
            for (ElemId d2 = 0; d2 < i2.size(); ++d2)
                if (k_simulates(l, k, i1, d1, i2, d2)) CHECK(e2.test(d2));
        }
    }
}

TEST_CASE("quantifier-bearing concepts are preserved under simulations") {
    Rng rng(1234);
    for (int round = 0; round < 200; ++round) {
        LogicTag l = (round % 2) ? logic::ELI : logic::EL;
        Interpretation payload = rand_interp(rng, 3, 2, 1);
        Interpretation i1 = rand_interp(rng, 4, 2, 1);
        Interpretation i2 = rand_interp(rng, 4, 2, 1);
        std::uniform_int_distribution<ElemId> pe(0, static_cast<ElemId>(payload.size() - 1));
        Concept c = concept_and(concept_sim(l, payload, pe(rng)),
                                rand_concept(rng, l, 2, 2, 1));
        DynBitset e1 = eval_concept(c, i1);
        DynBitset e2 = eval_concept(c, i2);
        SimResult s = max_simulation(l, i1, i2);
        for (ElemId d1 = 0; d1 < i1.size(); ++d1) {
            if (!e1.test(d1)) continue;
            s.rows[d1].for_each([&](size_t d2) { CHECK(e2.test(d2)); });
        }
    }
}

TEST_CASE("product membership is componentwise membership") {
    Rng rng(5150);
    for (int round = 0; round < 150; ++round) {
        LogicTag l = (round % 2) ? logic::ELI : logic::EL;
        size_t parts = 2 + (round % 2);
        std::vector<PointedInterp> factors;
        for (size_t i = 0; i < parts; ++i) {
            Interpretation interp = rand_interp(rng, 3, 2, 1);
            std::uniform_int_distribution<ElemId> pe(0,
                                                     static_cast<ElemId>(interp.size() - 1));
            ElemId point = pe(rng);
            factors.push_back({std::move(interp), point});
        }
        Signature sig;
        sig.concepts = {"A0", "A1"};
        sig.roles = {"r0"};
        PointedInterp prod = product(factors, sig);
        Interpretation payload = rand_interp(rng, 2, 2, 1);
        std::uniform_int_distribution<ElemId> pp(0, static_cast<ElemId>(payload.size() - 1));
        Concept c = concept_and(rand_concept(rng, l, 2, 2, 1),
                                concept_sim(l, payload, pp(rng)));
        bool inProduct = eval_concept(c, prod.interp).test(prod.point);
        bool everywhere = true;
        for (const auto& f : factors)
            if (!eval_concept(c, f.interp).test(f.point)) everywhere = false;
        CHECK(inProduct == everywhere);
    }
}
