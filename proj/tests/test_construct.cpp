#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hornfit/construct.hpp"
#include "support.hpp"

using namespace hornfit;
using namespace hornfit::test;

TEST_CASE("singleton product is isomorphic to its factor") {
    Rng rng(1);
    Interpretation i = rand_interp(rng, 3, 2, 1);
    PointedInterp p = product({{i, 0}}, i.signature());
    CHECK(p.interp.size() == i.size());
    Concept probe = rand_concept(rng, logic::ELI, 2, 2, 1);
    CHECK(eval_concept(probe, p.interp).count() == eval_concept(probe, i).count());
}

TEST_CASE("the empty product is the maximal interpretation over the signature") {
    Signature sig;
    sig.concepts = {"A"};
    sig.roles = {"r"};
    PointedInterp p = product({}, sig);
    CHECK(p.interp.size() == 1);
    CHECK(p.interp.has_label(p.point, "A"));
    CHECK(p.interp.has_edge("r", p.point, p.point));
}

TEST_CASE("projections out of a product are homomorphisms") {
    Rng rng(77);
    for (int round = 0; round < 100; ++round) {
        Interpretation i1 = rand_interp(rng, 3, 2, 1);
        Interpretation i2 = rand_interp(rng, 3, 2, 1);
        PointedInterp p = product({{i1, 0}, {i2, 0}}, i1.signature());
        for (ElemId e = 0; e < p.interp.size(); ++e) {
            ElemId c1 = static_cast<ElemId>(e / i2.size());
            ElemId c2 = static_cast<ElemId>(e % i2.size());
            for (const auto& lab : p.interp.labels(e)) {
                CHECK(i1.has_label(c1, lab));
                CHECK(i2.has_label(c2, lab));
            }
            for (const auto& role : p.interp.role_names())
                for (ElemId t : p.interp.successors(role, e)) {
                    CHECK(i1.has_edge(role, c1, static_cast<ElemId>(t / i2.size())));
                    CHECK(i2.has_edge(role, c2, static_cast<ElemId>(t % i2.size())));
                }
        }
    }
}

TEST_CASE("unraveling: depth zero keeps only the root") {
    ABox a = abox("A(d) r(d, e)");
    PointedInterp u = unravel(logic::EL, a.interp(), *a.interp().named_element("d"), 0);
    CHECK(u.interp.size() == 1);
    CHECK(u.interp.has_label(u.point, "A"));
}

TEST_CASE("unraveling a loop gives a path") {
    ABox loop = abox("r(d, d)");
    PointedInterp u = unravel(logic::EL, loop.interp(), 0, 3);
    CHECK(u.interp.size() == 4);
    CHECK(u.interp.edge_count("r") == 3);
}

TEST_CASE("the tail map of an unraveling is a homomorphism") {
    Rng rng(55);
    for (int round = 0; round < 100; ++round) {
        Interpretation i = rand_interp(rng, 3, 2, 1, 0.5, 0.4);
        LogicTag l = (round % 2) ? logic::ELI : logic::EL;
        PointedInterp u = unravel(l, i, 0, 3);
        for (const auto& role : u.interp.role_names())
            for (ElemId from = 0; from < u.interp.size(); ++from)
                for (ElemId to : u.interp.successors(role, from)) {
                    bool matched = false;
                    for (ElemId a = 0; a < i.size() && !matched; ++a)
                        for (ElemId b : i.successors(role, a)) {
                            if (u.interp.labels(from) == i.labels(a) &&
                                u.interp.labels(to) == i.labels(b)) {
                                matched = true;
                                break;
                            }
                        }
                    CHECK(matched);
                }
    }
}

TEST_CASE("unraveled membership matches tail membership within the depth") {
    Rng rng(66);
    for (int round = 0; round < 150; ++round) {
        Interpretation i = rand_interp(rng, 3, 2, 1);
        LogicTag l = (round % 2) ? logic::ELI : logic::EL;
        size_t depth = 3;
        PointedInterp u = unravel(l, i, 0, depth);
        Concept c = rand_concept(rng, l, 2, 2, 1);
        if (static_cast<size_t>(c->role_depth()) > depth) continue;
        bool inU = eval_concept(c, u.interp).test(u.point);
        bool inI = eval_concept(c, i).test(0);
        CHECK(inU == inI);
    }
}

TEST_CASE("characteristic concept: zero depth is the label conjunction") {
    ABox a = abox("A(d) B(d)");
    Concept c = char_concept(logic::EL, a.interp(), 0, 0);
    CHECK(serialize_concept(c) == "(and A B)");
}

TEST_CASE("characteristic concept of a labeled loop") {
    ABox loop = abox("r(d, d) A(d)");
    Concept c = char_concept(logic::EL, loop.interp(), 0, 2);
    CHECK(serialize_concept(c) == "(and A (some r (and A (some r A))))");
}

TEST_CASE("characteristic concepts characterize bounded simulation") {
    Rng rng(20240101);
    std::uniform_int_distribution<uint64_t> kd(0, 4);
    for (int round = 0; round < 500; ++round) {
        Interpretation i = rand_interp(rng, 4, 2, 1);
        Interpretation j = rand_interp(rng, 4, 2, 1);
        LogicTag l = (round % 2) ? logic::ELI : logic::EL;
        uint64_t k = kd(rng);
        std::uniform_int_distribution<ElemId> pe(0, static_cast<ElemId>(i.size() - 1));
        ElemId d = pe(rng);
        Concept c = char_concept(l, i, d, k);
        CHECK(static_cast<uint64_t>(c->role_depth()) <= k);
        DynBitset ext = eval_concept(c, j);
        for (ElemId e = 0; e < j.size(); ++e)
            CHECK(ext.test(e) == k_simulates(l, k, i, d, j, e));
    }
}

TEST_CASE("tree concepts: base shapes") {
    CQ single(std::vector<Atom>{Atom{"A", {var("x")}}});
    CHECK(serialize_concept(tree_concept({single, var("x")}, logic::EL)) == "A");

    CQ chain(std::vector<Atom>{Atom{"r", {ind("a"), var("x")}}, Atom{"B", {var("x")}}});
    CHECK(serialize_concept(tree_concept({chain, ind("a")}, logic::EL)) == "(some r B)");

    CQ cycle(std::vector<Atom>{Atom{"r", {var("x"), var("y")}},
                               Atom{"r", {var("y"), var("x")}}});
    CHECK_THROWS_AS(tree_concept({cycle, var("x")}, logic::ELI), InvalidInput);

    CQ inverse(std::vector<Atom>{Atom{"r", {var("x"), ind("a")}}});
    CHECK(serialize_concept(tree_concept({inverse, ind("a")}, logic::ELI)) ==
          "(some (inv r) top)");
    CHECK_THROWS_AS(tree_concept({inverse, ind("a")}, logic::EL), InvalidInput);
}

TEST_CASE("tree concept membership equals homomorphism existence") {
    Rng rng(321);
    for (int round = 0; round < 300; ++round) {
        LogicTag l = (round % 2) ? logic::ELI : logic::EL;
        std::uniform_int_distribution<size_t> nd(1, 5);
        std::uniform_int_distribution<int> flip(0, 1);
        size_t n = nd(rng);
        std::vector<Atom> atoms;
        for (size_t v = 1; v < n; ++v) {
            std::uniform_int_distribution<size_t> pd(0, v - 1);
            size_t parent = pd(rng);
            Term p = var("t" + std::to_string(parent));
            Term c = var("t" + std::to_string(v));
            if (l.inverses && flip(rng))
                atoms.push_back(Atom{"r0", {c, p}});
            else
                atoms.push_back(Atom{"r0", {p, c}});
        }
        for (size_t v = 0; v < n; ++v)
            if (flip(rng))
                atoms.push_back(
                    Atom{"A" + std::to_string(flip(rng)), {var("t" + std::to_string(v))}});
        if (atoms.empty()) atoms.push_back(Atom{"A0", {var("t0")}});
        CQ tree(atoms);
        Concept c = tree_concept({tree, var("t0")}, l);

        Interpretation target = rand_interp(rng, 4, 2, 1, 0.5, 0.4);
        DynBitset ext = eval_concept(c, target);
        for (ElemId e = 0; e < target.size(); ++e) {
            Interpretation marked = target;
            marked.add_label(e, "Root");
            CQ pinned = tree;
            pinned.add(Atom{"Root", {var("t0")}});
            CHECK(ext.test(e) == oracle_has_hom(pinned, marked));
        }
    }
}

TEST_CASE("simulation image satisfaction: vacuous and worked examples") {
    ABox a = abox("r(a, a)");
    Interpretation i;
    i.add_element("z");
    CHECK(sim_image_satisfies(a, {}, logic::ELI, i, C("bot"), "a"));

    Interpretation w;
    ElemId wa = w.add_element("a");
    ElemId wc = w.add_element("c");
    w.add_label(wa, "A");
    w.add_label(wc, "A");
    w.add_label(wc, "B");
    w.add_edge("r", wa, wc);
    w.add_edge("r", wc, wc);

    SimResult s = max_simulation(logic::ELI, a.interp(), w);
    CHECK(sim_image_satisfies(a, s.pairs(), logic::ELI, w, C("B"), "a"));

    ABox labeled = abox("A(a)");
    SimResult s2 = max_simulation(logic::EL, labeled.interp(), w);
    CHECK(sim_image_satisfies(labeled, s2.pairs(), logic::EL, w, C("(some r A)"), "a"));

    ABox twoLabels = abox("A(a) B(b)");
    std::vector<std::pair<ElemId, ElemId>> bogus{
        {*twoLabels.interp().named_element("b"), wa}};
    CHECK_THROWS_AS(sim_image_satisfies(twoLabels, bogus, logic::EL, w, C("top"), "a"),
                    InvalidInput);
}

TEST_CASE("bounded materialization of the induced model") {
    ABox a = abox("A(a) r(a, b)");
    Signature sig = a.signature();
    Interpretation target;
    target.add_element("z");
    Interpretation m = materialize_iasl(a, {}, logic::EL, target, 0, sig);
    CHECK(m.size() == 2);
    for (const auto& c : sig.concepts) {
        CHECK(m.has_label(*m.named_element("a"), c));
        CHECK(m.has_label(*m.named_element("b"), c));
    }
    CHECK(m.has_edge("r", *m.named_element("a"), *m.named_element("b")));
    CHECK(!m.has_edge("r", *m.named_element("b"), *m.named_element("a")));
}

TEST_CASE("bounded materialization agrees with the image check") {
    Rng rng(888);
    for (int round = 0; round < 100; ++round) {
        LogicTag l = (round % 2) ? logic::ELI : logic::EL;
        ABox a = rand_abox(rng, 2, 2, 1, 0.5, 0.4);
        Interpretation target = rand_interp(rng, 3, 2, 1, 0.5, 0.4);
        SimResult s = max_simulation(l, a.interp(), target);
        Concept c = rand_concept(rng, l, 2, 2, 1);
        size_t depth = static_cast<size_t>(c->role_depth());
        Signature sig = a.signature();
        sig.merge(target.signature());
        Signature cs;
        collect_signature(c, cs);
        sig.merge(cs);
        Interpretation m = materialize_iasl(a, s.pairs(), l, target, depth + 1, sig);
        DynBitset ext = eval_concept(c, m);
        for (const auto& name : a.individuals()) {
            bool direct = sim_image_satisfies(a, s.pairs(), l, target, c, name);
            CHECK(ext.test(*m.named_element(name)) == direct);
        }
    }
}
