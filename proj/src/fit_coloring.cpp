#include "hornfit/fit.hpp"

namespace hornfit {

ExampleCollection gen_coloring_instance(const UndirectedGraph& g, size_t protectedCount) {
    if (g.vertices == 0) throw InvalidInput("graph needs at least one vertex");
    if (protectedCount > g.vertices)
        throw InvalidInput("protected set larger than the vertex set");
    for (const auto& [u, v] : g.edges)
        if (u == 0 || v == 0 || u >= v || v > g.vertices)
            throw InvalidInput("edges must satisfy 1 <= u < v <= vertices");

    auto xvar = [](size_t v) { return var("x" + std::to_string(v)); };
    auto vconcept = [](size_t v) { return "V" + std::to_string(v); };

    ExampleCollection ec;
    ec.logic = logic::EL;
    ec.lang = QueryLang::CQ;

    // Positive: a 2-clique ABox and the protected subgraph as a query; the
    // entailing homomorphism picks a 2-coloring of the protected vertices.
    Example pos;
    pos.abox.assert_role("r", "b1", "b2");
    pos.abox.assert_role("r", "b2", "b1");
    pos.abox.assert_concept("T1", "b1");
    pos.abox.assert_concept("T2", "b2");
    pos.abox.assert_role("s", "b1", "b1");
    pos.abox.assert_role("s", "b2", "b2");
    CQ qp;
    if (protectedCount == 0) {
        qp.add(Atom{"s", {ind("b1"), ind("b1")}}); // trivially satisfied anchor
    } else {
        for (size_t v = 1; v <= protectedCount; ++v) {
            qp.add(Atom{"s", {xvar(v), xvar(v)}});
            qp.add(Atom{vconcept(v), {xvar(v)}});
            qp.add(Atom{"s", {ind("b1"), xvar(v)}});
        }
        for (const auto& [u, v] : g.edges)
            if (u <= protectedCount && v <= protectedCount) {
                qp.add(Atom{"r", {xvar(u), xvar(v)}});
                qp.add(Atom{"r", {xvar(v), xvar(u)}});
            }
    }
    pos.query.disjuncts.push_back(qp.canonical());
    ec.positives.push_back(std::move(pos));

    // Negative: a 3-clique ABox and the whole graph as a query; a refuting
    // model exists iff the chosen 2-coloring has no 3-coloring extension.
    Example negEx;
    negEx.abox.assert_concept("T1", "a1");
    negEx.abox.assert_concept("T2", "a2");
    for (size_t i = 1; i <= 3; ++i)
        for (size_t j = 1; j <= 3; ++j) {
            negEx.abox.assert_role("s", "a" + std::to_string(i), "a" + std::to_string(j));
            if (i != j)
                negEx.abox.assert_role("r", "a" + std::to_string(i),
                                       "a" + std::to_string(j));
        }
    CQ qg;
    for (size_t i = 1; i <= g.vertices; ++i) qg.add(Atom{"s", {ind("a1"), xvar(i)}});
    for (size_t v = 1; v <= protectedCount; ++v) qg.add(Atom{vconcept(v), {xvar(v)}});
    for (const auto& [u, v] : g.edges) {
        qg.add(Atom{"r", {xvar(u), xvar(v)}});
        qg.add(Atom{"r", {xvar(v), xvar(u)}});
    }
    negEx.query.disjuncts.push_back(qg.canonical());
    ec.negatives.push_back(std::move(negEx));
    return ec;
}

} // namespace hornfit
