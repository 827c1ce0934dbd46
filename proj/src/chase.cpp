#include "hornfit/chase.hpp"

#include <map>

namespace hornfit {

bool chaseable(const Ontology& o) {
    for (const auto& ci : o.cis()) {
        if (ci.lhs->uses_inverse() || ci.rhs->uses_inverse()) return false;
        if (ci.rhs->uses_sim()) return false;
    }
    return true;
}

namespace {

struct Chaser {
    Interpretation u;
    Evaluator ev;
    bool inconsistent = false;
    std::map<Concept, ElemId, bool (*)(const Concept&, const Concept&)> fillers;
    size_t fillerCount = 0;

    explicit Chaser(const Interpretation& start)
        : u(start), ev(u),
          fillers([](const Concept& a, const Concept& b) { return concept_compare(a, b) < 0; }) {}

    ElemId representative(const Concept& filler) {
        auto it = fillers.find(filler);
        if (it != fillers.end()) return it->second;
        ElemId e = u.add_element("_x" + std::to_string(fillerCount++));
        fillers.emplace(filler, e);
        apply(filler, e);
        return e;
    }

    void apply(const Concept& c, ElemId d) {
        if (inconsistent) return;
        switch (c->kind()) {
        case ConceptNode::Kind::Top: break;
        case ConceptNode::Kind::Bot: inconsistent = true; break;
        case ConceptNode::Kind::Name: u.add_label(d, c->name()); break;
        case ConceptNode::Kind::And:
            for (const auto& k : c->conjuncts()) apply(k, d);
            break;
        case ConceptNode::Kind::Exists: {
            if (ev.holds_at(c, d)) break;
            ElemId e = representative(c->child());
            if (inconsistent) break;
            u.add_edge(c->role().name, d, e);
            break;
        }
        case ConceptNode::Kind::Sim:
            throw InvalidInput("simulation quantifier on a right-hand side");
        }
    }

    void run(const Ontology& o) {
        bool changed = true;
        while (changed && !inconsistent) {
            changed = false;
            size_t frontier = u.size();
            for (ElemId d = 0; d < frontier && !inconsistent; ++d) {
                for (const auto& ci : o.cis()) {
                    if (!ev.holds_at(ci.lhs, d)) continue;
                    if (ev.holds_at(ci.rhs, d)) continue;
                    apply(ci.rhs, d);
                    changed = true;
                    if (inconsistent) break;
                }
            }
        }
    }
};

} // namespace

UniversalModel chase_universal_model(const ABox& abox, const Ontology& o) {
    if (abox.empty()) throw InvalidInput("chase of an empty ABox");
    if (!chaseable(o))
        throw InvalidInput("ontology outside the saturation fragment "
                           "(inverse roles or quantifier on a right-hand side)");
    Chaser chaser(abox.interp());
    chaser.run(o);
    return {std::move(chaser.u), chaser.inconsistent};
}

} // namespace hornfit
