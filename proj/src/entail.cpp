#include "hornfit/entail.hpp"

#include <map>

namespace hornfit {

bool entails_el_query(const ABox& abox, const Ontology& o, const ELQuery& q) {
    UniversalModel u = chase_universal_model(abox, o);
    if (u.inconsistent) return true;
    Evaluator ev(u.interp);
    if (q.rooted) {
        auto e = u.interp.named_element(q.individual);
        if (!e) throw InvalidInput("query individual '" + q.individual + "' not in the ABox");
        return ev.holds_at(q.concept_, *e);
    }
    return ev.eval(q.concept_).any();
}

namespace {

bool reduction_queries_hold(Evaluator& ev, const std::vector<ReductionQuery>& reds) {
    for (const auto& rq : reds) {
        if (rq.rooted) {
            auto e = ev.interp().named_element(rq.individual);
            if (!e || !ev.holds_at(rq.concept_, *e)) return false;
        } else {
            if (!ev.eval(rq.concept_).any()) return false;
        }
    }
    return true;
}

} // namespace

bool ucq_entailed_by_universal(const ABox& abox, const Ontology& o, const UCQ& q,
                               LogicTag l) {
    if (l.inverses)
        throw InvalidInput("saturation-based entailment covers el and elb only");
    for (const auto& d : q.disjuncts)
        for (const auto& name : d.individuals())
            if (!abox.has_individual(name))
                throw InvalidInput("query individual '" + name + "' not in the ABox");

    UniversalModel u = chase_universal_model(abox, o);
    if (u.inconsistent) return true;
    Evaluator ev(u.interp);
    for (const auto& p : q.disjuncts) {
        for (const auto& v : enum_forest_variations(abox, p, l)) {
            auto reds = reduction_queries(v, abox);
            if (reduction_queries_hold(ev, reds)) return true;
        }
    }
    return false;
}

namespace {

struct TreeChaser {
    Interpretation u;
    Evaluator ev;
    std::vector<size_t> depth;
    size_t depthLimit;
    size_t nodeCap;
    bool inconsistent = false;
    bool truncated = false;
    std::set<std::pair<ElemId, const ConceptNode*>> expanded;
    size_t freshCount = 0;

    TreeChaser(const Interpretation& start, size_t dl, size_t cap)
        : u(start), ev(u), depth(start.size(), 0), depthLimit(dl), nodeCap(cap) {}

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
            if (!expanded.insert({d, c.get()}).second) {
                truncated = true; // a previous expansion was cut off
                break;
            }
            if (depth[d] + 1 > depthLimit || u.size() >= nodeCap) {
                truncated = true;
                break;
            }
            ElemId e = u.add_element("_t" + std::to_string(freshCount++));
            depth.push_back(depth[d] + 1);
            apply(c->child(), e);
            if (c->role().inverted)
                u.add_edge(c->role().name, e, d);
            else
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
                    size_t before = u.version();
                    apply(ci.rhs, d);
                    if (u.version() != before) changed = true;
                    if (inconsistent) break;
                }
            }
        }
    }
};

} // namespace

TreeChase eli_tree_chase(const ABox& abox, const Ontology& o, size_t depthLimit,
                         size_t nodeCap) {
    for (const auto& ci : o.cis())
        if (ci.rhs->uses_sim())
            throw InvalidInput("simulation quantifier on a right-hand side");
    TreeChaser chaser(abox.interp(), depthLimit, nodeCap);
    chaser.run(o);
    TreeChase out;
    out.inconsistent = chaser.inconsistent;
    out.complete = !chaser.inconsistent && !chaser.truncated;
    out.interp = std::move(chaser.u);
    return out;
}

namespace {

Signature entailment_signature(const ABox& abox, const Ontology& o, const UCQ* q,
                               const ELQuery* eq) {
    Signature sig = abox.signature();
    sig.merge(o.signature());
    if (q)
        for (const auto& d : q->disjuncts)
            for (const auto& a : d.atoms()) {
                if (a.is_role())
                    sig.roles.insert(a.pred);
                else
                    sig.concepts.insert(a.pred);
            }
    if (eq) collect_signature(eq->concept_, sig);
    return sig;
}

bool el_query_holds(const Interpretation& interp, const ELQuery& q) {
    Evaluator ev(interp);
    if (q.rooted) {
        auto e = interp.named_element(q.individual);
        if (!e) throw InvalidInput("query individual '" + q.individual + "' unknown");
        return ev.holds_at(q.concept_, *e);
    }
    return ev.eval(q.concept_).any();
}

// Single-concept-atom disjuncts force labels off in every countermodel.
std::set<std::pair<std::string, std::string>> forbidden_from_ucq(const UCQ& q) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& d : q.disjuncts)
        if (d.is_atomic()) out.insert({d.atoms()[0].pred, d.atoms()[0].args[0].name});
    return out;
}

Entailment bounded_core(const ABox& abox, const Ontology& o, const BoundedParams& params,
                        const std::function<bool(const Interpretation&)>& querySatisfied,
                        const std::set<std::pair<std::string, std::string>>& forbidden,
                        const Signature& sig) {
    TreeChase chase = eli_tree_chase(abox, o, params.chaseDepth, params.chaseNodeCap);
    if (chase.inconsistent) return Entailment::Entailed;
    // Every chase element maps homomorphically into every model, so a match
    // in the (possibly partial) chase is conclusive.
    if (querySatisfied(chase.interp)) return Entailment::Entailed;
    if (chase.complete) return Entailment::NotEntailed; // the chase is a countermodel

    SearchSpec spec;
    spec.sig = sig;
    spec.base = &abox;
    spec.maxSize = params.modelBound;
    spec.forbiddenLabels = forbidden;
    spec.bitBudget = params.bitBudget;
    SearchOutcome outcome = search_extensions(spec, [&](const Interpretation& cand) {
        return is_model(cand, o) && !querySatisfied(cand);
    });
    if (outcome == SearchOutcome::Found) return Entailment::NotEntailed;
    return Entailment::Unknown;
}

} // namespace

Entailment eli_entailment_bounded(const ABox& abox, const Ontology& o, const UCQ& q,
                                  const BoundedParams& params) {
    return bounded_core(
        abox, o, params,
        [&](const Interpretation& interp) { return satisfies_ucq(interp, q); },
        forbidden_from_ucq(q), entailment_signature(abox, o, &q, nullptr));
}

Entailment eli_entailment_bounded(const ABox& abox, const Ontology& o, const ELQuery& q,
                                  const BoundedParams& params) {
    std::set<std::pair<std::string, std::string>> forbidden;
    if (q.rooted && q.concept_->kind() == ConceptNode::Kind::Name)
        forbidden.insert({q.concept_->name(), q.individual});
    return bounded_core(
        abox, o, params,
        [&](const Interpretation& interp) { return el_query_holds(interp, q); }, forbidden,
        entailment_signature(abox, o, nullptr, &q));
}

Consistency eli_consistency_bounded(const ABox& abox, const Ontology& o,
                                    const BoundedParams& params) {
    TreeChase chase = eli_tree_chase(abox, o, params.chaseDepth, params.chaseNodeCap);
    if (chase.inconsistent) return Consistency::Inconsistent;
    if (chase.complete) return Consistency::Consistent;

    SearchSpec spec;
    spec.sig = entailment_signature(abox, o, nullptr, nullptr);
    spec.base = &abox;
    spec.maxSize = params.modelBound;
    spec.bitBudget = params.bitBudget;
    SearchOutcome outcome = search_extensions(
        spec, [&](const Interpretation& cand) { return is_model(cand, o); });
    if (outcome == SearchOutcome::Found) return Consistency::Consistent;
    return Consistency::Unknown;
}

} // namespace hornfit
