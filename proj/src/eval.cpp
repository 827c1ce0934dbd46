#include "hornfit/eval.hpp"

#include "hornfit/abox.hpp"
#include "hornfit/sim.hpp"

namespace hornfit {

const DynBitset& Evaluator::eval(const Concept& c) {
    if (interp_.version() != version_) {
        memo_.clear();
        version_ = interp_.version();
    }
    auto it = memo_.find(c.get());
    if (it != memo_.end()) return it->second;

    DynBitset out(interp_.size());
    switch (c->kind()) {
    case ConceptNode::Kind::Top: out.set_all(); break;
    case ConceptNode::Kind::Bot: break;
    case ConceptNode::Kind::Name: out = interp_.label_column(c->name()); break;
    case ConceptNode::Kind::And: {
        out.set_all();
        for (const auto& k : c->conjuncts()) out &= eval(k);
        break;
    }
    case ConceptNode::Kind::Exists: {
        const DynBitset& kid = eval(c->child());
        for (ElemId d = 0; d < interp_.size(); ++d) {
            for (ElemId e : interp_.neighbors(c->role(), d))
                if (kid.test(e)) {
                    out.set(d);
                    break;
                }
        }
        break;
    }
    case ConceptNode::Kind::Sim: {
        auto s = max_simulation(c->sim_tag(), c->sim_interp(), interp_);
        out = s.rows[c->sim_point()];
        break;
    }
    }
    return memo_.emplace(c.get(), std::move(out)).first->second;
}

DynBitset eval_concept(const Concept& c, const Interpretation& interp) {
    Evaluator ev(interp);
    return ev.eval(c);
}

bool satisfies_ci(const Interpretation& interp, const CI& ci) {
    Evaluator ev(interp);
    return ev.eval(ci.lhs).subset_of(ev.eval(ci.rhs));
}

bool is_model(const Interpretation& interp, const Ontology& o) {
    Evaluator ev(interp);
    for (const auto& ci : o.cis())
        if (!ev.eval(ci.lhs).subset_of(ev.eval(ci.rhs))) return false;
    return true;
}

bool models_abox(const Interpretation& interp, const ABox& abox) {
    for (const auto& [c, a] : abox.concept_assertions()) {
        auto e = interp.named_element(a);
        if (!e || !interp.has_label(*e, c)) return false;
    }
    for (const auto& [r, a, b] : abox.role_assertions()) {
        auto ea = interp.named_element(a);
        auto eb = interp.named_element(b);
        if (!ea || !eb || !interp.has_edge(r, *ea, *eb)) return false;
    }
    return true;
}

} // namespace hornfit
