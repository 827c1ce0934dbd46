#include "hornfit/fit.hpp"

namespace hornfit {

VerifyResult verify_fit(const Ontology& o, const ExampleCollection& ec, LogicTag l,
                        const BoundedParams& params) {
    bool exact = chaseable(o);
    bool unknown = false;

    if (ec.lang == QueryLang::Consistency) {
        for (const auto& e : ec.positives) {
            if (exact) {
                if (chase_universal_model(e.abox, o).inconsistent)
                    return VerifyResult::False;
            } else {
                Consistency c = eli_consistency_bounded(e.abox, o, params);
                if (c == Consistency::Inconsistent) return VerifyResult::False;
                if (c == Consistency::Unknown) unknown = true;
            }
        }
        for (const auto& e : ec.negatives) {
            if (exact) {
                if (!chase_universal_model(e.abox, o).inconsistent)
                    return VerifyResult::False;
            } else {
                Consistency c = eli_consistency_bounded(e.abox, o, params);
                if (c == Consistency::Consistent) return VerifyResult::False;
                if (c == Consistency::Unknown) unknown = true;
            }
        }
        return unknown ? VerifyResult::Unknown : VerifyResult::True;
    }

    (void)l;
    for (const auto& e : ec.positives) {
        if (exact) {
            if (!ucq_entailed_by_universal(e.abox, o, e.query, logic::EL))
                return VerifyResult::False;
        } else {
            Entailment ent = eli_entailment_bounded(e.abox, o, e.query, params);
            if (ent == Entailment::NotEntailed) return VerifyResult::False;
            if (ent == Entailment::Unknown) unknown = true;
        }
    }
    for (const auto& e : ec.negatives) {
        if (exact) {
            if (ucq_entailed_by_universal(e.abox, o, e.query, logic::EL))
                return VerifyResult::False;
        } else {
            Entailment ent = eli_entailment_bounded(e.abox, o, e.query, params);
            if (ent == Entailment::Entailed) return VerifyResult::False;
            if (ent == Entailment::Unknown) unknown = true;
        }
    }
    return unknown ? VerifyResult::Unknown : VerifyResult::True;
}

} // namespace hornfit
