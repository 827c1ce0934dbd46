#include "hornfit/fit.hpp"

namespace hornfit {

namespace {

struct AQExample {
    const ABox* abox;
    std::string conceptName;
    std::string individual;
};

AQExample as_aq(const Example& e, const char* side, size_t idx) {
    if (e.query.disjuncts.size() != 1 || !e.query.disjuncts[0].is_atomic())
        throw InvalidInput(std::string(side) + " example " + std::to_string(idx) +
                           ": atomic-query fitting needs queries of the form A(a)");
    const Atom& a = e.query.disjuncts[0].atoms()[0];
    return {&e.abox, a.pred, a.args[0].name};
}

} // namespace

FitDecision decide_aq_fit(const ExampleCollection& ec, LogicTag l) {
    std::vector<AQExample> pos, neg;
    for (size_t i = 0; i < ec.positives.size(); ++i)
        pos.push_back(as_aq(ec.positives[i], "positive", i));
    for (size_t i = 0; i < ec.negatives.size(); ++i)
        neg.push_back(as_aq(ec.negatives[i], "negative", i));

    // Least completion: close the union of the negative ABoxes under the
    // positive examples read as simulation-bodied rules.
    ABox completion;
    for (const auto& e : ec.negatives) completion.merge(e.abox);

    bool grown = true;
    while (grown && !completion.empty()) {
        grown = false;
        for (const auto& p : pos) {
            SimResult s = max_simulation(l, p.abox->interp(), completion.interp());
            if (l.bottom && !s.total) continue;
            ElemId a = *p.abox->interp().named_element(p.individual);
            std::vector<std::string> targets;
            s.rows[a].for_each([&](size_t d2) {
                targets.push_back(completion.interp().element_name(static_cast<ElemId>(d2)));
            });
            for (const auto& b : targets)
                if (!completion.has_concept_assertion(p.conceptName, b)) {
                    completion.assert_concept(p.conceptName, b);
                    grown = true;
                }
        }
    }

    FitDecision out;
    for (size_t i = 0; i < neg.size(); ++i) {
        if (completion.has_concept_assertion(neg[i].conceptName, neg[i].individual)) {
            out.verdict = Verdict::No;
            out.certificate.kind = Certificate::Kind::DerivedAssertion;
            out.certificate.exampleIndex = i;
            out.certificate.conceptName = neg[i].conceptName;
            out.certificate.individual = neg[i].individual;
            return out;
        }
    }

    out.verdict = Verdict::Yes;
    for (const auto& p : pos) {
        const Interpretation& src = p.abox->interp();
        size_t depthCap = completion.individual_count() * p.abox->individual_count();
        if (completion.empty()) {
            // Degenerate completion: anchor the positives on their own labels.
            ElemId a = *src.named_element(p.individual);
            TrimmedChar tc = char_concept_trimmed(l, src, a, 0, 0);
            out.ontology.add(CI{tc.concept_, concept_name(p.conceptName)},
                             CharProvenance{src, p.individual, tc.depth, l.base()});
            continue;
        }
        SimResult s = max_simulation(l, src, completion.interp());
        if (l.bottom && !s.total) {
            ElemId anchor = 0;
            for (ElemId d = 0; d < src.size(); ++d)
                if (s.rows[d].none()) {
                    anchor = d;
                    break;
                }
            TrimmedChar tc = char_concept_trimmed(l, src, anchor, depthCap, s.rounds);
            out.ontology.add(CI{tc.concept_, concept_bot()},
                             CharProvenance{src, src.element_name(anchor), tc.depth, l.base()});
        } else {
            ElemId a = *src.named_element(p.individual);
            TrimmedChar tc = char_concept_trimmed(l, src, a, depthCap, s.rounds);
            out.ontology.add(CI{tc.concept_, concept_name(p.conceptName)},
                             CharProvenance{src, p.individual, tc.depth, l.base()});
        }
    }
    return out;
}

} // namespace hornfit
