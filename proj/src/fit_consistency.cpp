#include "hornfit/fit.hpp"

namespace hornfit {

std::string to_string(Certificate::Kind k) {
    switch (k) {
    case Certificate::Kind::None: return "none";
    case Certificate::Kind::TotalSimulation: return "total-simulation";
    case Certificate::Kind::DerivedAssertion: return "derived-assertion";
    case Certificate::Kind::InexpressibleBottom: return "no-bottom-concept";
    case Certificate::Kind::UnentailablePositive: return "unentailable-positive";
    case Certificate::Kind::GammaExhausted: return "candidates-exhausted";
    }
    return "?";
}

TrimmedChar char_concept_trimmed(LogicTag base, const Interpretation& source, ElemId elem,
                                 size_t cap, size_t stabilization) {
    size_t depth = std::min(cap, stabilization);
    return {char_concept(base.base(), source, elem, depth), depth};
}

FitDecision decide_consistency_fit(const ExampleCollection& ec, LogicTag l) {
    if (ec.lang != QueryLang::Consistency)
        throw InvalidInput("consistency fitting needs consistency-mode examples");

    FitDecision out;
    if (!l.bottom) {
        // Without bottom no ontology is ever inconsistent with an ABox.
        if (ec.negatives.empty()) {
            out.verdict = Verdict::Yes;
            return out;
        }
        out.verdict = Verdict::No;
        out.certificate.kind = Certificate::Kind::InexpressibleBottom;
        out.certificate.exampleIndex = 0;
        return out;
    }

    if (ec.negatives.empty()) {
        out.verdict = Verdict::Yes;
        return out;
    }

    ABox merged;
    for (const auto& e : ec.positives) merged.merge(e.abox);
    const Interpretation& target = merged.interp();

    size_t maxNegInds = 0;
    for (const auto& e : ec.negatives)
        maxNegInds = std::max(maxNegInds, e.abox.individual_count());
    size_t depthCap = target.size() * maxNegInds;

    struct Pending {
        const ABox* abox;
        ElemId anchor;
        size_t stabilization;
    };
    std::vector<Pending> pending;

    for (size_t i = 0; i < ec.negatives.size(); ++i) {
        const ABox& neg = ec.negatives[i].abox;
        SimResult s = max_simulation(l, neg.interp(), target);
        if (s.total) {
            out.verdict = Verdict::No;
            out.certificate.kind = Certificate::Kind::TotalSimulation;
            out.certificate.exampleIndex = i;
            for (const auto& [d1, d2] : s.pairs())
                out.certificate.simulationPairs.emplace_back(neg.interp().element_name(d1),
                                                             target.element_name(d2));
            return out;
        }
        ElemId anchor = 0;
        for (ElemId d = 0; d < neg.interp().size(); ++d)
            if (s.rows[d].none()) {
                anchor = d;
                break;
            }
        pending.push_back({&neg, anchor, s.rounds});
    }

    out.verdict = Verdict::Yes;
    for (const auto& p : pending) {
        TrimmedChar tc =
            char_concept_trimmed(l, p.abox->interp(), p.anchor, depthCap, p.stabilization);
        CharProvenance prov{p.abox->interp(), p.abox->interp().element_name(p.anchor),
                            tc.depth, l.base()};
        out.ontology.add(CI{tc.concept_, concept_bot()}, std::move(prov));
    }
    return out;
}

} // namespace hornfit
