#include "hornfit/fit.hpp"

namespace hornfit {

std::vector<GammaMember> gamma_set(const Example& e, LogicTag l, const std::string& uRole) {
    std::vector<GammaMember> out;
    auto seen = [&](const Ontology& o) {
        for (const auto& m : out)
            if (m.ontology == o) return true;
        return false;
    };

    const Interpretation& aInterp = e.abox.interp();
    auto simOf = [&](const std::string& individual) {
        return concept_sim(l.base(), aInterp, *aInterp.named_element(individual));
    };
    std::vector<std::string> inds = e.abox.individuals();

    for (const auto& p : e.query.disjuncts) {
        for (const auto& v : enum_forest_variations(e.abox, p, l)) {
            auto reds = reduction_queries(v, e.abox);
            std::vector<size_t> existential;
            Ontology rooted;
            for (size_t i = 0; i < reds.size(); ++i) {
                if (reds[i].rooted)
                    rooted.add(simOf(reds[i].individual), reds[i].concept_);
                else
                    existential.push_back(i);
            }
            // One member per anchoring of the existential reduction queries.
            std::vector<size_t> anchor(existential.size(), 0);
            for (;;) {
                Ontology o = rooted;
                for (size_t j = 0; j < existential.size(); ++j)
                    o.add(simOf(inds[anchor[j]]),
                          concept_exists(Role{uRole, false}, reds[existential[j]].concept_));
                if (!seen(o)) out.push_back({o, false, v.cq});
                size_t j = 0;
                while (j < existential.size()) {
                    if (++anchor[j] < inds.size()) break;
                    anchor[j] = 0;
                    ++j;
                }
                if (j == existential.size()) break;
            }
        }
    }

    if (l.bottom) {
        for (const auto& a : inds) {
            Ontology o;
            o.add(simOf(a), concept_bot());
            if (!seen(o)) out.push_back({o, true, CQ{}});
        }
    }
    return out;
}

} // namespace hornfit
