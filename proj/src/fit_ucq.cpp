#include "hornfit/fit.hpp"

#include <algorithm>
#include <map>

namespace hornfit {

std::vector<Interpretation> prepare_witness_components(std::vector<Interpretation> raw,
                                                       const std::string& uRole) {
    std::vector<Interpretation> out;
    for (size_t i = 0; i < raw.size(); ++i) {
        Interpretation comp = prefix_anonymous(raw[i], "w" + std::to_string(i) + ".");
        comp.saturate_role(uRole);
        out.push_back(std::move(comp));
    }
    return out;
}

namespace {

struct NegativeChecks {
    const ABox* abox;
    // reduction queries per forest variation, over all disjuncts
    std::vector<std::vector<ReductionQuery>> variationReds;
    std::vector<Variation> variations;
};

std::vector<NegativeChecks> precompute_negative_checks(const ExampleCollection& ec,
                                                       LogicTag l) {
    std::vector<NegativeChecks> out;
    for (const auto& e : ec.negatives) {
        NegativeChecks nc;
        nc.abox = &e.abox;
        for (const auto& p : e.query.disjuncts)
            for (auto& v : enum_forest_variations(e.abox, p, l)) {
                nc.variationReds.push_back(reduction_queries(v, e.abox));
                nc.variations.push_back(std::move(v));
            }
        out.push_back(std::move(nc));
    }
    return out;
}

bool reds_hold(Evaluator& ev, const std::vector<ReductionQuery>& reds) {
    for (const auto& rq : reds) {
        if (rq.rooted) {
            auto e = ev.interp().named_element(rq.individual);
            if (!e || !ev.holds_at(rq.concept_, *e)) return false;
        } else if (!ev.eval(rq.concept_).any()) {
            return false;
        }
    }
    return true;
}

} // namespace

FitDecision decide_ucq_fit_el(const ExampleCollection& ec, LogicTag l) {
    if (l.inverses) throw InvalidInput("this decider covers el and elb");
    if (ec.negatives.empty()) return fit_no_negatives(ec, l);

    FitDecision out;
    std::vector<std::vector<GammaMember>> gammas;
    for (const auto& e : ec.positives) {
        gammas.push_back(gamma_set(e, l, kAuxRole));
        if (gammas.back().empty()) {
            // No candidate way to entail this positive: no ontology fits.
            out.verdict = Verdict::No;
            out.certificate.kind = Certificate::Kind::GammaExhausted;
            return out;
        }
    }

    auto negChecks = precompute_negative_checks(ec, l);

    std::vector<size_t> choice(gammas.size(), 0);
    for (;;) {
        Ontology candidate;
        for (size_t i = 0; i < gammas.size(); ++i)
            candidate.merge(gammas[i][choice[i]].ontology);

        bool ok = true;
        std::vector<Interpretation> chaseModels;
        for (const auto& nc : negChecks) {
            UniversalModel u = chase_universal_model(*nc.abox, candidate);
            if (u.inconsistent) {
                ok = false;
                break;
            }
            Evaluator ev(u.interp);
            for (const auto& reds : nc.variationReds)
                if (reds_hold(ev, reds)) {
                    ok = false;
                    break;
                }
            if (!ok) break;
            chaseModels.push_back(std::move(u.interp));
        }

        if (ok) {
            out.witnessComponents = prepare_witness_components(std::move(chaseModels),
                                                               kAuxRole);
            out.ontology = synth_from_witness(ec, l, out.witnessComponents, kAuxRole);
            out.verdict = Verdict::Yes;
            return out;
        }

        size_t i = choice.size();
        for (;;) {
            if (i == 0) {
                out.verdict = Verdict::No;
                out.certificate.kind = Certificate::Kind::GammaExhausted;
                return out;
            }
            --i;
            if (++choice[i] < gammas[i].size()) break;
            choice[i] = 0;
        }
    }
}

namespace {

// For one negative: survey the bounded model space, recording which Gamma
// members each admissible refutation model satisfies.
struct WitnessSurvey {
    // Distinct satisfaction profiles in first-seen order; one witness each.
    std::vector<std::vector<DynBitset>> profiles;
    std::vector<Interpretation> witnesses; // u-saturated
    std::vector<Interpretation> rawWitnesses;
};

struct NegativeSurveyState {
    const Example* neg = nullptr;
    std::vector<Variation> variations;
    std::set<std::pair<std::string, std::string>> forbidden;
    std::set<std::string> seenProfiles;
    WitnessSurvey survey;
};

void survey_negative(NegativeSurveyState& st, LogicTag l,
                     const std::vector<std::vector<GammaMember>>& gammas,
                     const Signature& sig, size_t maxSize, const BoundedParams& params) {
    SearchSpec spec;
    spec.sig = sig;
    spec.base = &st.neg->abox;
    spec.maxSize = maxSize;
    spec.forbiddenLabels = st.forbidden;
    spec.bitBudget = params.bitBudget;

    search_extensions(spec, [&](const Interpretation& cand) {
        for (const auto& v : st.variations)
            if (satisfies_cq(cand, v.cq)) return false;

        Interpretation sat = cand;
        sat.saturate_role(kAuxRole);
        std::vector<DynBitset> profile;
        bool anyBit = false;
        std::string key;
        for (const auto& g : gammas) {
            DynBitset bits(g.size());
            for (size_t j = 0; j < g.size(); ++j)
                if (is_model(sat, g[j].ontology)) {
                    bits.set(j);
                    anyBit = true;
                }
            bits.for_each([&](size_t b) { key += std::to_string(b) + ","; });
            key += ";";
            profile.push_back(std::move(bits));
        }
        if (!anyBit && !gammas.empty()) return false; // useless for every positive
        if (st.seenProfiles.insert(key).second) {
            st.survey.profiles.push_back(std::move(profile));
            st.survey.witnesses.push_back(std::move(sat));
            st.survey.rawWitnesses.push_back(cand);
        }
        return false; // keep surveying
    });
}

} // namespace

FitDecision decide_ucq_fit_eli_bounded(const ExampleCollection& ec, LogicTag l,
                                       size_t maxWitnessSize, const BoundedParams& params) {
    if (ec.negatives.empty()) return fit_no_negatives(ec, l, params);

    FitDecision out;
    out.bound = maxWitnessSize;

    std::vector<std::vector<GammaMember>> gammas;
    for (const auto& e : ec.positives) gammas.push_back(gamma_set(e, l, kAuxRole));
    if (std::any_of(gammas.begin(), gammas.end(),
                    [](const auto& g) { return g.empty(); })) {
        out.verdict = Verdict::Unknown; // a sound bounded search cannot conclude NO
        return out;
    }

    Signature sig = ec.signature();
    std::vector<NegativeSurveyState> states(ec.negatives.size());
    for (size_t i = 0; i < ec.negatives.size(); ++i) {
        states[i].neg = &ec.negatives[i];
        for (const auto& p : ec.negatives[i].query.disjuncts)
            for (auto& v : enum_forest_variations(ec.negatives[i].abox, p, l))
                states[i].variations.push_back(std::move(v));
        for (const auto& v : states[i].variations)
            if (v.cq.is_atomic())
                states[i].forbidden.insert(
                    {v.cq.atoms()[0].pred, v.cq.atoms()[0].args[0].name});
    }

    // Pick one recorded model per negative so that, for every positive, some
    // single Gamma member is satisfied by all of them.
    std::vector<size_t> pick(states.size(), 0);
    std::vector<std::vector<DynBitset>> running(states.size() + 1);
    running[0] = std::vector<DynBitset>();
    for (const auto& g : gammas) running[0].push_back([&] {
        DynBitset b(g.size());
        b.set_all();
        return b;
    }());

    std::function<bool(size_t)> dfs = [&](size_t i) -> bool {
        if (i == states.size()) {
            for (const auto& b : running[i])
                if (b.none()) return false;
            return true;
        }
        for (size_t c = 0; c < states[i].survey.profiles.size(); ++c) {
            running[i + 1] = running[i];
            bool dead = false;
            for (size_t p = 0; p < gammas.size(); ++p) {
                running[i + 1][p] &= states[i].survey.profiles[c][p];
                if (running[i + 1][p].none()) dead = true;
            }
            if (dead) continue;
            pick[i] = c;
            if (dfs(i + 1)) return true;
        }
        return false;
    };

    // Iterative deepening: stop at the smallest bound admitting a witness.
    for (size_t b = 1; b <= maxWitnessSize; ++b) {
        for (auto& st : states) survey_negative(st, l, gammas, sig, b, params);
        if (dfs(0)) {
            std::vector<Interpretation> raw;
            for (size_t i = 0; i < states.size(); ++i)
                raw.push_back(states[i].survey.rawWitnesses[pick[i]]);
            out.witnessComponents = prepare_witness_components(std::move(raw), kAuxRole);
            out.ontology = synth_from_witness(ec, l, out.witnessComponents, kAuxRole);
            out.verdict = Verdict::Yes;
            out.bound = b;
            return out;
        }
    }

    out.verdict = Verdict::Unknown;
    out.bound = maxWitnessSize;
    return out;
}

FitDecision fit_no_negatives(const ExampleCollection& ec, LogicTag l,
                             const BoundedParams& params) {
    if (!ec.negatives.empty()) throw InvalidInput("collection has negative examples");
    FitDecision out;
    if (l.bottom) {
        out.verdict = Verdict::Yes;
        out.ontology.add(CI{concept_top(), concept_bot()});
        return out;
    }

    // The saturating ontology over the instance signature either fits or
    // nothing does.
    Signature sig = ec.signature();
    Ontology full;
    for (const auto& c : sig.concepts) full.add(concept_top(), concept_name(c));
    for (const auto& r : sig.roles)
        full.add(concept_top(), concept_exists(Role{r, false}, concept_top()));

    bool unknown = false;
    for (size_t i = 0; i < ec.positives.size(); ++i) {
        const auto& e = ec.positives[i];
        if (!l.inverses) {
            if (!ucq_entailed_by_universal(e.abox, full, e.query, l)) {
                out.verdict = Verdict::No;
                out.certificate.kind = Certificate::Kind::UnentailablePositive;
                out.certificate.exampleIndex = i;
                return out;
            }
        } else {
            Entailment ent = eli_entailment_bounded(e.abox, full, e.query, params);
            if (ent == Entailment::NotEntailed) {
                out.verdict = Verdict::No;
                out.certificate.kind = Certificate::Kind::UnentailablePositive;
                out.certificate.exampleIndex = i;
                return out;
            }
            if (ent == Entailment::Unknown) unknown = true;
        }
    }
    if (unknown) {
        out.verdict = Verdict::Unknown;
        return out;
    }
    out.verdict = Verdict::Yes;
    for (const auto& ci : full.cis()) out.ontology.add(ci);
    return out;
}

FitDecision decide_fit(const ExampleCollection& ec, const FitOptions& opts) {
    switch (ec.lang) {
    case QueryLang::Consistency: return decide_consistency_fit(ec, ec.logic);
    case QueryLang::AQ: return decide_aq_fit(ec, ec.logic);
    case QueryLang::CQ:
    case QueryLang::UCQ:
        if (ec.negatives.empty()) return fit_no_negatives(ec, ec.logic, opts.bounded);
        if (ec.logic.inverses)
            return decide_ucq_fit_eli_bounded(ec, ec.logic, opts.maxWitnessSize,
                                              opts.bounded);
        return decide_ucq_fit_el(ec, ec.logic);
    }
    throw InvalidInput("unknown query language");
}

} // namespace hornfit
