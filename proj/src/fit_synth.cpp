#include "hornfit/fit.hpp"

#include <algorithm>
#include <map>

namespace hornfit {

namespace {

bool role_saturated(const Interpretation& interp, const std::string& role) {
    for (ElemId a = 0; a < interp.size(); ++a)
        if (interp.successors(role, a).size() != interp.size()) return false;
    return true;
}

// Conditions on a witness: one u-saturated model per negative example that
// refutes every forest variation of its query.
void audit_components(const ExampleCollection& ec, LogicTag l,
                      const std::vector<Interpretation>& components,
                      const std::string& uRole) {
    if (components.size() != ec.negatives.size())
        throw InvalidInput("witness needs one component per negative example");
    for (size_t i = 0; i < components.size(); ++i) {
        const auto& comp = components[i];
        const auto& e = ec.negatives[i];
        auto where = [&] { return "witness component " + std::to_string(i); };
        if (!role_saturated(comp, uRole))
            throw InvalidInput(where() + " is not " + uRole + "-saturated");
        if (!models_abox(comp, e.abox))
            throw InvalidInput(where() + " does not model its ABox");
        for (const auto& p : e.query.disjuncts)
            for (const auto& v : enum_forest_variations(e.abox, p, l))
                if (satisfies_cq(comp, v.cq))
                    throw InvalidInput(where() + " satisfies a variation of its query");
    }
}

} // namespace

SynthOntology synth_from_witness(const ExampleCollection& ec, LogicTag l,
                                 const std::vector<Interpretation>& components,
                                 const std::string& uRole) {
    audit_components(ec, l, components, uRole);
    std::vector<const Interpretation*> ptrs;
    for (const auto& c : components) ptrs.push_back(&c);
    Interpretation whole = disjoint_union(ptrs);

    SynthOntology out;
    for (const auto& e : ec.positives) {
        const Interpretation& src = e.abox.interp();
        SimResult s = max_simulation(l.base(), src, whole);
        size_t depthCap = whole.size() * e.abox.individual_count();

        if (l.bottom && !s.total) {
            ElemId anchor = 0;
            for (ElemId d = 0; d < src.size(); ++d)
                if (s.rows[d].none()) {
                    anchor = d;
                    break;
                }
            TrimmedChar tc = char_concept_trimmed(l, src, anchor, depthCap, s.rounds);
            out.add(CI{tc.concept_, concept_bot()},
                    CharProvenance{src, src.element_name(anchor), tc.depth, l.base()});
            continue;
        }

        auto pairs = s.pairs();
        auto inds = e.abox.individuals();
        bool found = false;
        for (const auto& p : e.query.disjuncts) {
            if (found) break;
            for (const auto& v : enum_forest_variations(e.abox, p, l)) {
                auto reds = reduction_queries(v, e.abox);
                std::vector<std::pair<std::string, Concept>> ensured;
                bool ok = true;
                for (const auto& rq : reds) {
                    if (rq.rooted) {
                        if (!sim_image_satisfies(e.abox, pairs, l, whole, rq.concept_,
                                                 rq.individual)) {
                            ok = false;
                            break;
                        }
                        ensured.emplace_back(rq.individual, rq.concept_);
                    } else {
                        Concept viaU = concept_exists(Role{uRole, false}, rq.concept_);
                        bool anchored = false;
                        for (const auto& a : inds)
                            if (sim_image_satisfies(e.abox, pairs, l, whole, viaU, a)) {
                                ensured.emplace_back(a, viaU);
                                anchored = true;
                                break;
                            }
                        if (!anchored) {
                            ok = false;
                            break;
                        }
                    }
                }
                if (!ok) continue;
                for (const auto& [individual, rhs] : ensured) {
                    ElemId a = *src.named_element(individual);
                    TrimmedChar tc = char_concept_trimmed(l, src, a, depthCap, s.rounds);
                    out.add(CI{tc.concept_, rhs},
                            CharProvenance{src, individual, tc.depth, l.base()});
                }
                found = true;
                break;
            }
        }
        if (!found)
            throw InvalidInput("witness does not support positive example (no variation "
                               "of its query is ensured)");
    }
    return out;
}

Ontology encode_char_poly(const SynthOntology& o) {
    Ontology out;
    std::map<std::pair<std::string, size_t>, size_t> families;
    size_t famCount = 0;

    auto auxName = [](size_t fam, size_t level, const std::string& elem) {
        return "_X" + std::to_string(fam) + "." + std::to_string(level) + "." + elem;
    };

    for (const auto& sci : o.cis) {
        if (!sci.prov || sci.prov->depth == 0) {
            out.add(sci.ci); // depth-0 sides are flat label conjunctions already
            continue;
        }
        const CharProvenance& pv = *sci.prov;
        const Interpretation& src = pv.source;
        auto key = std::make_pair(src.canonical_key() + "|" + to_string(pv.logic),
                                  pv.depth);
        auto it = families.find(key);
        size_t fam;
        if (it == families.end()) {
            fam = famCount++;
            families.emplace(key, fam);
            for (ElemId e = 0; e < src.size(); ++e) {
                std::vector<Concept> base;
                for (const auto& lab : src.labels(e)) base.push_back(concept_name(lab));
                out.add(concept_and(base),
                        concept_name(auxName(fam, 0, src.element_name(e))));
                for (size_t k = 1; k <= pv.depth; ++k) {
                    std::vector<Concept> parts = base;
                    for (const auto& role : src.role_names()) {
                        for (ElemId t : src.successors(role, e))
                            parts.push_back(concept_exists(
                                Role{role, false},
                                concept_name(auxName(fam, k - 1, src.element_name(t)))));
                        if (pv.logic.inverses)
                            for (ElemId t : src.predecessors(role, e))
                                parts.push_back(concept_exists(
                                    Role{role, true},
                                    concept_name(auxName(fam, k - 1, src.element_name(t)))));
                    }
                    out.add(concept_and(parts),
                            concept_name(auxName(fam, k, src.element_name(e))));
                }
            }
        } else {
            fam = it->second;
        }
        out.add(concept_name(auxName(fam, pv.depth, pv.element)), sci.ci.rhs);
    }
    return out;
}

Ontology synth_alternative_consistency(const ExampleCollection& ec, LogicTag l) {
    if (!l.bottom)
        throw InvalidInput("the assertion-complement construction needs elb or elib");
    FitDecision d = decide_consistency_fit(ec, l);
    if (d.verdict != Verdict::Yes)
        throw InvalidInput("no fitting ontology exists for this collection");

    ABox merged;
    for (const auto& e : ec.positives) merged.merge(e.abox);
    Signature sigma;
    for (const auto& e : ec.negatives) sigma.merge(e.abox.signature());

    auto vbar = [](const std::string& a) { return concept_name("_V." + a); };
    auto inds = merged.individuals();

    Ontology out;
    for (const auto& conceptName : sigma.concepts)
        for (const auto& a : inds)
            if (!merged.has_concept_assertion(conceptName, a))
                out.add(concept_name(conceptName), vbar(a));

    for (const auto& role : sigma.roles) {
        for (const auto& a : inds) {
            std::vector<Concept> succ, pred;
            for (const auto& [r, x, y] : merged.role_assertions()) {
                if (r != role) continue;
                if (x == a) succ.push_back(vbar(y));
                if (y == a) pred.push_back(vbar(x));
            }
            out.add(concept_exists(Role{role, false}, concept_and(succ)), vbar(a));
            if (l.inverses)
                out.add(concept_exists(Role{role, true}, concept_and(pred)), vbar(a));
        }
    }

    std::vector<Concept> all;
    for (const auto& a : inds) all.push_back(vbar(a));
    out.add(concept_and(all), concept_bot());
    return out;
}

Ontology synth_from_interpretation(const ExampleCollection& ec, LogicTag l,
                                   const std::vector<Interpretation>& components,
                                   size_t domainCap, const std::string& uRole) {
    audit_components(ec, l, components, uRole);

    // Condition on the positives, checked through the candidate ontologies:
    // some member per positive must hold in every component.
    for (const auto& e : ec.positives) {
        auto gamma = gamma_set(e, l, uRole);
        bool supported = false;
        for (const auto& m : gamma) {
            bool everywhere = true;
            for (const auto& comp : components)
                if (!is_model(comp, m.ontology)) {
                    everywhere = false;
                    break;
                }
            if (everywhere) {
                supported = true;
                break;
            }
        }
        if (!supported)
            throw InvalidInput("witness does not support a positive example");
    }

    std::vector<const Interpretation*> ptrs;
    for (const auto& c : components) ptrs.push_back(&c);
    Interpretation whole = disjoint_union(ptrs);
    if (whole.size() > domainCap)
        throw InvalidInput("witness domain of size " + std::to_string(whole.size()) +
                           " exceeds the cap " + std::to_string(domainCap) +
                           " (the encoding is exponential in it)");

    Signature sigPos;
    for (const auto& e : ec.positives) {
        sigPos.merge(e.abox.signature());
        for (const auto& d : e.query.disjuncts)
            for (const auto& a : d.atoms()) {
                if (a.is_role())
                    sigPos.roles.insert(a.pred);
                else
                    sigPos.concepts.insert(a.pred);
            }
    }
    Signature sigAll = whole.signature();
    sigAll.merge(sigPos);
    sigAll.roles.erase(uRole); // the saturation role is not part of the encoding

    auto vbar = [&](ElemId d) { return concept_name("_V." + whole.element_name(d)); };
    std::vector<Role> posRoles, allRoles;
    for (const auto& r : sigPos.roles)
        if (r != uRole) {
            posRoles.push_back(Role{r, false});
            if (l.inverses) posRoles.push_back(Role{r, true});
        }
    for (const auto& r : sigAll.roles) {
        allRoles.push_back(Role{r, false});
        if (l.inverses) allRoles.push_back(Role{r, true});
    }

    Ontology out;
    size_t n = whole.size();

    if (l.bottom) {
        std::vector<Concept> all;
        for (ElemId d = 0; d < n; ++d) all.push_back(vbar(d));
        out.add(concept_and(all), concept_bot());
    }
    for (const auto& conceptName : sigPos.concepts)
        for (ElemId d = 0; d < n; ++d)
            if (!whole.has_label(d, conceptName))
                out.add(concept_name(conceptName), vbar(d));
    for (const auto& role : posRoles)
        for (ElemId d = 0; d < n; ++d) {
            std::vector<Concept> succ;
            for (ElemId e : whole.neighbors(role, d)) succ.push_back(vbar(e));
            out.add(concept_exists(role, concept_and(succ)), vbar(d));
        }
    for (const auto& conceptName : sigAll.concepts) {
        std::vector<Concept> outside;
        for (ElemId d = 0; d < n; ++d)
            if (!whole.has_label(d, conceptName)) outside.push_back(vbar(d));
        out.add(concept_and(outside), concept_name(conceptName));
    }
    for (const auto& role : allRoles) {
        for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
            std::vector<Concept> inF, inP;
            for (ElemId d = 0; d < n; ++d) {
                if (mask & (uint64_t{1} << d)) inF.push_back(vbar(d));
                bool stepsStayInside = true;
                for (ElemId e : whole.neighbors(role, d))
                    if (!(mask & (uint64_t{1} << e))) {
                        stepsStayInside = false;
                        break;
                    }
                if (stepsStayInside) inP.push_back(vbar(d));
            }
            out.add(concept_and(inP), concept_exists(role, concept_and(inF)));
        }
    }
    return out;
}

Ontology encode_abox_as_ontology(const ABox& abox, LogicTag l) {
    if (abox.empty()) throw InvalidInput("cannot encode an empty ABox");
    Ontology out;
    const Interpretation& interp = abox.interp();
    for (const auto& a : abox.individuals()) {
        Concept marker = concept_name("_S." + a);
        out.add(concept_top(), concept_exists(Role{kAuxRole, false}, marker));
        out.add(marker, concept_sim(l.base(), interp, *interp.named_element(a)));
    }
    return out;
}

} // namespace hornfit
