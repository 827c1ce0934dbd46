#ifndef HORNFIT_TESTS_SUPPORT_HPP
#define HORNFIT_TESTS_SUPPORT_HPP

#include <map>
#include <random>
#include <string>

#include "hornfit/fit.hpp"
#include "hornfit/format.hpp"

namespace hornfit::test {

using Rng = std::mt19937_64;

inline std::string data_dir() { return HORNFIT_DATA_DIR; }

inline ExampleCollection inst(const std::string& body) { return parse_instance(body); }

inline Concept C(const std::string& sexpr, LogicTag base = logic::ELIBot) {
    return parse_concept_text(sexpr, base);
}

inline ABox abox(const std::string& text) { return parse_abox(text); }

// ── Random structures ───────────────────────────────────────────────────

inline Interpretation rand_interp(Rng& rng, size_t maxElems, size_t nConcepts,
                                  size_t nRoles, double labelP = 0.5,
                                  double edgeP = 0.3) {
    std::uniform_int_distribution<size_t> nElems(1, maxElems);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    Interpretation out;
    size_t n = nElems(rng);
    for (size_t i = 0; i < n; ++i) out.add_element("d" + std::to_string(i));
    for (size_t c = 0; c < nConcepts; ++c)
        for (ElemId e = 0; e < n; ++e)
            if (coin(rng) < labelP)
                out.add_label(e, "A" + std::to_string(c));
    for (size_t r = 0; r < nRoles; ++r)
        for (ElemId a = 0; a < n; ++a)
            for (ElemId b = 0; b < n; ++b)
                if (coin(rng) < edgeP)
                    out.add_edge("r" + std::to_string(r), a, b);
    return out;
}

inline ABox rand_abox(Rng& rng, size_t maxInds, size_t nConcepts, size_t nRoles,
                      double labelP = 0.5, double edgeP = 0.3) {
    std::uniform_int_distribution<size_t> nInds(1, maxInds);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    ABox out;
    size_t n = nInds(rng);
    std::vector<std::string> names;
    for (size_t i = 0; i < n; ++i) names.push_back("i" + std::to_string(i));
    bool any = false;
    for (size_t c = 0; c < nConcepts; ++c)
        for (const auto& a : names)
            if (coin(rng) < labelP) {
                out.assert_concept("A" + std::to_string(c), a);
                any = true;
            }
    for (size_t r = 0; r < nRoles; ++r)
        for (const auto& a : names)
            for (const auto& b : names)
                if (coin(rng) < edgeP) {
                    out.assert_role("r" + std::to_string(r), a, b);
                    any = true;
                }
    if (!any) out.assert_concept("A0", names[0]);
    return out;
}

// Plain concepts (no bottom, no quantifier payloads).
inline Concept rand_concept(Rng& rng, LogicTag l, int depth, size_t nConcepts,
                            size_t nRoles) {
    std::uniform_int_distribution<int> kind(0, depth > 0 ? 3 : 1);
    std::uniform_int_distribution<size_t> conceptIdx(0, nConcepts - 1);
    std::uniform_int_distribution<size_t> roleIdx(0, nRoles - 1);
    std::uniform_int_distribution<int> flip(0, 1);
    switch (kind(rng)) {
    case 0: return concept_top();
    case 1: return concept_name("A" + std::to_string(conceptIdx(rng)));
    case 2: {
        Role r{"r" + std::to_string(roleIdx(rng)),
               l.inverses && flip(rng) == 1};
        return concept_exists(r, rand_concept(rng, l, depth - 1, nConcepts, nRoles));
    }
    default:
        return concept_and(rand_concept(rng, l, depth - 1, nConcepts, nRoles),
                           rand_concept(rng, l, depth - 1, nConcepts, nRoles));
    }
}

// ── Oracles ─────────────────────────────────────────────────────────────

// Bounded simulation straight from the definition: a literal recursion over
// the conditions, memoized by (source, target, stage).
struct KSimOracle {
    const Interpretation& from;
    const Interpretation& to;
    LogicTag l;
    std::map<std::tuple<ElemId, ElemId, uint64_t>, bool> memo;

    bool pair_at(ElemId d1, ElemId d2, uint64_t k) {
        auto key = std::make_tuple(d1, d2, k);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        memo[key] = false; // cycles cannot certify membership at a fixed stage
        bool ok = true;
        for (const auto& lab : from.labels(d1))
            if (!to.has_label(d2, lab)) ok = false;
        if (ok && k > 0) {
            for (const auto& role : from.role_names()) {
                for (ElemId e1 : from.successors(role, d1)) {
                    bool found = false;
                    for (ElemId e2 : to.successors(role, d2))
                        if (pair_at(e1, e2, k - 1)) {
                            found = true;
                            break;
                        }
                    if (!found) ok = false;
                }
                if (l.inverses)
                    for (ElemId e1 : from.predecessors(role, d1)) {
                        bool found = false;
                        for (ElemId e2 : to.predecessors(role, d2))
                            if (pair_at(e1, e2, k - 1)) {
                                found = true;
                                break;
                            }
                        if (!found) ok = false;
                    }
            }
        }
        memo[key] = ok;
        return ok;
    }

    bool total_at(uint64_t k) {
        for (ElemId d1 = 0; d1 < from.size(); ++d1) {
            bool some = false;
            for (ElemId d2 = 0; d2 < to.size(); ++d2)
                if (pair_at(d1, d2, k)) {
                    some = true;
                    break;
                }
            if (!some) return false;
        }
        return true;
    }

    bool holds(ElemId d1, ElemId d2, uint64_t k) {
        if (l.bottom && !total_at(k)) return false;
        return pair_at(d1, d2, k);
    }
};

inline bool oracle_k_simulates(LogicTag l, uint64_t k, const Interpretation& from,
                               ElemId d1, const Interpretation& to, ElemId d2) {
    KSimOracle o{from, to, l, {}};
    return o.holds(d1, d2, k);
}

// Exhaustive homomorphism search over all term assignments.
inline bool oracle_has_hom(const CQ& q, const Interpretation& target) {
    auto vars = q.variables();
    std::map<std::string, ElemId> assign;
    for (const auto& name : q.individuals()) {
        auto e = target.named_element(name);
        if (!e) return false;
        assign["i:" + name] = *e;
    }
    auto atomHolds = [&](const Atom& a) {
        auto lookup = [&](const Term& t) {
            return assign.at((t.isVar ? "v:" : "i:") + t.name);
        };
        if (a.is_role()) return target.has_edge(a.pred, lookup(a.args[0]), lookup(a.args[1]));
        return target.has_label(lookup(a.args[0]), a.pred);
    };
    std::vector<ElemId> pick(vars.size(), 0);
    if (target.size() == 0) return vars.empty() && [&] {
        for (const auto& a : q.atoms())
            if (!atomHolds(a)) return false;
        return true;
    }();
    for (;;) {
        for (size_t i = 0; i < vars.size(); ++i) assign["v:" + vars[i]] = pick[i];
        bool all = true;
        for (const auto& a : q.atoms())
            if (!atomHolds(a)) {
                all = false;
                break;
            }
        if (all) return true;
        size_t i = 0;
        while (i < pick.size()) {
            if (++pick[i] < target.size()) break;
            pick[i] = 0;
            ++i;
        }
        if (i == pick.size()) return false;
    }
}

// All interpretations extending the ABox over the signature, up to maxSize
// elements, by plain bit enumeration (no pruning).
inline void oracle_enumerate_extensions(
    const ABox& base, const Signature& sig, size_t maxSize,
    const std::function<void(const Interpretation&)>& fn) {
    std::vector<std::string> concepts(sig.concepts.begin(), sig.concepts.end());
    std::vector<std::string> roles(sig.roles.begin(), sig.roles.end());
    auto inds = base.individuals();
    for (size_t n = std::max<size_t>(inds.size(), 1); n <= std::max(maxSize, inds.size());
         ++n) {
        std::vector<std::string> elems = inds;
        for (size_t i = elems.size(); i < n; ++i)
            elems.push_back("m" + std::to_string(i));
        size_t labelBits = concepts.size() * n;
        size_t edgeBits = roles.size() * n * n;
        size_t total = labelBits + edgeBits;
        if (total > 24) throw Error("oracle enumeration too large");
        for (uint64_t mask = 0; mask < (uint64_t{1} << total); ++mask) {
            Interpretation cand;
            for (const auto& e : elems) cand.add_element(e);
            for (size_t i = 0; i < inds.size(); ++i)
                cand.set_named(inds[i], static_cast<ElemId>(i));
            bool ok = true;
            size_t bit = 0;
            for (size_t c = 0; c < concepts.size(); ++c)
                for (size_t e = 0; e < n; ++e, ++bit)
                    if (mask & (uint64_t{1} << bit))
                        cand.add_label(static_cast<ElemId>(e), concepts[c]);
            for (size_t r = 0; r < roles.size(); ++r)
                for (size_t f = 0; f < n; ++f)
                    for (size_t t = 0; t < n; ++t, ++bit)
                        if (mask & (uint64_t{1} << bit))
                            cand.add_edge(roles[r], static_cast<ElemId>(f),
                                          static_cast<ElemId>(t));
            if (!models_abox(cand, base)) ok = false;
            if (ok) fn(cand);
        }
    }
}

// Does some 2-coloring of the first `protectedCount` vertices fail to extend
// to a 3-coloring of the graph?
inline bool oracle_blocked_coloring(const UndirectedGraph& g, size_t protectedCount) {
    auto proper = [&](const std::vector<size_t>& color, size_t upto) {
        for (const auto& [u, v] : g.edges)
            if (u <= upto && v <= upto && color[u] == color[v]) return false;
        return true;
    };
    std::vector<size_t> c2(g.vertices + 1, 0);
    for (uint64_t mask = 0; mask < (uint64_t{1} << protectedCount); ++mask) {
        for (size_t v = 1; v <= protectedCount; ++v)
            c2[v] = (mask >> (v - 1)) & 1;
        if (!proper(c2, protectedCount)) continue;
        // try to extend to a 3-coloring of the whole graph
        bool extendable = false;
        size_t rest = g.vertices - protectedCount;
        std::vector<size_t> c3(g.vertices + 1, 0);
        for (size_t v = 1; v <= protectedCount; ++v) c3[v] = c2[v];
        uint64_t combos = 1;
        for (size_t i = 0; i < rest; ++i) combos *= 3;
        for (uint64_t pick = 0; pick < combos && !extendable; ++pick) {
            uint64_t p = pick;
            for (size_t v = protectedCount + 1; v <= g.vertices; ++v) {
                c3[v] = p % 3;
                p /= 3;
            }
            if (proper(c3, g.vertices)) extendable = true;
        }
        if (!extendable) return true;
    }
    return false;
}

} // namespace hornfit::test

#endif
