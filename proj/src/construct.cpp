#include "hornfit/construct.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace hornfit {

namespace {

std::string tuple_name(const std::vector<const Interpretation*>& interps,
                       const std::vector<ElemId>& tuple) {
    std::string out = "(";
    for (size_t i = 0; i < tuple.size(); ++i) {
        if (i) out += ",";
        out += interps[i]->element_name(tuple[i]);
    }
    out += ")";
    return out;
}

} // namespace

PointedInterp product(const std::vector<PointedInterp>& factors, const Signature& sig) {
    PointedInterp out;
    if (factors.empty()) {
        ElemId e = out.interp.add_element("()");
        for (const auto& c : sig.concepts) out.interp.add_label(e, c);
        for (const auto& r : sig.roles) out.interp.add_edge(r, e, e);
        out.point = e;
        return out;
    }

    std::vector<const Interpretation*> parts;
    for (const auto& f : factors) parts.push_back(&f.interp);

    // Enumerate the full tuple space in lexicographic order.
    std::vector<ElemId> tuple(parts.size(), 0);
    std::vector<std::vector<ElemId>> tuples;
    for (;;) {
        tuples.push_back(tuple);
        size_t i = tuple.size();
        while (i > 0) {
            --i;
            if (++tuple[i] < parts[i]->size()) break;
            tuple[i] = 0;
            if (i == 0) goto done;
        }
    }
done:
    std::map<std::vector<ElemId>, ElemId> index;
    for (const auto& t : tuples) index[t] = out.interp.add_element(tuple_name(parts, t));

    // Labels shared by all components.
    for (const auto& t : tuples) {
        ElemId e = index[t];
        for (const auto& label : parts[0]->labels(t[0])) {
            bool everywhere = true;
            for (size_t i = 1; i < parts.size() && everywhere; ++i)
                everywhere = parts[i]->has_label(t[i], label);
            if (everywhere) out.interp.add_label(e, label);
        }
    }

    // Edges present in every component.
    std::set<std::string> roles;
    for (const auto& r : parts[0]->role_names()) roles.insert(r);
    for (const auto& role : roles) {
        for (const auto& t : tuples) {
            // Candidate targets: extend component-wise.
            std::vector<std::vector<ElemId>> partial{{}};
            for (size_t i = 0; i < parts.size(); ++i) {
                std::vector<std::vector<ElemId>> next;
                for (const auto& p : partial)
                    for (ElemId s : parts[i]->successors(role, t[i])) {
                        auto q = p;
                        q.push_back(s);
                        next.push_back(std::move(q));
                    }
                partial = std::move(next);
                if (partial.empty()) break;
            }
            for (const auto& target : partial)
                out.interp.add_edge(role, index[t], index[target]);
        }
    }

    std::vector<ElemId> pointTuple;
    for (const auto& f : factors) pointTuple.push_back(f.point);
    out.point = index[pointTuple];
    return out;
}

PointedInterp unravel(LogicTag l, const Interpretation& interp, ElemId d, size_t depth) {
    PointedInterp out;
    struct Node {
        ElemId tail;
        size_t len;
        ElemId id; // in the output
    };
    ElemId root = out.interp.add_element(interp.element_name(d));
    for (const auto& lab : interp.labels(d)) out.interp.add_label(root, lab);
    out.point = root;

    std::vector<Node> frontier{{d, 0, root}};
    while (!frontier.empty()) {
        std::vector<Node> next;
        for (const auto& node : frontier) {
            if (node.len == depth) continue;
            auto extend = [&](const Role& step) {
                for (ElemId e : interp.neighbors(step, node.tail)) {
                    std::string name = out.interp.element_name(node.id) + "/" +
                                       step.to_string() + "/" + interp.element_name(e);
                    ElemId id = out.interp.add_element(name);
                    for (const auto& lab : interp.labels(e)) out.interp.add_label(id, lab);
                    if (step.inverted)
                        out.interp.add_edge(step.name, id, node.id);
                    else
                        out.interp.add_edge(step.name, node.id, id);
                    next.push_back({e, node.len + 1, id});
                }
            };
            for (const auto& role : interp.role_names()) {
                extend(Role{role, false});
                if (l.inverses) extend(Role{role, true});
            }
        }
        frontier = std::move(next);
    }
    return out;
}

Concept char_concept(LogicTag l, const Interpretation& interp, ElemId d, size_t k) {
    if (l.bottom) throw InvalidInput("characteristic concepts are defined for el and eli");
    std::map<std::pair<ElemId, size_t>, Concept> memo;
    std::function<Concept(ElemId, size_t)> build = [&](ElemId e, size_t depth) -> Concept {
        auto key = std::make_pair(e, depth);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        std::vector<Concept> parts;
        for (const auto& lab : interp.labels(e)) parts.push_back(concept_name(lab));
        if (depth > 0) {
            for (const auto& role : interp.role_names()) {
                for (ElemId s : interp.successors(role, e))
                    parts.push_back(
                        concept_exists(Role{role, false}, build(s, depth - 1)));
                if (l.inverses)
                    for (ElemId p : interp.predecessors(role, e))
                        parts.push_back(
                            concept_exists(Role{role, true}, build(p, depth - 1)));
            }
        }
        Concept c = concept_and(std::move(parts));
        memo.emplace(key, c);
        return c;
    };
    return build(d, k);
}

namespace {

struct TreeCheck {
    const CQ& cq;
    LogicTag logic;
    std::set<Term> terms;
    std::vector<Atom> roleAtoms;

    void collect() {
        for (const auto& a : cq.atoms()) {
            for (const auto& t : a.args) terms.insert(t);
            if (a.is_role()) roleAtoms.push_back(a);
        }
    }
};

} // namespace

Concept tree_concept(const TreeCQ& tree, LogicTag l) {
    if (tree.cq.empty()) throw InvalidInput("tree concept of an empty query");
    TreeCheck tc{tree.cq, l, {}, {}};
    tc.collect();
    if (!tc.terms.count(tree.root))
        throw InvalidInput("tree root does not occur in the query");

    auto inds = tree.cq.individuals();
    if (!inds.empty()) {
        if (inds.size() > 1 || tree.root.isVar || inds[0] != tree.root.name)
            throw InvalidInput(
                "a tree query may contain at most one individual, as its root");
    }

    // Undirected tree shape: connected with exactly |terms|-1 role atoms.
    if (tc.roleAtoms.size() + 1 != tc.terms.size())
        throw InvalidInput("query is not a tree (atom/term count mismatch)");
    std::set<Term> seen{tree.root};
    std::vector<Term> stack{tree.root};
    while (!stack.empty()) {
        Term cur = stack.back();
        stack.pop_back();
        for (const auto& a : tc.roleAtoms)
            for (size_t i = 0; i < 2; ++i)
                if (a.args[i] == cur && !seen.count(a.args[1 - i])) {
                    seen.insert(a.args[1 - i]);
                    stack.push_back(a.args[1 - i]);
                }
    }
    if (seen.size() != tc.terms.size())
        throw InvalidInput("query is not a tree (disconnected or cyclic)");

    if (!l.inverses) {
        // All edges must point away from the root.
        std::map<Term, size_t> indeg;
        for (const auto& a : tc.roleAtoms) ++indeg[a.args[1]];
        if (indeg.count(tree.root))
            throw InvalidInput("root of a directed tree query has an incoming atom");
        for (const auto& t : tc.terms)
            if (!(t == tree.root) && indeg[t] != 1)
                throw InvalidInput("query is not a directed tree");
    }

    std::function<Concept(const Term&, const Atom*)> build =
        [&](const Term& cur, const Atom* via) -> Concept {
        std::vector<Concept> parts;
        for (const auto& a : tree.cq.atoms())
            if (!a.is_role() && a.args[0] == cur) parts.push_back(concept_name(a.pred));
        for (const auto& a : tc.roleAtoms) {
            if (via && a == *via) continue;
            if (a.args[0] == cur)
                parts.push_back(concept_exists(Role{a.pred, false}, build(a.args[1], &a)));
            else if (a.args[1] == cur)
                parts.push_back(concept_exists(Role{a.pred, true}, build(a.args[0], &a)));
        }
        return concept_and(std::move(parts));
    };
    return build(tree.root, nullptr);
}

bool sim_image_satisfies(const ABox& abox,
                         const std::vector<std::pair<ElemId, ElemId>>& simPairs,
                         LogicTag l, const Interpretation& interp, const Concept& c,
                         const std::string& individual) {
    if (!audit_simulation(l, simPairs, abox.interp(), interp))
        throw InvalidInput("relation is not an " + to_string(l) + "-simulation");
    auto a = abox.interp().named_element(individual);
    if (!a) throw InvalidInput("unknown individual '" + individual + "'");
    DynBitset ext = eval_concept(c, interp);
    for (const auto& [d1, d2] : simPairs)
        if (d1 == *a && !ext.test(d2)) return false;
    return true;
}

Interpretation materialize_iasl(const ABox& abox,
                                const std::vector<std::pair<ElemId, ElemId>>& simPairs,
                                LogicTag l, const Interpretation& interp, size_t depth,
                                const Signature& sig) {
    if (!audit_simulation(l, simPairs, abox.interp(), interp))
        throw InvalidInput("relation is not an " + to_string(l) + "-simulation");

    const Interpretation& aInterp = abox.interp();
    Interpretation out;
    // Base part over the individuals: a label survives iff it holds at every
    // simulation partner; role edges are exactly the assertions.
    for (ElemId a = 0; a < aInterp.size(); ++a) {
        ElemId e = out.add_element(aInterp.element_name(a));
        out.set_named(aInterp.element_name(a), e);
        for (const auto& conceptName : sig.concepts) {
            bool everywhere = true;
            for (const auto& [d1, d2] : simPairs)
                if (d1 == a && !interp.has_label(d2, conceptName)) everywhere = false;
            if (everywhere) out.add_label(e, conceptName);
        }
    }
    for (const auto& [r, a, b] : abox.role_assertions())
        out.add_edge(r, *out.find_element(a), *out.find_element(b));

    // Per individual: unraveled product of its simulation partners.
    for (ElemId a = 0; a < aInterp.size(); ++a) {
        std::vector<PointedInterp> factors;
        for (const auto& [d1, d2] : simPairs)
            if (d1 == a) factors.push_back({interp, d2});
        PointedInterp prod = product(factors, sig);
        PointedInterp tree = unravel(l, prod.interp, prod.point, depth);

        std::string prefix = aInterp.element_name(a) + "^";
        std::vector<ElemId> map(tree.interp.size());
        for (ElemId e = 0; e < tree.interp.size(); ++e) {
            if (e == tree.point) {
                map[e] = *out.find_element(aInterp.element_name(a));
            } else {
                map[e] = out.add_element(prefix + tree.interp.element_name(e));
            }
            for (const auto& lab : tree.interp.labels(e)) out.add_label(map[e], lab);
        }
        for (const auto& role : tree.interp.role_names())
            for (ElemId from = 0; from < tree.interp.size(); ++from)
                for (ElemId to : tree.interp.successors(role, from))
                    out.add_edge(role, map[from], map[to]);
    }
    return out;
}

} // namespace hornfit
