#include "hornfit/query.hpp"

#include <algorithm>
#include <map>

namespace hornfit {

CQ::CQ(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    std::sort(atoms_.begin(), atoms_.end());
    atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
}

void CQ::add(Atom a) {
    auto pos = std::lower_bound(atoms_.begin(), atoms_.end(), a);
    if (pos != atoms_.end() && *pos == a) return;
    atoms_.insert(pos, std::move(a));
}

std::vector<std::string> CQ::variables() const {
    std::set<std::string> vs;
    for (const auto& a : atoms_)
        for (const auto& t : a.args)
            if (t.isVar) vs.insert(t.name);
    return {vs.begin(), vs.end()};
}

std::vector<std::string> CQ::individuals() const {
    std::set<std::string> is;
    for (const auto& a : atoms_)
        for (const auto& t : a.args)
            if (!t.isVar) is.insert(t.name);
    return {is.begin(), is.end()};
}

bool CQ::is_rooted() const {
    auto vs = variables();
    if (vs.empty()) return true;
    std::set<std::string> reached; // variables reached from individuals
    bool grown = true;
    while (grown) {
        grown = false;
        for (const auto& a : atoms_) {
            if (!a.is_role()) continue;
            const Term& s = a.args[0];
            const Term& t = a.args[1];
            auto connected = [&](const Term& x) {
                return !x.isVar || reached.count(x.name);
            };
            if (connected(s) && t.isVar && !reached.count(t.name)) {
                reached.insert(t.name);
                grown = true;
            }
            if (connected(t) && s.isVar && !reached.count(s.name)) {
                reached.insert(s.name);
                grown = true;
            }
        }
    }
    for (const auto& v : vs)
        if (!reached.count(v)) return false;
    return true;
}

namespace {

std::vector<Atom> rename_vars(const std::vector<Atom>& atoms,
                              const std::map<std::string, std::string>& m) {
    std::vector<Atom> out = atoms;
    for (auto& a : out)
        for (auto& t : a.args)
            if (t.isVar) t.name = m.at(t.name);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

CQ CQ::canonical() const {
    auto vs = variables();
    if (vs.empty()) return *this;
    // Exhaustive minimization is fine for the variable counts that occur in
    // practice; fall back to first-occurrence numbering beyond that.
    if (vs.size() <= 7) {
        std::vector<size_t> perm(vs.size());
        for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        std::optional<std::vector<Atom>> best;
        do {
            std::map<std::string, std::string> m;
            for (size_t i = 0; i < vs.size(); ++i)
                m[vs[i]] = "v" + std::to_string(perm[i]);
            auto cand = rename_vars(atoms_, m);
            if (!best || cand < *best) best = std::move(cand);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return CQ(std::move(*best));
    }
    std::map<std::string, std::string> m;
    size_t next = 0;
    for (const auto& a : atoms_)
        for (const auto& t : a.args)
            if (t.isVar && !m.count(t.name)) m[t.name] = "v" + std::to_string(next++);
    return CQ(rename_vars(atoms_, m));
}

Interpretation cq_interp(const CQ& q) {
    Interpretation out;
    auto elem = [&](const Term& t) {
        return out.ensure_element(t.isVar ? "?" + t.name : t.name);
    };
    for (const auto& a : q.atoms()) {
        if (a.is_role()) {
            out.add_edge(a.pred, elem(a.args[0]), elem(a.args[1]));
        } else {
            out.add_label(elem(a.args[0]), a.pred);
        }
    }
    for (const auto& a : q.atoms())
        for (const auto& t : a.args)
            if (!t.isVar) out.set_named(t.name, *out.find_element(t.name));
    return out;
}

namespace {

struct HomSearch {
    const CQ& q;
    const Interpretation& target;
    std::map<Term, ElemId> assignment;
    std::vector<std::string> order; // variable assignment order

    bool atom_holds_if_ready(const Atom& a) const {
        for (const auto& t : a.args)
            if (!assignment.count(t)) return true; // not yet decidable
        if (a.is_role())
            return target.has_edge(a.pred, assignment.at(a.args[0]),
                                   assignment.at(a.args[1]));
        return target.has_label(assignment.at(a.args[0]), a.pred);
    }

    bool consistent_after(const Term& justAssigned) const {
        for (const auto& a : q.atoms()) {
            bool touches = false;
            for (const auto& t : a.args) touches |= (t == justAssigned);
            if (touches && !atom_holds_if_ready(a)) return false;
        }
        return true;
    }

    bool extend(size_t idx) {
        if (idx == order.size()) return true;
        Term v = var(order[idx]);
        for (ElemId e = 0; e < target.size(); ++e) {
            assignment[v] = e;
            if (consistent_after(v) && extend(idx + 1)) return true;
            assignment.erase(v);
        }
        return false;
    }
};

} // namespace

std::optional<std::map<std::string, ElemId>> find_cq_hom(const CQ& q,
                                                         const Interpretation& target) {
    HomSearch s{q, target, {}, {}};
    for (const auto& name : q.individuals()) {
        auto e = target.named_element(name);
        if (!e)
            throw InvalidInput("query individual '" + name +
                               "' has no element in the target interpretation");
        s.assignment[ind(name)] = *e;
    }
    for (const auto& a : q.atoms())
        if (!s.atom_holds_if_ready(a)) return std::nullopt;

    // Assign variables adjacent to already-assigned terms first.
    auto vs = q.variables();
    std::set<std::string> placed;
    while (placed.size() < vs.size()) {
        std::string bestVar;
        int bestScore = -1;
        for (const auto& v : vs) {
            if (placed.count(v)) continue;
            int score = 0;
            for (const auto& a : q.atoms()) {
                bool hasV = false, hasGround = false;
                for (const auto& t : a.args) {
                    if (t.isVar && t.name == v) hasV = true;
                    if (!t.isVar || placed.count(t.name)) hasGround = true;
                }
                if (hasV && hasGround) ++score;
            }
            if (score > bestScore) {
                bestScore = score;
                bestVar = v;
            }
        }
        placed.insert(bestVar);
        s.order.push_back(bestVar);
    }

    if (!s.extend(0)) return std::nullopt;
    std::map<std::string, ElemId> out;
    for (const auto& [t, e] : s.assignment) out[t.to_string()] = e;
    return out;
}

bool satisfies_cq(const Interpretation& target, const CQ& q) {
    return find_cq_hom(q, target).has_value();
}

bool satisfies_ucq(const Interpretation& target, const UCQ& q) {
    for (const auto& d : q.disjuncts)
        if (satisfies_cq(target, d)) return true;
    return false;
}

} // namespace hornfit
