#ifndef HORNFIT_QUERY_HPP
#define HORNFIT_QUERY_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hornfit/abox.hpp"
#include "hornfit/concept.hpp"

namespace hornfit {

// A query term: an individual name or an existentially quantified variable.
struct Term {
    bool isVar = false;
    std::string name;

    bool operator==(const Term& o) const { return isVar == o.isVar && name == o.name; }
    bool operator<(const Term& o) const {
        if (isVar != o.isVar) return isVar < o.isVar; // individuals first
        return name < o.name;
    }
    std::string to_string() const { return isVar ? "?" + name : name; }
};

inline Term var(std::string n) { return Term{true, std::move(n)}; }
inline Term ind(std::string n) { return Term{false, std::move(n)}; }

// Concept atom A(t) or role atom r(t,t').
struct Atom {
    std::string pred;
    std::vector<Term> args; // size 1 or 2

    bool is_role() const { return args.size() == 2; }
    bool operator==(const Atom& o) const { return pred == o.pred && args == o.args; }
    bool operator<(const Atom& o) const {
        if (args.size() != o.args.size()) return args.size() < o.args.size();
        if (pred != o.pred) return pred < o.pred;
        return args < o.args;
    }
};

// A conjunctive query, kept as a sorted, duplicate-free atom set. All
// variables are existentially quantified. The empty CQ is the trivially true
// query; the concrete syntax rejects it, but constructions may produce it.
class CQ {
public:
    CQ() = default;
    explicit CQ(std::vector<Atom> atoms);

    void add(Atom a);

    const std::vector<Atom>& atoms() const { return atoms_; }
    bool empty() const { return atoms_.empty(); }

    std::vector<std::string> variables() const;
    std::vector<std::string> individuals() const;

    // True iff the single atom is A(a) with a an individual.
    bool is_atomic() const {
        return atoms_.size() == 1 && !atoms_[0].is_role() && !atoms_[0].args[0].isVar;
    }

    // Every variable reachable from an individual in the undirected atom graph.
    bool is_rooted() const;

    // Lexicographically minimal atom list over all variable renumberings
    // (variables become v0, v1, ...).
    CQ canonical() const;

    bool operator==(const CQ& o) const { return atoms_ == o.atoms_; }
    bool operator<(const CQ& o) const { return atoms_ < o.atoms_; }

private:
    std::vector<Atom> atoms_;
};

struct UCQ {
    std::vector<CQ> disjuncts;

    bool operator==(const UCQ& o) const { return disjuncts == o.disjuncts; }
};

// Rooted query C(a) or existential query \exists x C(x).
struct ELQuery {
    bool rooted = false;
    Concept concept_;
    std::string individual; // rooted only

    static ELQuery make_rooted(Concept c, std::string a) {
        return ELQuery{true, std::move(c), std::move(a)};
    }
    static ELQuery make_existential(Concept c) { return ELQuery{false, std::move(c), {}}; }
};

// A CQ as an interpretation: terms as elements, variables unnamed.
Interpretation cq_interp(const CQ& q);

// Backtracking search for a homomorphism from q into target that is the
// identity on individuals. Returns term-name -> element, or nullopt.
std::optional<std::map<std::string, ElemId>> find_cq_hom(const CQ& q,
                                                         const Interpretation& target);

bool satisfies_cq(const Interpretation& target, const CQ& q);
bool satisfies_ucq(const Interpretation& target, const UCQ& q);

} // namespace hornfit

#endif
