#include "hornfit/variations.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hornfit {

namespace {

// Atoms of the variation that are not ABox assertions; their multigraph is
// what has to be a forest.
struct AnonPart {
    std::vector<Atom> atoms;       // role atoms with at least one variable,
                                   // plus concept atoms not asserted in A
    std::vector<Atom> roleAtoms;   // the role atoms among them
};

AnonPart anonymous_part(const ABox& abox, const CQ& q) {
    AnonPart out;
    for (const auto& a : q.atoms()) {
        if (a.is_role()) {
            if (!a.args[0].isVar && !a.args[1].isVar) continue; // condition 1 atom
            out.atoms.push_back(a);
            out.roleAtoms.push_back(a);
        } else {
            if (!a.args[0].isVar &&
                abox.has_concept_assertion(a.pred, a.args[0].name))
                continue;
            out.atoms.push_back(a);
        }
    }
    return out;
}

struct UnionFind {
    std::map<Term, Term> parent;
    Term find(const Term& t) {
        auto it = parent.find(t);
        if (it == parent.end()) {
            parent[t] = t;
            return t;
        }
        if (it->second == t) return t;
        Term root = find(it->second);
        parent[t] = root;
        return root;
    }
    // false if the edge closes a cycle
    bool unite(const Term& a, const Term& b) {
        Term ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[ra] = rb;
        return true;
    }
};

} // namespace

bool is_forest_variation(const ABox& abox, const CQ& candidate, LogicTag l) {
    // Condition 1: role atoms between individuals must be asserted.
    for (const auto& a : candidate.atoms()) {
        if (!a.is_role()) continue;
        if (!a.args[0].isVar && !a.args[1].isVar &&
            !abox.has_role_assertion(a.pred, a.args[0].name, a.args[1].name))
            return false;
    }
    for (const auto& name : candidate.individuals())
        if (!abox.has_individual(name)) return false;

    AnonPart anon = anonymous_part(abox, candidate);

    // The anonymous multigraph must be acyclic; every role atom is its own
    // edge, so parallel atoms and self-loops count as cycles.
    UnionFind uf;
    for (const auto& a : anon.roleAtoms)
        if (!uf.unite(a.args[0], a.args[1])) return false;
    for (const auto& a : anon.atoms)
        uf.find(a.args[0]); // register label-only vertices

    // At most one individual per tree.
    std::map<Term, int> indCount;
    for (const auto& [t, p] : uf.parent) {
        (void)p;
        if (!t.isVar) ++indCount[uf.find(t)];
    }
    for (const auto& [root, n] : indCount) {
        (void)root;
        if (n > 1) return false;
    }

    if (!l.inverses) {
        // Directed trees: at most one incoming atom per variable, none into
        // individuals or roots.
        std::map<Term, size_t> indeg;
        for (const auto& a : anon.roleAtoms) ++indeg[a.args[1]];
        for (const auto& [t, n] : indeg) {
            if (!t.isVar && n > 0) return false;
            if (n > 1) return false;
        }
    }
    return true;
}

std::vector<Variation> enum_forest_variations(const ABox& abox, const CQ& p, LogicTag l) {
    for (const auto& name : p.individuals())
        if (!abox.has_individual(name))
            throw InvalidInput("query individual '" + name + "' not in the ABox");

    std::vector<std::string> vars = p.variables();
    std::vector<std::string> inds = abox.individuals();

    std::vector<Variation> out;
    std::set<CQ> seen;

    // Restricted growth strings enumerate the partitions of the variables;
    // each block is then kept as one variable or replaced by an individual.
    size_t m = vars.size();
    std::vector<size_t> rgs(m, 0);
    auto emit_partition = [&](const std::vector<size_t>& blocks, size_t blockCount) {
        std::vector<int> choice(blockCount, -1); // -1 keep, else individual index
        for (;;) {
            std::vector<Atom> atoms;
            for (const auto& a : p.atoms()) {
                Atom b = a;
                for (auto& t : b.args) {
                    if (!t.isVar) continue;
                    size_t blk = blocks[std::lower_bound(vars.begin(), vars.end(), t.name) -
                                        vars.begin()];
                    if (choice[blk] < 0)
                        t = var("b" + std::to_string(blk));
                    else
                        t = ind(inds[static_cast<size_t>(choice[blk])]);
                }
                atoms.push_back(std::move(b));
            }
            CQ cand(std::move(atoms));
            if (is_forest_variation(abox, cand, l)) {
                CQ canon = cand.canonical();
                if (seen.insert(canon).second) out.push_back({canon, p, l});
            }
            // odometer over block choices
            size_t i = 0;
            while (i < blockCount) {
                if (++choice[i] < static_cast<int>(inds.size())) break;
                choice[i] = -1;
                ++i;
            }
            if (i == blockCount) break;
        }
    };

    if (m == 0) {
        emit_partition({}, 0);
    } else {
        for (;;) {
            size_t blockCount = *std::max_element(rgs.begin(), rgs.end()) + 1;
            emit_partition(rgs, blockCount);
            // next restricted growth string
            size_t i = m;
            for (;;) {
                if (i == 1) goto done;
                --i;
                size_t cap = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
                if (rgs[i] < cap) {
                    ++rgs[i];
                    std::fill(rgs.begin() + i + 1, rgs.end(), 0);
                    break;
                }
                rgs[i] = 0;
            }
        }
    }
done:
    std::sort(out.begin(), out.end(),
              [](const Variation& a, const Variation& b) { return a.cq < b.cq; });
    return out;
}

std::vector<ReductionQuery> reduction_queries(const Variation& v, const ABox& abox) {
    AnonPart anon = anonymous_part(abox, v.cq);
    if (anon.atoms.empty()) return {};

    UnionFind uf;
    for (const auto& a : anon.roleAtoms)
        if (!uf.unite(a.args[0], a.args[1]))
            throw InvalidInput("variation is not forest-shaped");
    for (const auto& a : anon.atoms) uf.find(a.args[0]);

    std::map<Term, std::vector<Atom>> components; // keyed by representative
    for (const auto& a : anon.atoms) components[uf.find(a.args[0])].push_back(a);

    // Per component: root at the individual if present; otherwise the unique
    // source for EL trees, the least term for ELI trees.
    std::vector<std::pair<Term, TreeCQ>> trees;
    for (auto& [rep, atoms] : components) {
        (void)rep;
        std::set<Term> terms;
        std::map<Term, size_t> indeg;
        for (const auto& a : atoms) {
            for (const auto& t : a.args) terms.insert(t);
            if (a.is_role()) ++indeg[a.args[1]];
        }
        Term root = *terms.begin(); // individuals sort before variables
        if (!root.isVar) {
            for (const auto& t : terms)
                if (!t.isVar && !(t == root))
                    throw InvalidInput("variation component has two individuals");
        } else if (!v.logic.inverses) {
            for (const auto& t : terms)
                if (indeg.find(t) == indeg.end()) {
                    root = t;
                    break;
                }
        }
        trees.push_back({root, TreeCQ{CQ(atoms), root}});
    }
    std::sort(trees.begin(), trees.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<ReductionQuery> out;
    for (auto& [root, tree] : trees) {
        Concept c = tree_concept(tree, v.logic);
        if (root.isVar)
            out.push_back({false, c, ""});
        else
            out.push_back({true, c, root.name});
    }
    return out;
}

} // namespace hornfit
