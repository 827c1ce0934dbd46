#ifndef HORNFIT_CONCEPT_HPP
#define HORNFIT_CONCEPT_HPP

#include <memory>
#include <string>
#include <vector>

#include "hornfit/interpretation.hpp"
#include "hornfit/logic.hpp"

namespace hornfit {

class ConceptNode;
using Concept = std::shared_ptr<const ConceptNode>;

// Immutable, interned concept AST. Conjunctions are flattened, deduplicated
// and sorted on construction, so structural equality is pointer equality.
class ConceptNode {
public:
    enum class Kind { Top, Bot, Name, And, Exists, Sim };

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }            // Name
    const std::vector<Concept>& conjuncts() const { return kids_; } // And
    const Role& role() const { return role_; }                   // Exists
    const Concept& child() const { return kids_[0]; }            // Exists

    LogicTag sim_tag() const { return simTag_; }                 // Sim (never bottom)
    const Interpretation& sim_interp() const { return *simInterp_; }
    ElemId sim_point() const { return simPoint_; }

    size_t hash() const { return hash_; }
    int role_depth() const { return roleDepth_; }

    bool uses_bot() const { return usesBot_; }
    bool uses_inverse() const { return usesInverse_; }
    bool uses_sim() const { return usesSim_; }

    // Structural total order; used for canonical conjunct sorting.
    static int compare(const ConceptNode& a, const ConceptNode& b);

private:
    friend class ConceptFactory;
    friend Concept concept_top();
    friend Concept concept_bot();
    friend Concept concept_name(const std::string&);
    friend Concept concept_and(std::vector<Concept>);
    friend Concept concept_exists(const Role&, const Concept&);
    friend Concept concept_sim(LogicTag, Interpretation, ElemId);
    ConceptNode() = default;

    Kind kind_ = Kind::Top;
    std::string name_;
    std::vector<Concept> kids_;
    Role role_;
    std::shared_ptr<const Interpretation> simInterp_;
    ElemId simPoint_ = 0;
    LogicTag simTag_;
    std::string simKey_; // canonical payload key, for ordering and hashing

    size_t hash_ = 0;
    int roleDepth_ = 0;
    bool usesBot_ = false;
    bool usesInverse_ = false;
    bool usesSim_ = false;
};

// Interned constructors.
Concept concept_top();
Concept concept_bot();
Concept concept_name(const std::string& name);
Concept concept_and(std::vector<Concept> parts);
Concept concept_and(const Concept& a, const Concept& b);
Concept concept_exists(const Role& r, const Concept& c);
// tag must be EL or ELI; the payload interpretation must be nonempty.
Concept concept_sim(LogicTag tag, Interpretation interp, ElemId point);

inline bool concept_eq(const Concept& a, const Concept& b) { return a.get() == b.get(); }
int concept_compare(const Concept& a, const Concept& b);

// True iff c stays inside the given language. Simulation quantifiers are
// admitted only when allowSim is set (the "^sim" extension).
bool concept_in_logic(const Concept& c, LogicTag l, bool allowSim = false);

// Names occurring in c, including those inside quantifier payloads.
void collect_signature(const Concept& c, Signature& sig);

struct ConceptPtrHash {
    size_t operator()(const Concept& c) const { return c->hash(); }
};
struct ConceptPtrEq {
    bool operator()(const Concept& a, const Concept& b) const { return a.get() == b.get(); }
};

} // namespace hornfit

#endif
