#ifndef HORNFIT_EVAL_HPP
#define HORNFIT_EVAL_HPP

#include <unordered_map>

#include "hornfit/concept.hpp"
#include "hornfit/ontology.hpp"

namespace hornfit {

// Concept evaluation over one interpretation, with per-node caching.
// Simulation quantifiers delegate to the greatest-simulation fixpoint.
class Evaluator {
public:
    explicit Evaluator(const Interpretation& interp)
        : interp_(interp), version_(interp.version()) {}

    const DynBitset& eval(const Concept& c);
    bool holds_at(const Concept& c, ElemId e) { return eval(c).test(e); }

    const Interpretation& interp() const { return interp_; }

private:
    const Interpretation& interp_;
    uint64_t version_;
    std::unordered_map<const ConceptNode*, DynBitset> memo_;
};

DynBitset eval_concept(const Concept& c, const Interpretation& interp);

bool is_model(const Interpretation& interp, const Ontology& o);
bool satisfies_ci(const Interpretation& interp, const CI& ci);

// Model of the ABox read as assertions: labels and edges present.
bool models_abox(const Interpretation& interp, const class ABox& abox);

} // namespace hornfit

#endif
