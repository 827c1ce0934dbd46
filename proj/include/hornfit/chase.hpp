#ifndef HORNFIT_CHASE_HPP
#define HORNFIT_CHASE_HPP

#include "hornfit/examples.hpp"
#include "hornfit/eval.hpp"

namespace hornfit {

// Output of the saturation: an interpretation over the individuals plus one
// representative element per distinct existential filler, or an
// inconsistency flag. When consistent it is a model of the ABox and the
// ontology and simulates into every such model, fixing the individuals.
struct UniversalModel {
    Interpretation interp;
    bool inconsistent = false;
};

// True iff every left-hand side is inverse-free (plain or with EL-tagged
// simulation quantifiers) and every right-hand side is a plain inverse-free
// concept — the fragment the saturation handles.
bool chaseable(const Ontology& o);

// Deterministic saturation of the ABox under the ontology: labels are added
// in place, existential requirements are routed to a unique representative
// per filler concept, bottom flags inconsistency.
UniversalModel chase_universal_model(const ABox& abox, const Ontology& o);

} // namespace hornfit

#endif
