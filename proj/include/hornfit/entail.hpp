#ifndef HORNFIT_ENTAIL_HPP
#define HORNFIT_ENTAIL_HPP

#include "hornfit/chase.hpp"
#include "hornfit/modelsearch.hpp"
#include "hornfit/variations.hpp"

namespace hornfit {

// Rooted or existential concept queries against the saturation model.
// Inconsistency entails everything.
bool entails_el_query(const ABox& abox, const Ontology& o, const ELQuery& q);

// UCQ entailment for the inverse-free logics: true iff the saturation is
// inconsistent or some forest variation of some disjunct has all its
// reduction queries satisfied in the saturation model.
bool ucq_entailed_by_universal(const ABox& abox, const Ontology& o, const UCQ& q,
                               LogicTag l);

enum class Entailment { Entailed, NotEntailed, Unknown };

struct BoundedParams {
    size_t chaseDepth = 6;    // tree-chase expansion depth
    size_t chaseNodeCap = 4000;
    size_t modelBound = 4;    // countermodel search domain size
    size_t bitBudget = 26;
};

// Sound two-sided procedure for the inverse-role logics: a depth-bounded
// tree chase (no representative reuse) witnesses entailment, an exhaustive
// bounded countermodel search witnesses non-entailment, otherwise Unknown.
Entailment eli_entailment_bounded(const ABox& abox, const Ontology& o, const UCQ& q,
                                  const BoundedParams& params = {});
Entailment eli_entailment_bounded(const ABox& abox, const Ontology& o, const ELQuery& q,
                                  const BoundedParams& params = {});

enum class Consistency { Consistent, Inconsistent, Unknown };

Consistency eli_consistency_bounded(const ABox& abox, const Ontology& o,
                                    const BoundedParams& params = {});

// The depth-bounded tree chase itself (exposed for tests). `complete` means
// the chase reached a fixpoint without hitting a bound, so the result is an
// actual model.
struct TreeChase {
    Interpretation interp;
    bool inconsistent = false;
    bool complete = false;
};

TreeChase eli_tree_chase(const ABox& abox, const Ontology& o, size_t depth,
                         size_t nodeCap);

} // namespace hornfit

#endif
