#ifndef HORNFIT_VARIATIONS_HPP
#define HORNFIT_VARIATIONS_HPP

#include "hornfit/construct.hpp"

namespace hornfit {

// A CQ obtained from `origin` by substituting variables with ABox individuals
// and identifying variables, whose non-ABox part is a disjoint union of
// trees (directed for EL, undirected for ELI) with at most one individual
// per tree, sitting at the root.
struct Variation {
    CQ cq; // canonical form
    CQ origin;
    LogicTag logic;
};

// All forest variations of p over the ABox, deduplicated modulo variable
// renaming, in canonical order.
std::vector<Variation> enum_forest_variations(const ABox& abox, const CQ& p, LogicTag l);

// Audit of the two forest conditions, usable independently of enumeration.
bool is_forest_variation(const ABox& abox, const CQ& candidate, LogicTag l);

// Rooted C(a) or existential \exists x C(x), extracted from one tree
// component of a variation minus the ABox.
struct ReductionQuery {
    bool rooted = false;
    Concept concept_;
    std::string individual; // rooted only

    ELQuery as_el_query() const {
        return rooted ? ELQuery::make_rooted(concept_, individual)
                      : ELQuery::make_existential(concept_);
    }
};

// One query per tree component of (variation minus ABox assertions);
// components lying fully inside the ABox contribute nothing.
std::vector<ReductionQuery> reduction_queries(const Variation& v, const ABox& abox);

} // namespace hornfit

#endif
