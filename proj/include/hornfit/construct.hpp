#ifndef HORNFIT_CONSTRUCT_HPP
#define HORNFIT_CONSTRUCT_HPP

#include "hornfit/eval.hpp"
#include "hornfit/query.hpp"
#include "hornfit/sim.hpp"

namespace hornfit {

struct PointedInterp {
    Interpretation interp;
    ElemId point = 0;
};

// Component-wise direct product. The empty product is the one-element
// interpretation with every signature concept and a loop for every
// signature role.
PointedInterp product(const std::vector<PointedInterp>& factors, const Signature& sig);

// Prefix of the (generally infinite) unraveling: all paths of at most
// `depth` role steps starting at d. EL unravelings never step backwards.
PointedInterp unravel(LogicTag l, const Interpretation& interp, ElemId d, size_t depth);

// Characteristic concept of role depth k for d: its extension in any J is
// exactly the set of elements that k-simulate (interp, d). l must be EL or
// ELI; shared subconcepts are interned, so the result is a DAG.
Concept char_concept(LogicTag l, const Interpretation& interp, ElemId d, size_t k);

// A connected tree-shaped CQ with a designated root. For EL all role atoms
// point away from the root; for ELI the underlying undirected graph is a
// tree. If an individual occurs it is unique and must be the root.
struct TreeCQ {
    CQ cq;
    Term root;
};

// Concept whose extension is exactly the homomorphic images of the tree;
// linear in the number of atoms. Throws InvalidInput on non-tree input.
Concept tree_concept(const TreeCQ& tree, LogicTag l);

// Decides satisfaction of C(a) in the unraveled-product model induced by an
// L-simulation S from the ABox to `interp`, without materializing it: the
// answer is whether the whole S-image of a lies inside C.
bool sim_image_satisfies(const ABox& abox,
                         const std::vector<std::pair<ElemId, ElemId>>& simPairs,
                         LogicTag l, const Interpretation& interp, const Concept& c,
                         const std::string& individual);

// Bounded materialization of that model, for cross-checking only.
Interpretation materialize_iasl(const ABox& abox,
                                const std::vector<std::pair<ElemId, ElemId>>& simPairs,
                                LogicTag l, const Interpretation& interp, size_t depth,
                                const Signature& sig);

} // namespace hornfit

#endif
