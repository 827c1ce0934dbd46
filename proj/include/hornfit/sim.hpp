#ifndef HORNFIT_SIM_HPP
#define HORNFIT_SIM_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "hornfit/interpretation.hpp"

namespace hornfit {

inline constexpr uint64_t kOmega = UINT64_MAX;

// The greatest relation satisfying (Atom) and (Rel) — plus (iRel) for the
// inverse-role logics — from one finite interpretation to another. For the
// bottom logics an L-simulation exists iff `total` is set; the relation
// itself is reported either way (the empty relation is a legitimate EL/ELI
// simulation).
struct SimResult {
    std::vector<DynBitset> rows; // rows[d1] = partners of d1 in the target
    bool total = false;          // every source element has a partner
    size_t rounds = 0;           // refinement rounds until the fixpoint

    bool pair(ElemId d1, ElemId d2) const { return rows[d1].test(d2); }
    std::vector<std::pair<ElemId, ElemId>> pairs() const;
    DynBitset image(ElemId d1) const { return rows[d1]; }
};

SimResult max_simulation(LogicTag l, const Interpretation& from,
                         const Interpretation& to);

// (from,d1) \preceq_L (to,d2): the pair lies in the greatest simulation and,
// for bottom logics, the totality condition holds.
bool simulates(LogicTag l, const Interpretation& from, ElemId d1,
               const Interpretation& to, ElemId d2);

// Bounded variant: k rounds of backward refinement from the label-consistent
// pairs. k = kOmega delegates to the unbounded fixpoint.
bool k_simulates(LogicTag l, uint64_t k, const Interpretation& from, ElemId d1,
                 const Interpretation& to, ElemId d2);

// The k-th refinement stage (also used by oracles in tests).
std::vector<DynBitset> k_refinement(LogicTag l, uint64_t k, const Interpretation& from,
                                    const Interpretation& to);

// Checks (Atom), (Rel), (iRel) and (Tot) directly against the definitions.
bool audit_simulation(LogicTag l, const std::vector<std::pair<ElemId, ElemId>>& pairs,
                      const Interpretation& from, const Interpretation& to);

} // namespace hornfit

#endif
