#include "hornfit/sim.hpp"

#include <algorithm>
#include <map>

namespace hornfit {

std::vector<std::pair<ElemId, ElemId>> SimResult::pairs() const {
    std::vector<std::pair<ElemId, ElemId>> out;
    for (ElemId d1 = 0; d1 < rows.size(); ++d1)
        rows[d1].for_each([&](size_t d2) { out.emplace_back(d1, static_cast<ElemId>(d2)); });
    return out;
}

namespace {

// Label-consistent pairs: labels(d1) must be contained in labels(d2).
std::vector<DynBitset> atom_consistent(const Interpretation& from,
                                       const Interpretation& to) {
    std::map<std::string, DynBitset> columns;
    std::vector<DynBitset> rows(from.size(), DynBitset(to.size()));
    for (ElemId d1 = 0; d1 < from.size(); ++d1) {
        auto& row = rows[d1];
        row.set_all();
        for (const auto& l : from.labels(d1)) {
            auto it = columns.find(l);
            if (it == columns.end()) it = columns.emplace(l, to.label_column(l)).first;
            row &= it->second;
        }
    }
    return rows;
}

// One backward refinement step: keep (d1,d2) iff every forward (and, with
// inverses, backward) step of d1 can be matched by d2 into `cur`.
std::vector<DynBitset> refine(LogicTag l, const Interpretation& from,
                              const Interpretation& to,
                              const std::vector<DynBitset>& init,
                              const std::vector<DynBitset>& cur) {
    std::vector<DynBitset> next = init;
    for (ElemId d1 = 0; d1 < from.size(); ++d1) next[d1] &= cur[d1];

    auto constrain = [&](bool forward) {
        for (const auto& role : from.role_names()) {
            // allowed[e1] = targets with a matching step into cur[e1]
            std::map<ElemId, DynBitset> allowed;
            for (ElemId d1 = 0; d1 < from.size(); ++d1) {
                const auto& steps =
                    forward ? from.successors(role, d1) : from.predecessors(role, d1);
                for (ElemId e1 : steps) {
                    auto it = allowed.find(e1);
                    if (it == allowed.end()) {
                        DynBitset ok(to.size());
                        for (ElemId d2 = 0; d2 < to.size(); ++d2) {
                            const auto& tsteps = forward ? to.successors(role, d2)
                                                         : to.predecessors(role, d2);
                            for (ElemId e2 : tsteps)
                                if (cur[e1].test(e2)) {
                                    ok.set(d2);
                                    break;
                                }
                        }
                        it = allowed.emplace(e1, std::move(ok)).first;
                    }
                    next[d1] &= it->second;
                }
            }
        }
    };
    constrain(true);
    if (l.inverses) constrain(false);
    return next;
}

bool left_total(const std::vector<DynBitset>& rows) {
    for (const auto& r : rows)
        if (r.none()) return false;
    return true;
}

} // namespace

std::vector<DynBitset> k_refinement(LogicTag l, uint64_t k, const Interpretation& from,
                                    const Interpretation& to) {
    auto cur = atom_consistent(from, to);
    auto init = cur;
    for (uint64_t i = 0; i < k; ++i) {
        auto next = refine(l, from, to, init, cur);
        if (next == cur) break; // stabilized; all later stages coincide
        cur = std::move(next);
    }
    return cur;
}

SimResult max_simulation(LogicTag l, const Interpretation& from,
                         const Interpretation& to) {
    SimResult out;
    auto cur = atom_consistent(from, to);
    auto init = cur;
    size_t rounds = 0;
    for (;;) {
        auto next = refine(l, from, to, init, cur);
        if (next == cur) break;
        cur = std::move(next);
        ++rounds;
    }
    out.rows = std::move(cur);
    out.total = left_total(out.rows);
    out.rounds = rounds;
    return out;
}

bool simulates(LogicTag l, const Interpretation& from, ElemId d1,
               const Interpretation& to, ElemId d2) {
    auto s = max_simulation(l, from, to);
    if (l.bottom && !s.total) return false;
    return s.pair(d1, d2);
}

bool k_simulates(LogicTag l, uint64_t k, const Interpretation& from, ElemId d1,
                 const Interpretation& to, ElemId d2) {
    if (k == kOmega) return simulates(l, from, d1, to, d2);
    auto rows = k_refinement(l, k, from, to);
    if (l.bottom && !left_total(rows)) return false;
    return rows[d1].test(d2);
}

bool audit_simulation(LogicTag l, const std::vector<std::pair<ElemId, ElemId>>& pairs,
                      const Interpretation& from, const Interpretation& to) {
    std::vector<DynBitset> rows(from.size(), DynBitset(to.size()));
    for (const auto& [d1, d2] : pairs) {
        if (d1 >= from.size() || d2 >= to.size()) return false;
        rows[d1].set(d2);
    }
    for (const auto& [d1, d2] : pairs) {
        for (const auto& label : from.labels(d1))
            if (!to.has_label(d2, label)) return false;
        auto match = [&](bool forward) {
            for (const auto& role : from.role_names()) {
                const auto& steps =
                    forward ? from.successors(role, d1) : from.predecessors(role, d1);
                for (ElemId e1 : steps) {
                    bool found = false;
                    const auto& tsteps =
                        forward ? to.successors(role, d2) : to.predecessors(role, d2);
                    for (ElemId e2 : tsteps)
                        if (rows[e1].test(e2)) {
                            found = true;
                            break;
                        }
                    if (!found) return false;
                }
            }
            return true;
        };
        if (!match(true)) return false;
        if (l.inverses && !match(false)) return false;
    }
    if (l.bottom)
        for (const auto& r : rows)
            if (r.none()) return false;
    return true;
}

} // namespace hornfit
