#include "hornfit/modelsearch.hpp"

#include <algorithm>

namespace hornfit {

namespace {

// Bit layout for one domain size: free label bits then free edge bits, in
// sorted (concept, element) / (role, from, to) order. Lookup tables map each
// slot to its bit index, or mark it forced.
struct Layout {
    static constexpr int kForcedOn = -1;
    static constexpr int kForcedOff = -2;

    std::vector<std::string> concepts, roles, elements; // individuals first
    size_t individuals = 0;
    size_t n = 0;

    std::vector<int> labelIndex; // concepts * n
    std::vector<int> edgeIndex;  // roles * n * n
    size_t freeBits = 0;

    int& label_slot(size_t c, size_t e) { return labelIndex[c * n + e]; }
    int label_slot(size_t c, size_t e) const { return labelIndex[c * n + e]; }
    int& edge_slot(size_t r, size_t f, size_t t) { return edgeIndex[(r * n + f) * n + t]; }
    int edge_slot(size_t r, size_t f, size_t t) const {
        return edgeIndex[(r * n + f) * n + t];
    }
};

Layout make_layout(const SearchSpec& spec, size_t n) {
    Layout out;
    out.concepts.assign(spec.sig.concepts.begin(), spec.sig.concepts.end());
    out.roles.assign(spec.sig.roles.begin(), spec.sig.roles.end());
    auto inds = spec.base->individuals();
    out.individuals = inds.size();
    out.n = n;
    out.elements = inds;
    for (size_t i = out.elements.size(); i < n; ++i)
        out.elements.push_back("_e" + std::to_string(i - out.individuals));

    auto indIdx = [&](const std::string& a) -> size_t {
        return static_cast<size_t>(std::lower_bound(inds.begin(), inds.end(), a) -
                                   inds.begin());
    };
    auto conceptIdx = [&](const std::string& c) -> long {
        auto it = std::lower_bound(out.concepts.begin(), out.concepts.end(), c);
        if (it == out.concepts.end() || *it != c) return -1;
        return it - out.concepts.begin();
    };
    auto roleIdx = [&](const std::string& r) -> long {
        auto it = std::lower_bound(out.roles.begin(), out.roles.end(), r);
        if (it == out.roles.end() || *it != r) return -1;
        return it - out.roles.begin();
    };

    out.labelIndex.assign(out.concepts.size() * n, 0);
    out.edgeIndex.assign(out.roles.size() * n * n, 0);

    for (const auto& [c, a] : spec.base->concept_assertions())
        if (long ci = conceptIdx(c); ci >= 0)
            out.label_slot(static_cast<size_t>(ci), indIdx(a)) = Layout::kForcedOn;
    for (const auto& [c, a] : spec.forbiddenLabels) {
        long ci = conceptIdx(c);
        auto it = std::lower_bound(inds.begin(), inds.end(), a);
        if (ci >= 0 && it != inds.end() && *it == a) {
            int& slot = out.label_slot(static_cast<size_t>(ci), indIdx(a));
            if (slot == Layout::kForcedOn)
                throw InvalidInput("label both asserted and forbidden: " + c + "(" + a + ")");
            slot = Layout::kForcedOff;
        }
    }
    for (const auto& [r, a, b] : spec.base->role_assertions())
        if (long ri = roleIdx(r); ri >= 0)
            out.edge_slot(static_cast<size_t>(ri), indIdx(a), indIdx(b)) = Layout::kForcedOn;

    size_t next = 0;
    for (auto& slot : out.labelIndex)
        if (slot == 0) slot = static_cast<int>(next++);
    for (auto& slot : out.edgeIndex)
        if (slot == 0) slot = static_cast<int>(next++);
    out.freeBits = next;
    return out;
}

struct Candidate {
    const Layout& lay;
    std::vector<uint8_t> bits;

    bool on(int slot) const {
        if (slot == Layout::kForcedOn) return true;
        if (slot == Layout::kForcedOff) return false;
        return bits[static_cast<size_t>(slot)] != 0;
    }

    // Reject assignments with a lexicographically smaller copy under some
    // permutation of the anonymous elements.
    bool lexmin_under_anon_permutations() const {
        size_t anon = lay.n - lay.individuals;
        if (anon < 2 || anon > 5) return true;
        std::vector<size_t> perm(anon);
        for (size_t i = 0; i < anon; ++i) perm[i] = i;
        while (std::next_permutation(perm.begin(), perm.end())) {
            auto mapped = [&](size_t e) {
                return e < lay.individuals ? e : lay.individuals + perm[e - lay.individuals];
            };
            int cmp = 0;
            for (size_t c = 0; c < lay.concepts.size() && cmp == 0; ++c)
                for (size_t e = 0; e < lay.n && cmp == 0; ++e) {
                    int slot = lay.label_slot(c, e);
                    if (slot < 0) continue; // forced slots are permutation-invariant
                    int orig = on(slot) ? 1 : 0;
                    int swapped = on(lay.label_slot(c, mapped(e))) ? 1 : 0;
                    cmp = swapped - orig;
                }
            for (size_t r = 0; r < lay.roles.size() && cmp == 0; ++r)
                for (size_t f = 0; f < lay.n && cmp == 0; ++f)
                    for (size_t t = 0; t < lay.n && cmp == 0; ++t) {
                        int slot = lay.edge_slot(r, f, t);
                        if (slot < 0) continue;
                        int orig = on(slot) ? 1 : 0;
                        int swapped = on(lay.edge_slot(r, mapped(f), mapped(t))) ? 1 : 0;
                        cmp = swapped - orig;
                    }
            if (cmp < 0) return false;
        }
        return true;
    }

    Interpretation build() const {
        Interpretation out;
        for (const auto& name : lay.elements) out.add_element(name);
        for (size_t e = 0; e < lay.individuals; ++e)
            out.set_named(lay.elements[e], static_cast<ElemId>(e));
        for (size_t c = 0; c < lay.concepts.size(); ++c)
            for (size_t e = 0; e < lay.n; ++e)
                if (on(lay.label_slot(c, e)))
                    out.add_label(static_cast<ElemId>(e), lay.concepts[c]);
        for (size_t r = 0; r < lay.roles.size(); ++r)
            for (size_t f = 0; f < lay.n; ++f)
                for (size_t t = 0; t < lay.n; ++t)
                    if (on(lay.edge_slot(r, f, t)))
                        out.add_edge(lay.roles[r], static_cast<ElemId>(f),
                                     static_cast<ElemId>(t));
        return out;
    }
};

} // namespace

SearchOutcome search_extensions(const SearchSpec& spec,
                                const std::function<bool(const Interpretation&)>& visit) {
    if (!spec.base || spec.base->empty())
        throw InvalidInput("model search needs a nonempty base ABox");
    size_t lo = spec.base->individual_count();
    size_t hi = std::max(spec.maxSize, lo);
    bool overflow = false;
    for (size_t n = lo; n <= hi; ++n) {
        Layout lay = make_layout(spec, n);
        if (lay.freeBits > spec.bitBudget) {
            overflow = true;
            continue;
        }
        Candidate cand{lay, std::vector<uint8_t>(lay.freeBits, 0)};
        bool done = false;
        while (!done) {
            if (cand.lexmin_under_anon_permutations())
                if (visit(cand.build())) return SearchOutcome::Found;
            done = true;
            for (size_t i = lay.freeBits; i-- > 0;) {
                if (!cand.bits[i]) {
                    cand.bits[i] = 1;
                    std::fill(cand.bits.begin() + static_cast<long>(i) + 1, cand.bits.end(),
                              uint8_t{0});
                    done = false;
                    break;
                }
            }
        }
    }
    return overflow ? SearchOutcome::Overflow : SearchOutcome::Exhausted;
}

} // namespace hornfit
