#ifndef HORNFIT_ONTOLOGY_HPP
#define HORNFIT_ONTOLOGY_HPP

#include <vector>

#include "hornfit/concept.hpp"

namespace hornfit {

struct CI {
    Concept lhs;
    Concept rhs;

    bool operator==(const CI& o) const {
        return concept_eq(lhs, o.lhs) && concept_eq(rhs, o.rhs);
    }
};

inline int ci_compare(const CI& a, const CI& b) {
    if (int c = concept_compare(a.lhs, b.lhs); c != 0) return c;
    return concept_compare(a.rhs, b.rhs);
}

// A finite set of concept inclusions, kept sorted and duplicate-free.
class Ontology {
public:
    Ontology() = default;

    void add(const Concept& lhs, const Concept& rhs) { add(CI{lhs, rhs}); }
    void add(const CI& ci);
    void merge(const Ontology& o) {
        for (const auto& ci : o.cis_) add(ci);
    }

    const std::vector<CI>& cis() const { return cis_; }
    size_t size() const { return cis_.size(); }
    bool empty() const { return cis_.empty(); }

    Signature signature() const {
        Signature sig;
        for (const auto& ci : cis_) {
            collect_signature(ci.lhs, sig);
            collect_signature(ci.rhs, sig);
        }
        return sig;
    }

    bool uses_inverse() const {
        for (const auto& ci : cis_)
            if (ci.lhs->uses_inverse() || ci.rhs->uses_inverse()) return true;
        return false;
    }
    bool uses_sim() const {
        for (const auto& ci : cis_)
            if (ci.lhs->uses_sim() || ci.rhs->uses_sim()) return true;
        return false;
    }

    bool operator==(const Ontology& o) const { return cis_ == o.cis_; }

private:
    std::vector<CI> cis_;
};

inline void Ontology::add(const CI& ci) {
    auto pos = std::lower_bound(cis_.begin(), cis_.end(), ci,
                                [](const CI& a, const CI& b) { return ci_compare(a, b) < 0; });
    if (pos != cis_.end() && *pos == ci) return;
    cis_.insert(pos, ci);
}

} // namespace hornfit

#endif
