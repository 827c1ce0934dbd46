#ifndef HORNFIT_INTERPRETATION_HPP
#define HORNFIT_INTERPRETATION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hornfit/logic.hpp"
#include "hornfit/util.hpp"

namespace hornfit {

using ElemId = uint32_t;

// The finite set of concept and role names under consideration. Constructs
// that quantify over "all concept names" (maximal interpretation, the labels
// of unmatched individuals) are restricted to an explicit signature.
struct Signature {
    std::set<std::string> concepts;
    std::set<std::string> roles;

    Signature& merge(const Signature& o) {
        concepts.insert(o.concepts.begin(), o.concepts.end());
        roles.insert(o.roles.begin(), o.roles.end());
        return *this;
    }
};

// A finite interpretation: elements carry concept-name labels and are
// connected by role-name edges. Individual names map injectively onto
// elements; ABox-derived interpretations name every element.
class Interpretation {
public:
    Interpretation() = default;

    ElemId add_element(const std::string& name);
    ElemId ensure_element(const std::string& name);

    void add_label(ElemId e, const std::string& conceptName);
    bool add_edge(const std::string& role, ElemId from, ElemId to); // true if new
    void set_named(const std::string& individual, ElemId e);

    size_t size() const { return elements_.size(); }
    const std::string& element_name(ElemId e) const { return elements_[e]; }
    std::optional<ElemId> find_element(const std::string& name) const;

    const std::set<std::string>& labels(ElemId e) const { return labels_[e]; }
    bool has_label(ElemId e, const std::string& conceptName) const {
        return labels_[e].count(conceptName) != 0;
    }

    const std::vector<ElemId>& successors(const std::string& role, ElemId e) const;
    const std::vector<ElemId>& predecessors(const std::string& role, ElemId e) const;
    const std::vector<ElemId>& neighbors(const Role& r, ElemId e) const {
        return r.inverted ? predecessors(r.name, e) : successors(r.name, e);
    }
    bool has_edge(const std::string& role, ElemId from, ElemId to) const;

    // Sorted role names with at least one edge recorded.
    std::vector<std::string> role_names() const;
    // Sorted concept names with nonempty extension.
    std::vector<std::string> concept_names() const;
    size_t edge_count(const std::string& role) const;

    const std::map<std::string, ElemId>& named() const { return named_; }
    std::optional<ElemId> named_element(const std::string& individual) const;

    Signature signature() const;

    // Elements whose label set includes `conceptName`, as a bitset.
    DynBitset label_column(const std::string& conceptName) const;

    // Makes `role` connect every pair of elements.
    void saturate_role(const std::string& role);

    // Appends a disjoint copy of `o` (element names must not clash); returns
    // the id offset of the copied elements.
    ElemId append(const Interpretation& o);

    // Monotonically increases on every mutation; evaluation caches key on it.
    uint64_t version() const { return version_; }

    // Deterministic structural serialization; equal keys iff isomorphic via
    // the identity on element names.
    std::string canonical_key() const;

    bool operator==(const Interpretation& o) const {
        return canonical_key() == o.canonical_key();
    }

private:
    struct RoleAdj {
        std::vector<std::vector<ElemId>> succ;
        std::vector<std::vector<ElemId>> pred;
    };

    std::vector<std::string> elements_;
    std::map<std::string, ElemId> index_;
    std::vector<std::set<std::string>> labels_;
    std::map<std::string, RoleAdj> roles_;
    std::map<std::string, ElemId> named_;
    uint64_t version_ = 0;
};

// All interpretations share one empty adjacency row for absent roles.
const std::vector<ElemId>& empty_elem_list();

// Disjoint union; throws on element-name clashes.
Interpretation disjoint_union(const std::vector<const Interpretation*>& parts);

// Copy with every unnamed element prefixed (named elements keep their name),
// so several copies can live in one disjoint union.
Interpretation prefix_anonymous(const Interpretation& interp, const std::string& prefix);

} // namespace hornfit

#endif
