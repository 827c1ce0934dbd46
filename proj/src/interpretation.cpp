#include "hornfit/interpretation.hpp"

#include <algorithm>
#include <sstream>

namespace hornfit {

const std::vector<ElemId>& empty_elem_list() {
    static const std::vector<ElemId> empty;
    return empty;
}

ElemId Interpretation::add_element(const std::string& name) {
    if (index_.count(name))
        throw InvalidInput("duplicate element name '" + name + "'");
    ElemId id = static_cast<ElemId>(elements_.size());
    elements_.push_back(name);
    index_.emplace(name, id);
    labels_.emplace_back();
    for (auto& [role, adj] : roles_) {
        (void)role;
        adj.succ.emplace_back();
        adj.pred.emplace_back();
    }
    ++version_;
    return id;
}

ElemId Interpretation::ensure_element(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    return add_element(name);
}

void Interpretation::add_label(ElemId e, const std::string& conceptName) {
    if (labels_[e].insert(conceptName).second) ++version_;
}

bool Interpretation::add_edge(const std::string& role, ElemId from, ElemId to) {
    auto it = roles_.find(role);
    if (it == roles_.end()) {
        it = roles_.emplace(role, RoleAdj{}).first;
        it->second.succ.resize(elements_.size());
        it->second.pred.resize(elements_.size());
    }
    auto& succ = it->second.succ[from];
    auto pos = std::lower_bound(succ.begin(), succ.end(), to);
    if (pos != succ.end() && *pos == to) return false;
    succ.insert(pos, to);
    auto& pred = it->second.pred[to];
    pred.insert(std::lower_bound(pred.begin(), pred.end(), from), from);
    ++version_;
    return true;
}

void Interpretation::set_named(const std::string& individual, ElemId e) {
    for (const auto& [ind, el] : named_)
        if (el == e && ind != individual)
            throw InvalidInput("element '" + elements_[e] + "' already names individual '" +
                               ind + "'");
    auto it = named_.find(individual);
    if (it != named_.end() && it->second != e)
        throw InvalidInput("individual '" + individual + "' already bound");
    named_[individual] = e;
    ++version_;
}

std::optional<ElemId> Interpretation::find_element(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

const std::vector<ElemId>& Interpretation::successors(const std::string& role,
                                                      ElemId e) const {
    auto it = roles_.find(role);
    if (it == roles_.end()) return empty_elem_list();
    return it->second.succ[e];
}

const std::vector<ElemId>& Interpretation::predecessors(const std::string& role,
                                                        ElemId e) const {
    auto it = roles_.find(role);
    if (it == roles_.end()) return empty_elem_list();
    return it->second.pred[e];
}

bool Interpretation::has_edge(const std::string& role, ElemId from, ElemId to) const {
    const auto& s = successors(role, from);
    return std::binary_search(s.begin(), s.end(), to);
}

std::vector<std::string> Interpretation::role_names() const {
    std::vector<std::string> out;
    for (const auto& [role, adj] : roles_) {
        bool nonempty = false;
        for (const auto& s : adj.succ)
            if (!s.empty()) {
                nonempty = true;
                break;
            }
        if (nonempty) out.push_back(role);
    }
    return out;
}

std::vector<std::string> Interpretation::concept_names() const {
    std::set<std::string> names;
    for (const auto& ls : labels_) names.insert(ls.begin(), ls.end());
    return {names.begin(), names.end()};
}

size_t Interpretation::edge_count(const std::string& role) const {
    auto it = roles_.find(role);
    if (it == roles_.end()) return 0;
    size_t n = 0;
    for (const auto& s : it->second.succ) n += s.size();
    return n;
}

std::optional<ElemId> Interpretation::named_element(const std::string& individual) const {
    auto it = named_.find(individual);
    if (it == named_.end()) return std::nullopt;
    return it->second;
}

Signature Interpretation::signature() const {
    Signature sig;
    for (const auto& ls : labels_) sig.concepts.insert(ls.begin(), ls.end());
    for (const auto& r : role_names()) sig.roles.insert(r);
    return sig;
}

DynBitset Interpretation::label_column(const std::string& conceptName) const {
    DynBitset col(size());
    for (ElemId e = 0; e < size(); ++e)
        if (labels_[e].count(conceptName)) col.set(e);
    return col;
}

void Interpretation::saturate_role(const std::string& role) {
    for (ElemId a = 0; a < size(); ++a)
        for (ElemId b = 0; b < size(); ++b) add_edge(role, a, b);
}

ElemId Interpretation::append(const Interpretation& o) {
    ElemId offset = static_cast<ElemId>(size());
    for (ElemId e = 0; e < o.size(); ++e) {
        ElemId id = add_element(o.element_name(e));
        for (const auto& l : o.labels(e)) add_label(id, l);
    }
    for (const auto& [role, adj] : o.roles_)
        for (ElemId from = 0; from < o.size(); ++from)
            for (ElemId to : adj.succ[from])
                add_edge(role, offset + from, offset + to);
    for (const auto& [ind, el] : o.named_) set_named(ind, offset + el);
    return offset;
}

std::string Interpretation::canonical_key() const {
    // Element names sorted, then labels and edges keyed by name.
    std::vector<std::string> names(elements_);
    std::sort(names.begin(), names.end());
    std::ostringstream out;
    for (const auto& n : names) {
        ElemId e = *find_element(n);
        out << "e " << n << ";";
        for (const auto& l : labels_[e]) out << " " << l;
        out << ";";
    }
    for (const auto& [role, adj] : roles_) {
        std::vector<std::pair<std::string, std::string>> edges;
        for (ElemId from = 0; from < size(); ++from)
            for (ElemId to : adj.succ[from])
                edges.emplace_back(elements_[from], elements_[to]);
        if (edges.empty()) continue;
        std::sort(edges.begin(), edges.end());
        out << "r " << role << ";";
        for (const auto& [f, t] : edges) out << " " << f << ">" << t;
        out << ";";
    }
    for (const auto& [ind, el] : named_) out << "n " << ind << "=" << elements_[el] << ";";
    return out.str();
}

Interpretation disjoint_union(const std::vector<const Interpretation*>& parts) {
    Interpretation u;
    for (const auto* p : parts) u.append(*p);
    return u;
}

Interpretation prefix_anonymous(const Interpretation& interp, const std::string& prefix) {
    std::set<ElemId> namedElems;
    for (const auto& [ind, el] : interp.named()) {
        (void)ind;
        namedElems.insert(el);
    }
    Interpretation out;
    for (ElemId e = 0; e < interp.size(); ++e) {
        std::string name = interp.element_name(e);
        if (!namedElems.count(e)) name = prefix + name;
        ElemId id = out.add_element(name);
        for (const auto& l : interp.labels(e)) out.add_label(id, l);
    }
    for (const auto& role : interp.role_names())
        for (ElemId from = 0; from < interp.size(); ++from)
            for (ElemId to : interp.successors(role, from)) out.add_edge(role, from, to);
    for (const auto& [ind, el] : interp.named()) out.set_named(ind, el);
    return out;
}

} // namespace hornfit
