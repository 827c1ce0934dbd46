#include "hornfit/abox.hpp"

namespace hornfit {

void ABox::assert_concept(const std::string& conceptName, const std::string& individual) {
    if (!conceptAsserts_.emplace(conceptName, individual).second) return;
    ElemId e = interp_.ensure_element(individual);
    interp_.set_named(individual, e);
    interp_.add_label(e, conceptName);
}

void ABox::assert_role(const std::string& role, const std::string& from,
                       const std::string& to) {
    if (!roleAsserts_.insert({role, from, to}).second) return;
    ElemId a = interp_.ensure_element(from);
    interp_.set_named(from, a);
    ElemId b = interp_.ensure_element(to);
    interp_.set_named(to, b);
    interp_.add_edge(role, a, b);
}

std::vector<std::string> ABox::individuals() const {
    std::vector<std::string> out;
    out.reserve(interp_.named().size());
    for (const auto& [ind, el] : interp_.named()) {
        (void)el;
        out.push_back(ind);
    }
    return out;
}

ABox ABox::renamed(const std::string& prefix) const {
    ABox out;
    for (const auto& [c, a] : conceptAsserts_) out.assert_concept(c, prefix + a);
    for (const auto& [r, a, b] : roleAsserts_) out.assert_role(r, prefix + a, prefix + b);
    return out;
}

void ABox::merge(const ABox& o) {
    for (const auto& [c, a] : o.conceptAsserts_) assert_concept(c, a);
    for (const auto& [r, a, b] : o.roleAsserts_) assert_role(r, a, b);
}

} // namespace hornfit
