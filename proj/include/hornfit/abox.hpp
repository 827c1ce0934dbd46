#ifndef HORNFIT_ABOX_HPP
#define HORNFIT_ABOX_HPP

#include <array>
#include <set>
#include <string>
#include <utility>

#include "hornfit/interpretation.hpp"

namespace hornfit {

// A finite, nonempty set of assertions A(a) and r(a,b). Doubles as the
// interpretation whose elements are exactly its individuals.
class ABox {
public:
    ABox() = default;

    void assert_concept(const std::string& conceptName, const std::string& individual);
    void assert_role(const std::string& role, const std::string& from, const std::string& to);

    bool empty() const { return interp_.size() == 0; }
    size_t individual_count() const { return interp_.size(); }

    const std::set<std::pair<std::string, std::string>>& concept_assertions() const {
        return conceptAsserts_;
    }
    const std::set<std::array<std::string, 3>>& role_assertions() const {
        return roleAsserts_;
    }
    bool has_concept_assertion(const std::string& c, const std::string& a) const {
        return conceptAsserts_.count({c, a}) != 0;
    }
    bool has_role_assertion(const std::string& r, const std::string& a,
                            const std::string& b) const {
        return roleAsserts_.count({r, a, b}) != 0;
    }

    std::vector<std::string> individuals() const;
    bool has_individual(const std::string& a) const {
        return interp_.find_element(a).has_value();
    }

    const Interpretation& interp() const { return interp_; }
    Signature signature() const { return interp_.signature(); }

    // New ABox with every individual name prefixed.
    ABox renamed(const std::string& prefix) const;

    // Union of assertion sets; individual names must already be disjoint
    // unless identical assertions are intended.
    void merge(const ABox& o);

    bool operator==(const ABox& o) const {
        return conceptAsserts_ == o.conceptAsserts_ && roleAsserts_ == o.roleAsserts_;
    }

private:
    std::set<std::pair<std::string, std::string>> conceptAsserts_;
    std::set<std::array<std::string, 3>> roleAsserts_;
    Interpretation interp_;
};

} // namespace hornfit

#endif
