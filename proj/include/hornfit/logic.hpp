#ifndef HORNFIT_LOGIC_HPP
#define HORNFIT_LOGIC_HPP

#include <string>

#include "hornfit/util.hpp"

namespace hornfit {

// The four ontology languages. `inverses` admits inverse roles, `bottom`
// admits the bottom concept (and makes simulations total).
struct LogicTag {
    bool inverses = false;
    bool bottom = false;

    constexpr bool operator==(const LogicTag& o) const {
        return inverses == o.inverses && bottom == o.bottom;
    }
    constexpr bool operator!=(const LogicTag& o) const { return !(*this == o); }

    // Same base language without bottom.
    constexpr LogicTag base() const { return LogicTag{inverses, false}; }
};

namespace logic {
inline constexpr LogicTag EL{false, false};
inline constexpr LogicTag ELBot{false, true};
inline constexpr LogicTag ELI{true, false};
inline constexpr LogicTag ELIBot{true, true};
} // namespace logic

inline std::string to_string(LogicTag l) {
    if (l.inverses) return l.bottom ? "elib" : "eli";
    return l.bottom ? "elb" : "el";
}

inline LogicTag logic_from_string(const std::string& s) {
    if (s == "el") return logic::EL;
    if (s == "elb") return logic::ELBot;
    if (s == "eli") return logic::ELI;
    if (s == "elib") return logic::ELIBot;
    throw InvalidInput("unknown logic tag '" + s + "' (expected el, elb, eli, elib)");
}

enum class QueryLang { Consistency, AQ, CQ, UCQ };

inline std::string to_string(QueryLang q) {
    switch (q) {
    case QueryLang::Consistency: return "consistency";
    case QueryLang::AQ: return "aq";
    case QueryLang::CQ: return "cq";
    case QueryLang::UCQ: return "ucq";
    }
    return "?";
}

inline QueryLang query_lang_from_string(const std::string& s) {
    if (s == "consistency") return QueryLang::Consistency;
    if (s == "aq") return QueryLang::AQ;
    if (s == "cq") return QueryLang::CQ;
    if (s == "ucq") return QueryLang::UCQ;
    throw InvalidInput("unknown query language '" + s +
                       "' (expected consistency, aq, cq, ucq)");
}

// A role name or its inverse. Double inversion is the identity.
struct Role {
    std::string name;
    bool inverted = false;

    Role() = default;
    Role(std::string n, bool inv = false) : name(std::move(n)), inverted(inv) {}

    Role inverse() const { return Role{name, !inverted}; }

    bool operator==(const Role& o) const {
        return name == o.name && inverted == o.inverted;
    }
    bool operator!=(const Role& o) const { return !(*this == o); }
    bool operator<(const Role& o) const {
        if (name != o.name) return name < o.name;
        return inverted < o.inverted;
    }

    std::string to_string() const { return inverted ? name + "-" : name; }
};

// Symbols introduced by the tool itself live under this prefix; instance
// files may not declare symbols starting with it.
inline constexpr char kReservedPrefix = '_';

inline bool is_reserved_symbol(const std::string& s) {
    return !s.empty() && s[0] == kReservedPrefix;
}

} // namespace hornfit

#endif
