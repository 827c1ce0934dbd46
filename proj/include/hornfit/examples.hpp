#ifndef HORNFIT_EXAMPLES_HPP
#define HORNFIT_EXAMPLES_HPP

#include <string>
#include <vector>

#include "hornfit/abox.hpp"
#include "hornfit/query.hpp"

namespace hornfit {

// One labeled example: an ABox plus a Boolean query. In consistency mode the
// query is absent (empty disjunct list).
struct Example {
    ABox abox;
    UCQ query;
};

struct ExampleCollection {
    LogicTag logic;
    QueryLang lang = QueryLang::Consistency;
    std::vector<Example> positives;
    std::vector<Example> negatives;
    Signature declared; // optional extra symbols from the instance file

    // Symbols occurring anywhere in the collection, plus the declared ones.
    Signature signature() const;
};

// Prefixes every individual with its example index ("p0.", "n1.", ...), so
// individual names are pairwise disjoint across examples. Applied once at
// ingestion; serialization strips the prefixes again.
ExampleCollection normalize_individuals(const ExampleCollection& ec);

// Checks the structural invariants: ABoxes nonempty, query individuals occur
// in the paired ABox, query shape matches the query language, concepts and
// queries respect the logic. Throws InvalidInput on violation.
void validate(const ExampleCollection& ec);

inline std::string positive_prefix(size_t i) { return "p" + std::to_string(i) + "."; }
inline std::string negative_prefix(size_t i) { return "n" + std::to_string(i) + "."; }

} // namespace hornfit

#endif
