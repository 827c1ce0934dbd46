#ifndef HORNFIT_MODELSEARCH_HPP
#define HORNFIT_MODELSEARCH_HPP

#include <functional>

#include "hornfit/abox.hpp"

namespace hornfit {

// Exhaustive enumeration of the finite interpretations that extend an ABox:
// the individuals with their asserted labels and edges, up to maxSize
// elements in total, arbitrary additional labels and edges over the given
// signature. Canonical order; candidates that are not lexicographically
// minimal under permutations of the anonymous elements are skipped.
struct SearchSpec {
    Signature sig;
    const ABox* base = nullptr;
    size_t maxSize = 3;
    // Label bits pinned off, e.g. by a query the model must refute.
    std::set<std::pair<std::string, std::string>> forbiddenLabels; // (concept, individual)
    size_t bitBudget = 26; // refuse to enumerate beyond 2^bitBudget candidates
};

enum class SearchOutcome {
    Found,     // visitor stopped the search
    Exhausted, // every candidate within the bounds was visited
    Overflow   // some sizes exceeded the bit budget; not exhaustive
};

// visit returns true to stop. Deterministic enumeration order.
SearchOutcome search_extensions(const SearchSpec& spec,
                                const std::function<bool(const Interpretation&)>& visit);

} // namespace hornfit

#endif
