#ifndef HORNFIT_FIT_HPP
#define HORNFIT_FIT_HPP

#include <optional>

#include "hornfit/entail.hpp"

namespace hornfit {

enum class Verdict { Yes, No, Unknown };

inline std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Yes: return "YES";
    case Verdict::No: return "NO";
    case Verdict::Unknown: return "UNKNOWN";
    }
    return "?";
}

// Refutation data for NO answers; replayable against the inputs.
struct Certificate {
    enum class Kind {
        None,
        TotalSimulation,      // consistency: negative simulates into the positives
        DerivedAssertion,     // AQ: the completion derives the negative query
        InexpressibleBottom,  // consistency without bottom but with negatives
        UnentailablePositive, // no-negatives case: a positive no ontology reaches
        GammaExhausted        // UCQ: every candidate choice violates a negative
    };
    Kind kind = Kind::None;
    size_t exampleIndex = 0;
    std::vector<std::pair<std::string, std::string>> simulationPairs;
    std::string conceptName;
    std::string individual;
};

std::string to_string(Certificate::Kind k);

// Where a CI's left-hand side is the characteristic concept of (source,
// element) at `depth`; carried so the succinct auxiliary-name encoding can
// be derived later.
struct CharProvenance {
    Interpretation source;
    std::string element;
    size_t depth = 0;
    LogicTag logic; // el or eli
};

struct SynthCI {
    CI ci;
    std::optional<CharProvenance> prov;
};

struct SynthOntology {
    std::vector<SynthCI> cis;

    void add(const CI& ci, std::optional<CharProvenance> prov = std::nullopt) {
        cis.push_back({ci, std::move(prov)});
    }
    Ontology plain() const {
        Ontology o;
        for (const auto& s : cis) o.add(s.ci);
        return o;
    }
};

struct FitDecision {
    Verdict verdict = Verdict::Unknown;
    SynthOntology ontology;                        // Yes
    Certificate certificate;                       // No
    size_t bound = 0;                              // Unknown: exhausted bound
    std::vector<Interpretation> witnessComponents; // Yes via the UCQ route, one
                                                   // u-saturated model per negative
};

struct FitOptions {
    size_t maxWitnessSize = 4; // inverse-logic witness search bound
    BoundedParams bounded;
};

// The deciders expect collections whose individual names are disjoint across
// examples (normalize_individuals). decide_fit dispatches on the query
// language and logic.
FitDecision decide_consistency_fit(const ExampleCollection& ec, LogicTag l);
FitDecision decide_aq_fit(const ExampleCollection& ec, LogicTag l);
FitDecision decide_ucq_fit_el(const ExampleCollection& ec, LogicTag l);
FitDecision decide_ucq_fit_eli_bounded(const ExampleCollection& ec, LogicTag l,
                                       size_t maxWitnessSize,
                                       const BoundedParams& params = {});
FitDecision fit_no_negatives(const ExampleCollection& ec, LogicTag l,
                             const BoundedParams& params = {});
FitDecision decide_fit(const ExampleCollection& ec, const FitOptions& opts = {});

// One candidate ontology built from a forest variation of a positive example
// plus an anchoring of its existential reduction queries; for the bottom
// logics also the per-individual bottom singletons.
struct GammaMember {
    Ontology ontology;
    bool bottomSingleton = false;
    CQ variation;
};

// Deterministic order, deduplicated. `uRole` is the auxiliary role used for
// non-rooted reduction queries.
std::vector<GammaMember> gamma_set(const Example& e, LogicTag l, const std::string& uRole);

inline const std::string kAuxRole = "_u";

// Per-component u-saturated copies with disjoint anonymous element names;
// the form the witness-based synthesizers expect.
std::vector<Interpretation> prepare_witness_components(std::vector<Interpretation> raw,
                                                       const std::string& uRole);

// Ontology that fits E, read off a witness: one model per negative refuting
// all its variations, jointly modeling one Gamma member per positive.
// Audits the witness and throws InvalidInput when it fails the conditions.
SynthOntology synth_from_witness(const ExampleCollection& ec, LogicTag l,
                                 const std::vector<Interpretation>& components,
                                 const std::string& uRole = kAuxRole);

// Succinct rewrite: every characteristic-concept left-hand side becomes a
// family of auxiliary names with one layer per depth step.
Ontology encode_char_poly(const SynthOntology& o);

// Consistency-fitting ontology built from the positive examples alone.
Ontology synth_alternative_consistency(const ExampleCollection& ec, LogicTag l);

// Fitting ontology encoding a small witness interpretation elementwise; CI
// count grows with 2^|domain|, hence the cap.
Ontology synth_from_interpretation(const ExampleCollection& ec, LogicTag l,
                                   const std::vector<Interpretation>& components,
                                   size_t domainCap = 8,
                                   const std::string& uRole = kAuxRole);

// ABox approximated by fresh names under a simulation quantifier.
Ontology encode_abox_as_ontology(const ABox& abox, LogicTag l);

struct UndirectedGraph {
    size_t vertices = 0;
    std::set<std::pair<size_t, size_t>> edges; // 1-based, u < v
};

// Instance whose fitting ontologies correspond to 2-colorings of the first
// `protectedCount` vertices that do not extend to a 3-coloring of the graph.
ExampleCollection gen_coloring_instance(const UndirectedGraph& g, size_t protectedCount);

enum class VerifyResult { True, False, Unknown };

inline std::string to_string(VerifyResult v) {
    switch (v) {
    case VerifyResult::True: return "true";
    case VerifyResult::False: return "false";
    case VerifyResult::Unknown: return "UNKNOWN";
    }
    return "?";
}

// Independent check of the fitting conditions: positives entailed (or
// consistent), negatives not. Exact for saturation-fragment ontologies;
// bounded three-valued otherwise.
VerifyResult verify_fit(const Ontology& o, const ExampleCollection& ec, LogicTag l,
                        const BoundedParams& params = {});

// Characteristic concept over an interpretation with the depth trimmed to
// the simulation fixpoint's stabilization stage (never above cap).
struct TrimmedChar {
    Concept concept_;
    size_t depth = 0;
};
TrimmedChar char_concept_trimmed(LogicTag base, const Interpretation& source, ElemId elem,
                                 size_t cap, size_t stabilization);

} // namespace hornfit

#endif
