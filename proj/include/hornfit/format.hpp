#ifndef HORNFIT_FORMAT_HPP
#define HORNFIT_FORMAT_HPP

#include <string>

#include "hornfit/examples.hpp"
#include "hornfit/ontology.hpp"

namespace hornfit {

// ── Instance files ──────────────────────────────────────────────────────
//
//   # comment
//   logic el            (el | elb | eli | elib)
//   query-lang cq       (consistency | aq | cq | ucq)
//
//   positive {
//     abox {
//       NewHire(jane)          one assertion per line (or whitespace-separated)
//       mentor(jane, sam)
//     }
//     query {                  absent in consistency mode; repeat the block
//       mentor(jane, ?x)       for the disjuncts of a UCQ
//       Emp(?x)
//     }
//   }
//   negative { ... }
//
//   signature {                optional extra symbols
//     concepts A B
//     roles r
//   }
//
// Terms starting with '?' are variables. Symbol names are alphanumeric
// (plus '-'); names starting with '_' are reserved for generated symbols
// and rejected here. A JSON mirror of the same schema is accepted and
// produced for files ending in ".json".
//
// Parsing normalizes individual names by prefixing the example index;
// serialization strips the prefixes again, so parse-serialize-parse is the
// identity on canonical forms.

ExampleCollection parse_instance(const std::string& text);
std::string serialize_instance(const ExampleCollection& ec);

ExampleCollection parse_instance_json(const std::string& text);
std::string serialize_instance_json(const ExampleCollection& ec);

// Dispatch on the ".json" suffix.
ExampleCollection parse_instance_file(const std::string& path);
void write_instance_file(const std::string& path, const ExampleCollection& ec);

// ── Ontology files ──────────────────────────────────────────────────────
//
//   ontology elib
//   (ci <concept> <concept>)
//
//   concept := top | bot | NAME
//            | (and <concept>+)
//            | (some <role> <concept>)
//            | (sim [el|eli] <interp> <element>)
//   role    := NAME | (inv NAME)
//   interp  := (interp (dom <elem>+) (label <NAME> <elem>+)* (edge <NAME> <elem> <elem>)*)
//
// Quantifier payloads default to the header's base logic when the tag is
// omitted. Serialization is canonical: sorted inclusions, sorted conjuncts,
// explicit tags.

Ontology parse_ontology(const std::string& text, LogicTag* declaredLogic = nullptr);
std::string serialize_ontology(const Ontology& o, LogicTag l);

Ontology parse_ontology_file(const std::string& path, LogicTag* declaredLogic = nullptr);

// ── ABox files ──────────────────────────────────────────────────────────
// Bare assertion lists, one per line: A(a) and r(a, b).
ABox parse_abox(const std::string& text);
std::string serialize_abox(const ABox& abox);
ABox parse_abox_file(const std::string& path);

std::string serialize_concept(const Concept& c);
std::string serialize_cq(const CQ& q);
std::string serialize_interpretation(const Interpretation& interp);

// One concept term in the grammar above; `base` supplies the default
// quantifier tag.
Concept parse_concept_text(const std::string& text, LogicTag base);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace hornfit

#endif
