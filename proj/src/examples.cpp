#include "hornfit/examples.hpp"

namespace hornfit {

Signature ExampleCollection::signature() const {
    Signature sig;
    auto addQuery = [&](const UCQ& q) {
        for (const auto& d : q.disjuncts)
            for (const auto& a : d.atoms()) {
                if (a.is_role())
                    sig.roles.insert(a.pred);
                else
                    sig.concepts.insert(a.pred);
            }
    };
    for (const auto& e : positives) {
        sig.merge(e.abox.signature());
        addQuery(e.query);
    }
    for (const auto& e : negatives) {
        sig.merge(e.abox.signature());
        addQuery(e.query);
    }
    sig.merge(declared);
    return sig;
}

namespace {

UCQ rename_query(const UCQ& q, const std::string& prefix) {
    UCQ out;
    for (const auto& d : q.disjuncts) {
        std::vector<Atom> atoms = d.atoms();
        for (auto& a : atoms)
            for (auto& t : a.args)
                if (!t.isVar) t.name = prefix + t.name;
        out.disjuncts.emplace_back(std::move(atoms));
    }
    return out;
}

} // namespace

ExampleCollection normalize_individuals(const ExampleCollection& ec) {
    ExampleCollection out;
    out.logic = ec.logic;
    out.lang = ec.lang;
    out.declared = ec.declared;
    for (size_t i = 0; i < ec.positives.size(); ++i) {
        const auto& e = ec.positives[i];
        std::string p = positive_prefix(i);
        out.positives.push_back({e.abox.renamed(p), rename_query(e.query, p)});
    }
    for (size_t i = 0; i < ec.negatives.size(); ++i) {
        const auto& e = ec.negatives[i];
        std::string p = negative_prefix(i);
        out.negatives.push_back({e.abox.renamed(p), rename_query(e.query, p)});
    }
    return out;
}

namespace {

void validate_example(const Example& e, const ExampleCollection& ec, const char* side,
                      size_t idx) {
    auto where = [&] { return std::string(side) + " example " + std::to_string(idx); };
    if (e.abox.empty()) throw InvalidInput(where() + ": ABox must be nonempty");

    if (ec.lang == QueryLang::Consistency) {
        if (!e.query.disjuncts.empty())
            throw InvalidInput(where() + ": consistency examples carry no query");
        return;
    }
    if (e.query.disjuncts.empty())
        throw InvalidInput(where() + ": missing query");
    if (ec.lang != QueryLang::UCQ && e.query.disjuncts.size() > 1)
        throw InvalidInput(where() + ": multiple disjuncts need query-lang ucq");
    for (const auto& d : e.query.disjuncts) {
        if (d.empty()) throw InvalidInput(where() + ": empty conjunctive query");
        if (ec.lang == QueryLang::AQ && !d.is_atomic())
            throw InvalidInput(where() + ": query-lang aq requires a single A(a) atom");
        for (const auto& name : d.individuals())
            if (!e.abox.has_individual(name))
                throw InvalidInput(where() + ": query individual '" + name +
                                   "' does not occur in the ABox");
    }
}

} // namespace

void validate(const ExampleCollection& ec) {
    for (size_t i = 0; i < ec.positives.size(); ++i)
        validate_example(ec.positives[i], ec, "positive", i);
    for (size_t i = 0; i < ec.negatives.size(); ++i)
        validate_example(ec.negatives[i], ec, "negative", i);
}

} // namespace hornfit
