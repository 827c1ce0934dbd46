#include "hornfit/cli.hpp"

#include <chrono>

#include <CLI11.hpp>

#include "hornfit/fit.hpp"
#include "hornfit/format.hpp"

namespace hornfit {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

struct CommonOpts {
    std::string in;
    std::string ontologyPath;
    std::string outPath;
    std::string synthesis = "char";
    size_t maxWitnessSize = 4;
    BoundedParams bounded;
};

void add_bound_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--max-witness-size", o.maxWitnessSize,
                    "witness search bound for the inverse-role logics");
    cmd->add_option("--chase-depth", o.bounded.chaseDepth, "bounded chase depth");
    cmd->add_option("--model-bound", o.bounded.modelBound,
                    "countermodel search domain bound");
}

void print_instance_header(std::ostream& os, const char* command,
                           const std::string& path, const ExampleCollection& ec) {
    os << "command " << command << "\n";
    os << "input " << path << "\n";
    os << "logic " << to_string(ec.logic) << "\n";
    os << "query-lang " << to_string(ec.lang) << "\n";
    os << "positives " << ec.positives.size() << "\n";
    os << "negatives " << ec.negatives.size() << "\n";
}

Ontology synthesize(const std::string& mode, const FitDecision& d,
                    const ExampleCollection& ec) {
    if (mode == "char") return d.ontology.plain();
    if (mode == "poly") return encode_char_poly(d.ontology);
    if (mode == "vbar") return synth_alternative_consistency(ec, ec.logic);
    if (mode == "interp") {
        if (d.witnessComponents.empty())
            throw InvalidInput("no witness interpretation available for --synthesis interp");
        return synth_from_interpretation(ec, ec.logic, d.witnessComponents);
    }
    throw InvalidInput("unknown synthesis mode '" + mode +
                       "' (expected char, poly, interp, vbar)");
}

void print_certificate(std::ostream& os, const Certificate& c) {
    os << "certificate " << to_string(c.kind) << "\n";
    os << "certificate-example " << c.exampleIndex << "\n";
    for (const auto& [a, b] : c.simulationPairs)
        os << "certificate-pair " << a << " " << b << "\n";
    if (!c.conceptName.empty())
        os << "certificate-assertion " << c.conceptName << "(" << c.individual << ")\n";
}

int cmd_decide(const CommonOpts& o, bool requireSynthesis, std::ostream& os) {
    Timer timer;
    ExampleCollection ec = parse_instance_file(o.in);
    print_instance_header(os, requireSynthesis ? "synth" : "decide", o.in, ec);

    FitOptions opts;
    opts.maxWitnessSize = o.maxWitnessSize;
    opts.bounded = o.bounded;
    FitDecision d = decide_fit(ec, opts);

    os << "decision " << to_string(d.verdict) << "\n";
    int code = d.verdict == Verdict::Yes ? 0 : d.verdict == Verdict::No ? 1 : 2;
    if (d.verdict == Verdict::Yes) {
        Ontology synth = synthesize(o.synthesis, d, ec);
        os << "synthesis " << o.synthesis << "\n";
        os << "ontology-cis " << synth.size() << "\n";
        std::string text = serialize_ontology(synth, ec.logic);
        if (!o.outPath.empty()) {
            write_file(o.outPath, text);
            os << "ontology-file " << o.outPath << "\n";
        } else {
            os << "ontology-begin\n" << text << "ontology-end\n";
        }
        if (!d.witnessComponents.empty()) {
            size_t total = 0;
            for (const auto& c : d.witnessComponents) total += c.size();
            os << "witness-size " << total << "\n";
            for (size_t i = 0; i < d.witnessComponents.size(); ++i)
                os << "witness-component " << i << " "
                   << serialize_interpretation(d.witnessComponents[i]) << "\n";
        }
    } else if (d.verdict == Verdict::No) {
        print_certificate(os, d.certificate);
    } else {
        os << "bound " << d.bound << "\n";
    }
    os << "timing.total-ms " << timer.ms() << "\n";
    return code;
}

int cmd_verify(const CommonOpts& o, std::ostream& os) {
    Timer timer;
    ExampleCollection ec = parse_instance_file(o.in);
    Ontology ont = parse_ontology_file(o.ontologyPath);
    print_instance_header(os, "verify", o.in, ec);
    os << "ontology " << o.ontologyPath << "\n";
    os << "ontology-cis " << ont.size() << "\n";
    VerifyResult r = verify_fit(ont, ec, ec.logic, o.bounded);
    os << "result " << to_string(r) << "\n";
    os << "timing.total-ms " << timer.ms() << "\n";
    return r == VerifyResult::True ? 0 : r == VerifyResult::False ? 1 : 2;
}

int cmd_entail(const CommonOpts& o, std::ostream& os) {
    Timer timer;
    ExampleCollection ec = parse_instance_file(o.in);
    Ontology ont = parse_ontology_file(o.ontologyPath);
    print_instance_header(os, "entail", o.in, ec);
    os << "ontology " << o.ontologyPath << "\n";
    if (ec.lang == QueryLang::Consistency)
        throw InvalidInput("entail needs examples with queries");

    bool anyNot = false, anyUnknown = false;
    auto report = [&](const char* side, size_t idx, const Example& e) {
        std::string status;
        if (chaseable(ont)) {
            status = ucq_entailed_by_universal(e.abox, ont, e.query, logic::EL)
                         ? "entailed"
                         : "not-entailed";
        } else {
            Entailment ent = eli_entailment_bounded(e.abox, ont, e.query, o.bounded);
            status = ent == Entailment::Entailed      ? "entailed"
                     : ent == Entailment::NotEntailed ? "not-entailed"
                                                      : "unknown";
        }
        if (status == "not-entailed") anyNot = true;
        if (status == "unknown") anyUnknown = true;
        os << "entail " << side << " " << idx << " " << status << "\n";
    };
    for (size_t i = 0; i < ec.positives.size(); ++i) report("positive", i, ec.positives[i]);
    for (size_t i = 0; i < ec.negatives.size(); ++i) report("negative", i, ec.negatives[i]);
    os << "timing.total-ms " << timer.ms() << "\n";
    return anyNot ? 1 : anyUnknown ? 2 : 0;
}

int cmd_sim(const std::string& logicName, const std::string& fromPath,
            const std::string& toPath, const std::string& fromElem,
            const std::string& toElem, std::ostream& os) {
    Timer timer;
    LogicTag l = logic_from_string(logicName);
    ABox from = parse_abox_file(fromPath);
    ABox to = parse_abox_file(toPath);
    os << "command sim\n";
    os << "logic " << logicName << "\n";
    os << "from " << fromPath << "\n";
    os << "to " << toPath << "\n";

    SimResult s = max_simulation(l, from.interp(), to.interp());
    auto pairs = s.pairs();
    os << "pairs " << pairs.size() << "\n";
    for (const auto& [d1, d2] : pairs)
        os << "pair " << from.interp().element_name(d1) << " "
           << to.interp().element_name(d2) << "\n";
    os << "total " << (s.total ? "true" : "false") << "\n";

    bool exists;
    if (!fromElem.empty() || !toElem.empty()) {
        auto a = from.interp().named_element(fromElem);
        auto b = to.interp().named_element(toElem);
        if (!a || !b) throw InvalidInput("unknown individual in --from-elem/--to-elem");
        exists = s.pair(*a, *b) && (!l.bottom || s.total);
        os << "related " << (exists ? "true" : "false") << "\n";
    } else {
        exists = l.bottom ? s.total : true; // the empty relation qualifies
    }
    os << "simulation-exists " << (exists ? "true" : "false") << "\n";
    os << "timing.total-ms " << timer.ms() << "\n";
    return exists ? 1 : 0; // 1: the target simulates, so a fit is refuted
}

int cmd_chase(const CommonOpts& o, std::ostream& os) {
    Timer timer;
    ExampleCollection ec = parse_instance_file(o.in);
    Ontology ont = parse_ontology_file(o.ontologyPath);
    print_instance_header(os, "chase", o.in, ec);
    os << "ontology " << o.ontologyPath << "\n";
    bool anyInconsistent = false;
    auto chaseOne = [&](const char* side, size_t idx, const Example& e) {
        UniversalModel u = chase_universal_model(e.abox, ont);
        os << "chase " << side << " " << idx << " "
           << (u.inconsistent ? "inconsistent" : "consistent");
        if (!u.inconsistent) os << " " << serialize_interpretation(u.interp);
        os << "\n";
        anyInconsistent |= u.inconsistent;
    };
    for (size_t i = 0; i < ec.positives.size(); ++i) chaseOne("positive", i, ec.positives[i]);
    for (size_t i = 0; i < ec.negatives.size(); ++i) chaseOne("negative", i, ec.negatives[i]);
    os << "timing.total-ms " << timer.ms() << "\n";
    return anyInconsistent ? 1 : 0;
}

UndirectedGraph parse_graph_file(const std::string& path) {
    std::string text = read_file(path);
    UndirectedGraph g;
    std::istringstream in(text);
    std::string line;
    size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "vertices") {
            if (!(ls >> g.vertices)) throw ParseError(lineNo, 1, "expected a vertex count");
            continue;
        }
        size_t u = 0, v = 0;
        try {
            u = std::stoul(first);
        } catch (...) {
            throw ParseError(lineNo, 1, "expected an edge 'u v'");
        }
        if (!(ls >> v)) throw ParseError(lineNo, 1, "expected an edge 'u v'");
        if (u == v) throw ParseError(lineNo, 1, "self-loops are not allowed");
        if (u > v) std::swap(u, v);
        g.edges.insert({u, v});
        g.vertices = std::max({g.vertices, u, v});
    }
    return g;
}

size_t parse_protected(const std::string& spec, size_t vertices) {
    if (spec.empty()) return 0;
    std::set<size_t> vs;
    std::istringstream in(spec);
    std::string part;
    while (std::getline(in, part, ',')) {
        if (part.empty()) continue;
        vs.insert(std::stoul(part));
    }
    // The construction expects the protected set to be an initial segment.
    size_t k = vs.size();
    for (size_t i = 1; i <= k; ++i)
        if (!vs.count(i))
            throw InvalidInput("protected set must be the initial segment 1..k");
    if (k > vertices) throw InvalidInput("protected set larger than the vertex set");
    return k;
}

int cmd_gen_coloring(const std::string& graphPath, const std::string& protectedSpec,
                     const std::string& outPath, std::ostream& os) {
    Timer timer;
    UndirectedGraph g = parse_graph_file(graphPath);
    size_t k = parse_protected(protectedSpec, g.vertices);
    ExampleCollection ec = gen_coloring_instance(g, k);
    os << "command gen-coloring\n";
    os << "graph " << graphPath << "\n";
    os << "vertices " << g.vertices << "\n";
    os << "edges " << g.edges.size() << "\n";
    os << "protected " << k << "\n";
    write_instance_file(outPath, ec);
    os << "out " << outPath << "\n";
    os << "timing.total-ms " << timer.ms() << "\n";
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fitting Horn ontologies to labeled ABox-query examples"};
    app.require_subcommand(1);

    CommonOpts decideOpts, synthOpts, verifyOpts, entailOpts, chaseOpts;

    auto* decide = app.add_subcommand("decide", "decide fitting and synthesize");
    decide->add_option("--in", decideOpts.in, "instance file")->required();
    decide->add_option("--out", decideOpts.outPath, "ontology output file");
    decide->add_option("--synthesis", decideOpts.synthesis, "char|poly|interp|vbar");
    add_bound_flags(decide, decideOpts);

    auto* synth = app.add_subcommand("synth", "synthesize a fitting ontology");
    synth->add_option("--in", synthOpts.in, "instance file")->required();
    synth->add_option("--out", synthOpts.outPath, "ontology output file")->required();
    synth->add_option("--synthesis", synthOpts.synthesis, "char|poly|interp|vbar");
    add_bound_flags(synth, synthOpts);

    auto* verify = app.add_subcommand("verify", "verify a fitting ontology");
    verify->add_option("--in", verifyOpts.in, "instance file")->required();
    verify->add_option("--ontology", verifyOpts.ontologyPath, "ontology file")->required();
    add_bound_flags(verify, verifyOpts);

    auto* entail = app.add_subcommand("entail", "per-example query entailment");
    entail->add_option("--in", entailOpts.in, "instance file")->required();
    entail->add_option("--ontology", entailOpts.ontologyPath, "ontology file")->required();
    add_bound_flags(entail, entailOpts);

    std::string simLogic = "el", simFrom, simTo, simFromElem, simToElem;
    auto* sim = app.add_subcommand("sim", "greatest simulation between two ABoxes");
    sim->add_option("--logic", simLogic, "el|elb|eli|elib");
    sim->add_option("--from", simFrom, "source ABox file")->required();
    sim->add_option("--to", simTo, "target ABox file")->required();
    sim->add_option("--from-elem", simFromElem, "pointed source individual");
    sim->add_option("--to-elem", simToElem, "pointed target individual");

    auto* chase = app.add_subcommand("chase", "saturate example ABoxes");
    chase->add_option("--in", chaseOpts.in, "instance file")->required();
    chase->add_option("--ontology", chaseOpts.ontologyPath, "ontology file")->required();

    std::string graphPath, protectedSpec, genOut;
    auto* gen = app.add_subcommand("gen-coloring", "coloring-extension instance generator");
    gen->add_option("--graph", graphPath, "edge-list file")->required();
    gen->add_option("--protected", protectedSpec, "comma-separated protected vertices");
    gen->add_option("--out", genOut, "instance output file")->required();

    try {
        std::vector<std::string> argv = args;
        std::reverse(argv.begin(), argv.end());
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 64;
    }

    try {
        if (decide->parsed()) return cmd_decide(decideOpts, false, out);
        if (synth->parsed()) return cmd_decide(synthOpts, true, out);
        if (verify->parsed()) return cmd_verify(verifyOpts, out);
        if (entail->parsed()) return cmd_entail(entailOpts, out);
        if (sim->parsed())
            return cmd_sim(simLogic, simFrom, simTo, simFromElem, simToElem, out);
        if (chase->parsed()) return cmd_chase(chaseOpts, out);
        if (gen->parsed()) return cmd_gen_coloring(graphPath, protectedSpec, genOut, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 65;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return 65;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 70;
    }
    return 64;
}

} // namespace hornfit
