#include "hornfit/format.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hornfit {

namespace {

const std::set<std::string> kKeywords = {
    "logic", "query-lang", "positive", "negative", "abox",
    "query", "signature",  "concepts", "roles",    "ontology",
    "ci",    "and",        "some",     "inv",      "sim",
    "interp", "dom",       "label",    "edge",     "top",
    "bot"};

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
           c == '.';
}

struct Token {
    enum class Kind { Ident, Var, Punct, End };
    Kind kind = Kind::End;
    std::string text;
    size_t line = 0, col = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return cur_; }
    Token next() {
        Token t = cur_;
        advance();
        return t;
    }
    bool at_end() const { return cur_.kind == Token::Kind::End; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(cur_.line ? cur_.line : line_, cur_.col ? cur_.col : col_, msg);
    }

    Token expect_ident(const std::string& what) {
        if (cur_.kind != Token::Kind::Ident) fail("expected " + what);
        return next();
    }
    void expect_punct(char c) {
        if (cur_.kind != Token::Kind::Punct || cur_.text[0] != c)
            fail(std::string("expected '") + c + "'");
        next();
    }
    bool accept_punct(char c) {
        if (cur_.kind == Token::Kind::Punct && cur_.text[0] == c) {
            next();
            return true;
        }
        return false;
    }
    bool accept_keyword(const std::string& kw) {
        if (cur_.kind == Token::Kind::Ident && cur_.text == kw) {
            next();
            return true;
        }
        return false;
    }

private:
    void advance() {
        skip_space();
        cur_ = Token{};
        cur_.line = line_;
        cur_.col = col_;
        if (pos_ >= text_.size()) {
            cur_.kind = Token::Kind::End;
            return;
        }
        char c = text_[pos_];
        if (c == '?') {
            take();
            cur_.kind = Token::Kind::Var;
            cur_.text = read_ident_chars();
            if (cur_.text.empty()) throw ParseError(line_, col_, "expected variable name");
            return;
        }
        if (ident_char(c)) {
            cur_.kind = Token::Kind::Ident;
            cur_.text = read_ident_chars();
            return;
        }
        if (c == '{' || c == '}' || c == '(' || c == ')' || c == ',') {
            cur_.kind = Token::Kind::Punct;
            cur_.text = std::string(1, c);
            take();
            return;
        }
        throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
    }

    std::string read_ident_chars() {
        std::string out;
        while (pos_ < text_.size() && ident_char(text_[pos_])) {
            out += text_[pos_];
            take();
        }
        return out;
    }

    void skip_space() {
        for (;;) {
            while (pos_ < text_.size() &&
                   std::isspace(static_cast<unsigned char>(text_[pos_])))
                take();
            if (pos_ < text_.size() && text_[pos_] == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') take();
                continue;
            }
            break;
        }
    }

    void take() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    size_t pos_ = 0;
    size_t line_ = 1, col_ = 1;
    Token cur_;
};

void check_user_symbol(const Lexer& lx, const std::string& name) {
    if (is_reserved_symbol(name))
        lx.fail("symbol '" + name + "' uses the reserved '_' prefix");
    if (name.find('.') != std::string::npos)
        lx.fail("symbol '" + name + "' may not contain '.'");
    if (kKeywords.count(name)) lx.fail("'" + name + "' is a keyword");
}

// assertion := NAME '(' NAME [',' NAME] ')'
void parse_assertion(Lexer& lx, ABox& abox) {
    Token pred = lx.expect_ident("an assertion");
    check_user_symbol(lx, pred.text);
    lx.expect_punct('(');
    Token first = lx.expect_ident("an individual");
    check_user_symbol(lx, first.text);
    if (lx.accept_punct(',')) {
        Token second = lx.expect_ident("an individual");
        check_user_symbol(lx, second.text);
        lx.expect_punct(')');
        abox.assert_role(pred.text, first.text, second.text);
    } else {
        lx.expect_punct(')');
        abox.assert_concept(pred.text, first.text);
    }
}

Term parse_term(Lexer& lx) {
    if (lx.peek().kind == Token::Kind::Var) {
        Token t = lx.next();
        check_user_symbol(lx, t.text);
        return var(t.text);
    }
    Token t = lx.expect_ident("a term");
    check_user_symbol(lx, t.text);
    return ind(t.text);
}

CQ parse_query_block(Lexer& lx) {
    lx.expect_punct('{');
    std::vector<Atom> atoms;
    while (!lx.accept_punct('}')) {
        Token pred = lx.expect_ident("a query atom");
        check_user_symbol(lx, pred.text);
        lx.expect_punct('(');
        std::vector<Term> args{parse_term(lx)};
        if (lx.accept_punct(',')) args.push_back(parse_term(lx));
        lx.expect_punct(')');
        atoms.push_back(Atom{pred.text, std::move(args)});
    }
    if (atoms.empty()) lx.fail("a query needs at least one atom");
    return CQ(std::move(atoms)).canonical();
}

Example parse_example(Lexer& lx) {
    Example e;
    lx.expect_punct('{');
    if (!lx.accept_keyword("abox")) lx.fail("expected 'abox'");
    lx.expect_punct('{');
    while (!lx.accept_punct('}')) parse_assertion(lx, e.abox);
    if (e.abox.empty()) lx.fail("an ABox must be nonempty");
    while (lx.accept_keyword("query")) e.query.disjuncts.push_back(parse_query_block(lx));
    std::sort(e.query.disjuncts.begin(), e.query.disjuncts.end());
    lx.expect_punct('}');
    return e;
}

} // namespace

ExampleCollection parse_instance(const std::string& text) {
    Lexer lx(text);
    ExampleCollection ec;
    if (!lx.accept_keyword("logic")) lx.fail("expected 'logic'");
    ec.logic = logic_from_string(lx.expect_ident("a logic tag").text);
    if (!lx.accept_keyword("query-lang")) lx.fail("expected 'query-lang'");
    ec.lang = query_lang_from_string(lx.expect_ident("a query language").text);

    while (!lx.at_end()) {
        if (lx.accept_keyword("positive")) {
            ec.positives.push_back(parse_example(lx));
        } else if (lx.accept_keyword("negative")) {
            ec.negatives.push_back(parse_example(lx));
        } else if (lx.accept_keyword("signature")) {
            lx.expect_punct('{');
            while (!lx.accept_punct('}')) {
                if (lx.accept_keyword("concepts")) {
                    while (lx.peek().kind == Token::Kind::Ident &&
                           !kKeywords.count(lx.peek().text)) {
                        Token t = lx.next();
                        check_user_symbol(lx, t.text);
                        ec.declared.concepts.insert(t.text);
                    }
                } else if (lx.accept_keyword("roles")) {
                    while (lx.peek().kind == Token::Kind::Ident &&
                           !kKeywords.count(lx.peek().text)) {
                        Token t = lx.next();
                        check_user_symbol(lx, t.text);
                        ec.declared.roles.insert(t.text);
                    }
                } else {
                    lx.fail("expected 'concepts' or 'roles'");
                }
            }
        } else {
            lx.fail("expected 'positive', 'negative' or 'signature'");
        }
    }

    for (const auto& e : ec.positives)
        for (const auto& d : e.query.disjuncts)
            for (const auto& a : d.atoms())
                for (const auto& t : a.args)
                    if (!t.isVar && !e.abox.has_individual(t.name))
                        throw InvalidInput("query individual '" + t.name +
                                           "' does not occur in the ABox");
    validate(ec);
    return normalize_individuals(ec);
}

namespace {

std::string strip_example_prefix(const std::string& name, const std::string& prefix) {
    if (name.rfind(prefix, 0) == 0) return name.substr(prefix.size());
    return name;
}

Example strip_example(const Example& e, const std::string& prefix) {
    Example out;
    for (const auto& [c, a] : e.abox.concept_assertions())
        out.abox.assert_concept(c, strip_example_prefix(a, prefix));
    for (const auto& [r, a, b] : e.abox.role_assertions())
        out.abox.assert_role(r, strip_example_prefix(a, prefix),
                             strip_example_prefix(b, prefix));
    for (const auto& d : e.query.disjuncts) {
        std::vector<Atom> atoms = d.atoms();
        for (auto& at : atoms)
            for (auto& t : at.args)
                if (!t.isVar) t.name = strip_example_prefix(t.name, prefix);
        out.query.disjuncts.emplace_back(std::move(atoms));
    }
    return out;
}

void serialize_example(std::ostream& os, const Example& e, const char* side) {
    os << side << " {\n  abox {\n";
    for (const auto& [c, a] : e.abox.concept_assertions())
        os << "    " << c << "(" << a << ")\n";
    for (const auto& [r, a, b] : e.abox.role_assertions())
        os << "    " << r << "(" << a << ", " << b << ")\n";
    os << "  }\n";
    for (const auto& d : e.query.disjuncts) {
        os << "  query {\n";
        for (const auto& at : d.atoms()) {
            os << "    " << at.pred << "(" << at.args[0].to_string();
            if (at.args.size() == 2) os << ", " << at.args[1].to_string();
            os << ")\n";
        }
        os << "  }\n";
    }
    os << "}\n";
}

} // namespace

std::string serialize_instance(const ExampleCollection& ec) {
    std::ostringstream os;
    os << "logic " << to_string(ec.logic) << "\n";
    os << "query-lang " << to_string(ec.lang) << "\n";
    for (size_t i = 0; i < ec.positives.size(); ++i) {
        os << "\n";
        serialize_example(os, strip_example(ec.positives[i], positive_prefix(i)),
                          "positive");
    }
    for (size_t i = 0; i < ec.negatives.size(); ++i) {
        os << "\n";
        serialize_example(os, strip_example(ec.negatives[i], negative_prefix(i)),
                          "negative");
    }
    if (!ec.declared.concepts.empty() || !ec.declared.roles.empty()) {
        os << "\nsignature {\n";
        if (!ec.declared.concepts.empty()) {
            os << "  concepts";
            for (const auto& c : ec.declared.concepts) os << " " << c;
            os << "\n";
        }
        if (!ec.declared.roles.empty()) {
            os << "  roles";
            for (const auto& r : ec.declared.roles) os << " " << r;
            os << "\n";
        }
        os << "}\n";
    }
    return os.str();
}

// ── JSON mirror ─────────────────────────────────────────────────────────

namespace {

using nlohmann::json;

std::string check_symbol_json(const std::string& s) {
    if (s.empty() || is_reserved_symbol(s) || s.find('.') != std::string::npos ||
        kKeywords.count(s))
        throw InvalidInput("invalid symbol '" + s + "'");
    return s;
}

Term term_from_json(const std::string& s) {
    if (!s.empty() && s[0] == '?') return var(check_symbol_json(s.substr(1)));
    return ind(check_symbol_json(s));
}

Example example_from_json(const json& j) {
    Example e;
    const json& abox = j.at("abox");
    if (abox.contains("concepts"))
        for (const auto& ca : abox.at("concepts"))
            e.abox.assert_concept(check_symbol_json(ca.at(0).get<std::string>()),
                                  check_symbol_json(ca.at(1).get<std::string>()));
    if (abox.contains("roles"))
        for (const auto& ra : abox.at("roles"))
            e.abox.assert_role(check_symbol_json(ra.at(0).get<std::string>()),
                               check_symbol_json(ra.at(1).get<std::string>()),
                               check_symbol_json(ra.at(2).get<std::string>()));
    if (j.contains("queries"))
        for (const auto& q : j.at("queries")) {
            std::vector<Atom> atoms;
            for (const auto& a : q) {
                Atom atom;
                atom.pred = check_symbol_json(a.at(0).get<std::string>());
                atom.args.push_back(term_from_json(a.at(1).get<std::string>()));
                if (a.size() == 3)
                    atom.args.push_back(term_from_json(a.at(2).get<std::string>()));
                atoms.push_back(std::move(atom));
            }
            if (atoms.empty()) throw InvalidInput("a query needs at least one atom");
            e.query.disjuncts.push_back(CQ(std::move(atoms)).canonical());
        }
    std::sort(e.query.disjuncts.begin(), e.query.disjuncts.end());
    return e;
}

json example_to_json(const Example& e) {
    json out;
    json concepts = json::array(), roles = json::array();
    for (const auto& [c, a] : e.abox.concept_assertions()) concepts.push_back({c, a});
    for (const auto& [r, a, b] : e.abox.role_assertions()) roles.push_back({r, a, b});
    out["abox"] = {{"concepts", concepts}, {"roles", roles}};
    json queries = json::array();
    for (const auto& d : e.query.disjuncts) {
        json q = json::array();
        for (const auto& at : d.atoms()) {
            json a = json::array();
            a.push_back(at.pred);
            for (const auto& t : at.args) a.push_back(t.to_string());
            q.push_back(a);
        }
        queries.push_back(q);
    }
    if (!queries.empty()) out["queries"] = queries;
    return out;
}

} // namespace

ExampleCollection parse_instance_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& err) {
        throw ParseError(1, 1, err.what());
    }
    try {
        ExampleCollection ec;
        ec.logic = logic_from_string(j.at("logic").get<std::string>());
        ec.lang = query_lang_from_string(j.at("query-lang").get<std::string>());
        if (j.contains("positives"))
            for (const auto& e : j.at("positives")) ec.positives.push_back(example_from_json(e));
        if (j.contains("negatives"))
            for (const auto& e : j.at("negatives")) ec.negatives.push_back(example_from_json(e));
        if (j.contains("signature")) {
            const json& sig = j.at("signature");
            if (sig.contains("concepts"))
                for (const auto& c : sig.at("concepts"))
                    ec.declared.concepts.insert(check_symbol_json(c.get<std::string>()));
            if (sig.contains("roles"))
                for (const auto& r : sig.at("roles"))
                    ec.declared.roles.insert(check_symbol_json(r.get<std::string>()));
        }
        for (const auto& e : ec.positives)
            for (const auto& d : e.query.disjuncts)
                for (const auto& name : d.individuals())
                    if (!e.abox.has_individual(name))
                        throw InvalidInput("query individual '" + name +
                                           "' does not occur in the ABox");
        validate(ec);
        return normalize_individuals(ec);
    } catch (const json::exception& err) {
        throw InvalidInput(std::string("malformed instance json: ") + err.what());
    }
}

std::string serialize_instance_json(const ExampleCollection& ec) {
    json out;
    out["logic"] = to_string(ec.logic);
    out["query-lang"] = to_string(ec.lang);
    json pos = json::array(), neg = json::array();
    for (size_t i = 0; i < ec.positives.size(); ++i)
        pos.push_back(example_to_json(strip_example(ec.positives[i], positive_prefix(i))));
    for (size_t i = 0; i < ec.negatives.size(); ++i)
        neg.push_back(example_to_json(strip_example(ec.negatives[i], negative_prefix(i))));
    out["positives"] = pos;
    out["negatives"] = neg;
    if (!ec.declared.concepts.empty() || !ec.declared.roles.empty()) {
        json sig;
        sig["concepts"] = ec.declared.concepts;
        sig["roles"] = ec.declared.roles;
        out["signature"] = sig;
    }
    return out.dump(2) + "\n";
}

ExampleCollection parse_instance_file(const std::string& path) {
    std::string text = read_file(path);
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json")
        return parse_instance_json(text);
    return parse_instance(text);
}

void write_instance_file(const std::string& path, const ExampleCollection& ec) {
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json")
        write_file(path, serialize_instance_json(ec));
    else
        write_file(path, serialize_instance(ec));
}

// ── Concepts and ontologies ─────────────────────────────────────────────

namespace {

Interpretation parse_interp(Lexer& lx) {
    Interpretation out;
    lx.expect_punct('(');
    if (!lx.accept_keyword("interp")) lx.fail("expected 'interp'");
    lx.expect_punct('(');
    if (!lx.accept_keyword("dom")) lx.fail("expected 'dom'");
    while (!lx.accept_punct(')')) {
        Token t = lx.expect_ident("an element");
        if (out.find_element(t.text)) lx.fail("duplicate element '" + t.text + "'");
        out.add_element(t.text);
    }
    while (lx.accept_punct('(')) {
        if (lx.accept_keyword("label")) {
            Token c = lx.expect_ident("a concept name");
            while (!lx.accept_punct(')')) {
                Token e = lx.expect_ident("an element");
                auto id = out.find_element(e.text);
                if (!id) lx.fail("unknown element '" + e.text + "'");
                out.add_label(*id, c.text);
            }
        } else if (lx.accept_keyword("edge")) {
            Token r = lx.expect_ident("a role name");
            Token a = lx.expect_ident("an element");
            Token b = lx.expect_ident("an element");
            auto ia = out.find_element(a.text), ib = out.find_element(b.text);
            if (!ia || !ib) lx.fail("unknown element in edge");
            out.add_edge(r.text, *ia, *ib);
            lx.expect_punct(')');
        } else {
            lx.fail("expected 'label' or 'edge'");
        }
    }
    lx.expect_punct(')');
    if (out.size() == 0) lx.fail("empty interpretation");
    return out;
}

Concept parse_concept(Lexer& lx, LogicTag base) {
    if (lx.peek().kind == Token::Kind::Ident) {
        Token t = lx.next();
        if (t.text == "top") return concept_top();
        if (t.text == "bot") return concept_bot();
        if (kKeywords.count(t.text)) lx.fail("unexpected keyword '" + t.text + "'");
        return concept_name(t.text);
    }
    lx.expect_punct('(');
    if (lx.accept_keyword("and")) {
        std::vector<Concept> parts;
        while (!lx.accept_punct(')')) parts.push_back(parse_concept(lx, base));
        if (parts.empty()) lx.fail("'and' needs at least one conjunct");
        return concept_and(std::move(parts));
    }
    if (lx.accept_keyword("some")) {
        Role role;
        if (lx.accept_punct('(')) {
            if (!lx.accept_keyword("inv")) lx.fail("expected 'inv'");
            role = Role{lx.expect_ident("a role name").text, true};
            lx.expect_punct(')');
        } else {
            role = Role{lx.expect_ident("a role name").text, false};
        }
        Concept c = parse_concept(lx, base);
        lx.expect_punct(')');
        return concept_exists(role, c);
    }
    if (lx.accept_keyword("sim")) {
        LogicTag tag = base.base();
        if (lx.peek().kind == Token::Kind::Ident &&
            (lx.peek().text == "el" || lx.peek().text == "eli"))
            tag = logic_from_string(lx.next().text);
        Interpretation payload = parse_interp(lx);
        Token point = lx.expect_ident("an element");
        auto id = payload.find_element(point.text);
        if (!id) lx.fail("unknown element '" + point.text + "'");
        lx.expect_punct(')');
        return concept_sim(tag, std::move(payload), *id);
    }
    lx.fail("expected a concept");
}

} // namespace

Concept parse_concept_text(const std::string& text, LogicTag base) {
    Lexer lx(text);
    Concept c = parse_concept(lx, base);
    if (!lx.at_end()) lx.fail("trailing input after the concept");
    return c;
}

Ontology parse_ontology(const std::string& text, LogicTag* declaredLogic) {
    Lexer lx(text);
    if (!lx.accept_keyword("ontology")) lx.fail("expected 'ontology'");
    LogicTag l = logic_from_string(lx.expect_ident("a logic tag").text);
    if (declaredLogic) *declaredLogic = l;
    Ontology out;
    while (!lx.at_end()) {
        lx.expect_punct('(');
        if (!lx.accept_keyword("ci")) lx.fail("expected 'ci'");
        Concept lhs = parse_concept(lx, l);
        Concept rhs = parse_concept(lx, l);
        lx.expect_punct(')');
        out.add(lhs, rhs);
    }
    return out;
}

std::string serialize_interpretation(const Interpretation& interp) {
    std::ostringstream os;
    os << "(interp (dom";
    std::vector<std::string> names;
    for (ElemId e = 0; e < interp.size(); ++e) names.push_back(interp.element_name(e));
    std::sort(names.begin(), names.end());
    for (const auto& n : names) os << " " << n;
    os << ")";
    for (const auto& c : interp.concept_names()) {
        std::vector<std::string> labeled;
        for (ElemId e = 0; e < interp.size(); ++e)
            if (interp.has_label(e, c)) labeled.push_back(interp.element_name(e));
        std::sort(labeled.begin(), labeled.end());
        os << " (label " << c;
        for (const auto& n : labeled) os << " " << n;
        os << ")";
    }
    for (const auto& r : interp.role_names()) {
        std::vector<std::pair<std::string, std::string>> edges;
        for (ElemId e = 0; e < interp.size(); ++e)
            for (ElemId t : interp.successors(r, e))
                edges.emplace_back(interp.element_name(e), interp.element_name(t));
        std::sort(edges.begin(), edges.end());
        for (const auto& [a, b] : edges) os << " (edge " << r << " " << a << " " << b << ")";
    }
    os << ")";
    return os.str();
}

std::string serialize_concept(const Concept& c) {
    switch (c->kind()) {
    case ConceptNode::Kind::Top: return "top";
    case ConceptNode::Kind::Bot: return "bot";
    case ConceptNode::Kind::Name: return c->name();
    case ConceptNode::Kind::And: {
        std::string out = "(and";
        for (const auto& k : c->conjuncts()) out += " " + serialize_concept(k);
        return out + ")";
    }
    case ConceptNode::Kind::Exists: {
        std::string role = c->role().inverted ? "(inv " + c->role().name + ")"
                                              : c->role().name;
        return "(some " + role + " " + serialize_concept(c->child()) + ")";
    }
    case ConceptNode::Kind::Sim:
        return "(sim " + to_string(c->sim_tag()) + " " +
               serialize_interpretation(c->sim_interp()) + " " +
               c->sim_interp().element_name(c->sim_point()) + ")";
    }
    return "?";
}

std::string serialize_cq(const CQ& q) {
    std::string out;
    for (const auto& a : q.atoms()) {
        if (!out.empty()) out += " ";
        out += a.pred + "(" + a.args[0].to_string();
        if (a.args.size() == 2) out += ", " + a.args[1].to_string();
        out += ")";
    }
    return out;
}

std::string serialize_ontology(const Ontology& o, LogicTag l) {
    std::ostringstream os;
    os << "ontology " << to_string(l) << "\n";
    for (const auto& ci : o.cis())
        os << "(ci " << serialize_concept(ci.lhs) << " " << serialize_concept(ci.rhs)
           << ")\n";
    return os.str();
}

Ontology parse_ontology_file(const std::string& path, LogicTag* declaredLogic) {
    return parse_ontology(read_file(path), declaredLogic);
}

// ── ABox files ──────────────────────────────────────────────────────────

ABox parse_abox(const std::string& text) {
    Lexer lx(text);
    ABox out;
    while (!lx.at_end()) parse_assertion(lx, out);
    if (out.empty()) throw InvalidInput("an ABox must be nonempty");
    return out;
}

std::string serialize_abox(const ABox& abox) {
    std::ostringstream os;
    for (const auto& [c, a] : abox.concept_assertions()) os << c << "(" << a << ")\n";
    for (const auto& [r, a, b] : abox.role_assertions())
        os << r << "(" << a << ", " << b << ")\n";
    return os.str();
}

ABox parse_abox_file(const std::string& path) { return parse_abox(read_file(path)); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write '" + path + "'");
    out << content;
}

} // namespace hornfit
