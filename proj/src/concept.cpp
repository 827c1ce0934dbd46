#include "hornfit/concept.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_set>

namespace hornfit {

namespace {

size_t node_hash(const ConceptNode& n) {
    size_t h = static_cast<size_t>(n.kind()) * 0x9e3779b97f4a7c15ull;
    switch (n.kind()) {
    case ConceptNode::Kind::Top:
    case ConceptNode::Kind::Bot: break;
    case ConceptNode::Kind::Name:
        hash_combine(h, std::hash<std::string>{}(n.name()));
        break;
    case ConceptNode::Kind::And:
        for (const auto& k : n.conjuncts()) hash_combine(h, k->hash());
        break;
    case ConceptNode::Kind::Exists:
        hash_combine(h, std::hash<std::string>{}(n.role().name));
        hash_combine(h, n.role().inverted ? 1 : 0);
        hash_combine(h, n.child()->hash());
        break;
    case ConceptNode::Kind::Sim: break; // folded in via simKey_ by the factory
    }
    return h;
}

struct NodeHash {
    size_t operator()(const std::shared_ptr<ConceptNode>& n) const { return n->hash(); }
};
struct NodeEq {
    bool operator()(const std::shared_ptr<ConceptNode>& a,
                    const std::shared_ptr<ConceptNode>& b) const {
        return ConceptNode::compare(*a, *b) == 0;
    }
};

} // namespace

class ConceptFactory {
public:
    static ConceptFactory& instance() {
        static ConceptFactory f;
        return f;
    }

    Concept intern(std::shared_ptr<ConceptNode> n) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = pool_.find(n);
        if (it != pool_.end()) return *it;
        pool_.insert(n);
        return n;
    }

    static std::shared_ptr<ConceptNode> make() {
        return std::shared_ptr<ConceptNode>(new ConceptNode());
    }

    static void finish(ConceptNode& n) { n.hash_ = node_hash(n); }

    static ConceptNode& mut(ConceptNode& n) { return n; }

private:
    std::mutex mutex_;
    std::unordered_set<std::shared_ptr<ConceptNode>, NodeHash, NodeEq> pool_;
};

namespace {

int kind_rank(ConceptNode::Kind k) { return static_cast<int>(k); }

} // namespace

int ConceptNode::compare(const ConceptNode& a, const ConceptNode& b) {
    if (&a == &b) return 0;
    if (kind_rank(a.kind_) != kind_rank(b.kind_))
        return kind_rank(a.kind_) < kind_rank(b.kind_) ? -1 : 1;
    switch (a.kind_) {
    case Kind::Top:
    case Kind::Bot: return 0;
    case Kind::Name: return a.name_.compare(b.name_);
    case Kind::And: {
        size_t n = std::min(a.kids_.size(), b.kids_.size());
        for (size_t i = 0; i < n; ++i)
            if (int c = concept_compare(a.kids_[i], b.kids_[i]); c != 0) return c;
        if (a.kids_.size() != b.kids_.size())
            return a.kids_.size() < b.kids_.size() ? -1 : 1;
        return 0;
    }
    case Kind::Exists: {
        if (int c = a.role_.name.compare(b.role_.name); c != 0) return c;
        if (a.role_.inverted != b.role_.inverted) return a.role_.inverted ? 1 : -1;
        return concept_compare(a.kids_[0], b.kids_[0]);
    }
    case Kind::Sim: return a.simKey_.compare(b.simKey_);
    }
    return 0;
}

int concept_compare(const Concept& a, const Concept& b) {
    if (a.get() == b.get()) return 0;
    return ConceptNode::compare(*a, *b);
}

Concept concept_top() {
    static Concept top = [] {
        auto n = ConceptFactory::make();
        n->kind_ = ConceptNode::Kind::Top;
        ConceptFactory::finish(*n);
        return ConceptFactory::instance().intern(n);
    }();
    return top;
}

Concept concept_bot() {
    static Concept bot = [] {
        auto n = ConceptFactory::make();
        n->kind_ = ConceptNode::Kind::Bot;
        n->usesBot_ = true;
        ConceptFactory::finish(*n);
        return ConceptFactory::instance().intern(n);
    }();
    return bot;
}

Concept concept_name(const std::string& name) {
    auto n = ConceptFactory::make();
    n->kind_ = ConceptNode::Kind::Name;
    n->name_ = name;
    ConceptFactory::finish(*n);
    return ConceptFactory::instance().intern(n);
}

Concept concept_and(std::vector<Concept> parts) {
    std::vector<Concept> flat;
    for (auto& p : parts) {
        if (p->kind() == ConceptNode::Kind::And)
            flat.insert(flat.end(), p->conjuncts().begin(), p->conjuncts().end());
        else if (p->kind() != ConceptNode::Kind::Top)
            flat.push_back(std::move(p));
    }
    std::sort(flat.begin(), flat.end(),
              [](const Concept& a, const Concept& b) { return concept_compare(a, b) < 0; });
    flat.erase(std::unique(flat.begin(), flat.end(),
                           [](const Concept& a, const Concept& b) { return a.get() == b.get(); }),
               flat.end());
    if (flat.empty()) return concept_top();
    if (flat.size() == 1) return flat[0];

    auto n = ConceptFactory::make();
    n->kind_ = ConceptNode::Kind::And;
    n->kids_ = std::move(flat);
    for (const auto& k : n->kids_) {
        n->roleDepth_ = std::max(n->roleDepth_, k->role_depth());
        n->usesBot_ |= k->uses_bot();
        n->usesInverse_ |= k->uses_inverse();
        n->usesSim_ |= k->uses_sim();
    }
    ConceptFactory::finish(*n);
    return ConceptFactory::instance().intern(n);
}

Concept concept_and(const Concept& a, const Concept& b) {
    return concept_and(std::vector<Concept>{a, b});
}

Concept concept_exists(const Role& r, const Concept& c) {
    auto n = ConceptFactory::make();
    n->kind_ = ConceptNode::Kind::Exists;
    n->role_ = r;
    n->kids_ = {c};
    n->roleDepth_ = 1 + c->role_depth();
    n->usesBot_ = c->uses_bot();
    n->usesInverse_ = r.inverted || c->uses_inverse();
    n->usesSim_ = c->uses_sim();
    ConceptFactory::finish(*n);
    return ConceptFactory::instance().intern(n);
}

Concept concept_sim(LogicTag tag, Interpretation interp, ElemId point) {
    if (tag.bottom)
        throw InvalidInput("simulation quantifier tag must be el or eli");
    if (interp.size() == 0)
        throw InvalidInput("simulation quantifier payload must be nonempty");
    if (point >= interp.size())
        throw InvalidInput("simulation quantifier point outside payload domain");
    auto n = ConceptFactory::make();
    n->kind_ = ConceptNode::Kind::Sim;
    n->simTag_ = tag;
    n->simPoint_ = point;
    n->usesSim_ = true;
    n->usesInverse_ = tag.inverses;
    std::string pointName = interp.element_name(point);
    n->simKey_ = to_string(tag) + "|" + pointName + "|" + interp.canonical_key();
    n->simInterp_ = std::make_shared<const Interpretation>(std::move(interp));
    n->hash_ = std::hash<std::string>{}(n->simKey_);
    return ConceptFactory::instance().intern(n);
}

bool concept_in_logic(const Concept& c, LogicTag l, bool allowSim) {
    if (c->uses_bot() && !l.bottom) return false;
    if (c->uses_inverse() && !l.inverses) return false;
    if (c->uses_sim() && !allowSim) return false;
    return true;
}

void collect_signature(const Concept& c, Signature& sig) {
    switch (c->kind()) {
    case ConceptNode::Kind::Top:
    case ConceptNode::Kind::Bot: break;
    case ConceptNode::Kind::Name: sig.concepts.insert(c->name()); break;
    case ConceptNode::Kind::And:
        for (const auto& k : c->conjuncts()) collect_signature(k, sig);
        break;
    case ConceptNode::Kind::Exists:
        sig.roles.insert(c->role().name);
        collect_signature(c->child(), sig);
        break;
    case ConceptNode::Kind::Sim:
        sig.merge(c->sim_interp().signature());
        break;
    }
}

} // namespace hornfit
