#include "reasoner/engine.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "support/error.hpp"

namespace semnet {

namespace {

// Join support: per-relation postings plus subject/object access paths.
class FactIndex {
public:
    void add(const Fact* f) {
        by_rel_[f->relation].push_back(f);
        by_subj_[{f->relation, f->subject}].push_back(f);
        by_obj_[{f->relation, f->object}].push_back(f);
    }

    static const std::vector<const Fact*> kEmpty;

    const std::vector<const Fact*>& relation(Relation r) const {
        auto it = by_rel_.find(r);
        return it == by_rel_.end() ? kEmpty : it->second;
    }
    const std::vector<const Fact*>& subject(Relation r, const std::string& s) const {
        auto it = by_subj_.find({r, s});
        return it == by_subj_.end() ? kEmpty : it->second;
    }
    const std::vector<const Fact*>& object(Relation r, const std::string& o) const {
        auto it = by_obj_.find({r, o});
        return it == by_obj_.end() ? kEmpty : it->second;
    }

private:
    std::map<Relation, std::vector<const Fact*>> by_rel_;
    std::map<std::pair<Relation, std::string>, std::vector<const Fact*>> by_subj_;
    std::map<std::pair<Relation, std::string>, std::vector<const Fact*>> by_obj_;
};

const std::vector<const Fact*> FactIndex::kEmpty;

using Bindings = std::map<std::string, std::string>;

bool bind(Bindings& b, const std::string& var, const std::string& value,
          std::vector<std::string>& undo) {
    auto it = b.find(var);
    if (it != b.end()) return it->second == value;
    b.emplace(var, value);
    undo.push_back(var);
    return true;
}

// Matches body atoms depth-first. The atom at delta_pos draws candidates
// from the delta only, which makes repeated evaluation semi-naive.
class RuleMatcher {
public:
    RuleMatcher(const FactIndex& index, const std::vector<const Fact*>& delta)
        : index_(index), delta_(delta) {}

    template <typename Callback>
    void run(const Rule& rule, std::size_t delta_pos, Callback&& emit) {
        rule_ = &rule;
        delta_pos_ = delta_pos;
        premises_.assign(rule.body.size(), nullptr);
        bindings_.clear();
        descend(0, emit);
    }

private:
    template <typename Callback>
    void descend(std::size_t i, Callback& emit) {
        if (i == rule_->body.size()) {
            emit(bindings_, premises_);
            return;
        }
        const Atom& atom = rule_->body[i];
        const auto* subj = lookup(atom.left);
        const auto* obj = lookup(atom.right);

        auto try_fact = [&](const Fact* f) {
            if (f->relation != atom.relation) return;
            std::vector<std::string> undo;
            if (bind(bindings_, atom.left, f->subject, undo) &&
                bind(bindings_, atom.right, f->object, undo)) {
                premises_[i] = f;
                descend(i + 1, emit);
            }
            for (const auto& v : undo) bindings_.erase(v);
        };

        if (i == delta_pos_) {
            for (const Fact* f : delta_) {
                if (subj && f->subject != *subj) continue;
                if (obj && f->object != *obj) continue;
                try_fact(f);
            }
            return;
        }
        const std::vector<const Fact*>& candidates =
            subj ? index_.subject(atom.relation, *subj)
                 : (obj ? index_.object(atom.relation, *obj) : index_.relation(atom.relation));
        for (const Fact* f : candidates) {
            if (subj && obj && f->object != *obj) continue;
            try_fact(f);
        }
    }

    const std::string* lookup(const std::string& var) const {
        auto it = bindings_.find(var);
        return it == bindings_.end() ? nullptr : &it->second;
    }

    const FactIndex& index_;
    const std::vector<const Fact*>& delta_;
    const Rule* rule_ = nullptr;
    std::size_t delta_pos_ = 0;
    Bindings bindings_;
    std::vector<const Fact*> premises_;
};

// Evaluation state shared by the strata. Pointers into the repository
// fact set stay valid: inferred insertions never displace existing nodes.
struct Evaluation {
    Repository repo;
    FactIndex index;
    std::size_t inferred = 0;

    explicit Evaluation(Repository r) : repo(std::move(r)) {
        for (const auto& fact : repo.facts()) index.add(&fact);
    }

    const Fact* try_insert(Fact fact) {
        if (repo.find_triple(fact.subject, fact.relation, fact.object)) return nullptr;
        repo.add_fact_raw(fact);
        const Fact* stored = repo.find_triple(fact.subject, fact.relation, fact.object);
        index.add(stored);
        ++inferred;
        return stored;
    }

    // Runs one stratum to fixpoint; returns the pass count. Matches are
    // collected first and inserted after each rule pass so the index is
    // never mutated mid-iteration.
    std::size_t saturate(const std::vector<Rule>& rules, std::vector<const Fact*> delta) {
        std::size_t passes = 0;
        do {
            ++passes;
            std::vector<const Fact*> next;
            RuleMatcher matcher(index, delta);
            for (const auto& rule : rules) {
                std::vector<Fact> pending;
                for (std::size_t pos = 0; pos < rule.body.size(); ++pos) {
                    matcher.run(rule, pos, [&](const Bindings& b,
                                               const std::vector<const Fact*>& premises) {
                        Fact fact;
                        fact.subject = b.at(rule.head.left);
                        fact.relation = rule.head.relation;
                        fact.object = b.at(rule.head.right);
                        fact.provenance = Provenance::Inferred;
                        Derivation d;
                        d.rule_id = rule.id;
                        for (const Fact* p : premises) d.premises.push_back(p->key());
                        fact.derivation = std::move(d);
                        pending.push_back(std::move(fact));
                    });
                }
                for (auto& fact : pending)
                    if (const Fact* added = try_insert(std::move(fact)))
                        next.push_back(added);
            }
            delta = std::move(next);
        } while (!delta.empty());
        return passes;
    }
};

// User rule lists are augmented with the algebra-generated rules so the
// fixpoint always honors inverse, symmetric and transitive closure.
std::vector<Rule> with_structural_rules(const std::vector<Rule>& rules) {
    std::vector<Rule> out = rules;
    std::set<std::string> ids;
    for (const auto& r : rules) ids.insert(r.id);
    for (const auto& r : structural_rules())
        if (!ids.count(r.id)) out.push_back(r);
    return out;
}

// seed_keys == nullptr means a full evaluation: every fact is delta.
ClosureResult run(Repository repo, const std::set<std::string>* seed_keys,
                  const std::vector<Rule>& rules) {
    std::vector<Rule> relation_rules;
    std::vector<Rule> incorrectness_stratum;
    for (const auto& rule : with_structural_rules(rules))
        (is_incorrectness_rule(rule) ? incorrectness_stratum : relation_rules)
            .push_back(rule);

    Evaluation eval(std::move(repo));

    std::vector<const Fact*> delta;
    for (const auto& fact : eval.repo.facts())
        if (!seed_keys || seed_keys->count(fact.key())) delta.push_back(&fact);

    ClosureResult result;
    result.rounds = eval.saturate(relation_rules, std::move(delta));

    if (!incorrectness_stratum.empty()) {
        // Final stratum; a fresh naive pass over everything is cheap and
        // keeps incremental runs equivalent to full recomputation.
        std::vector<const Fact*> all;
        for (const auto& fact : eval.repo.facts()) all.push_back(&fact);
        eval.saturate(incorrectness_stratum, std::move(all));
    }

    result.new_count = eval.inferred;
    result.repo = std::move(eval.repo);
    return result;
}

} // namespace

ClosureResult closure(const Repository& repo, const std::vector<Rule>& rules) {
    return run(repo, nullptr, rules);
}

ClosureResult incremental_update(const Repository& repo, const std::vector<Fact>& new_facts,
                                 const std::vector<Rule>& rules) {
    Repository work = repo;
    for (const auto& fact : new_facts) work.add_fact(fact); // mirrors included

    // Delta = triples absent from the input snapshot; the precondition
    // (repo at fixpoint) makes this equivalent to full recomputation.
    std::set<std::string> seed_keys;
    for (const auto& fact : work.facts())
        if (!repo.find_triple(fact.subject, fact.relation, fact.object))
            seed_keys.insert(fact.key());

    return run(std::move(work), &seed_keys, rules);
}

std::vector<Fact> check_consistency(const Repository& repo) {
    FactIndex index;
    for (const auto& fact : repo.facts()) index.add(&fact);
    std::vector<const Fact*> all;
    for (const auto& fact : repo.facts()) all.push_back(&fact);

    // Unordered-pair findings: prefer the orientation with subject <= object.
    std::map<std::pair<std::string, std::string>, Fact> findings;
    RuleMatcher matcher(index, all);
    for (const auto& rule : incorrectness_rules()) {
        matcher.run(rule, 0, [&](const Bindings& b, const std::vector<const Fact*>& premises) {
            Fact fact;
            fact.subject = b.at(rule.head.left);
            fact.relation = rule.head.relation;
            fact.object = b.at(rule.head.right);
            fact.provenance = Provenance::Inferred;
            Derivation d;
            d.rule_id = rule.id;
            for (const Fact* p : premises) d.premises.push_back(p->key());
            fact.derivation = std::move(d);

            auto pair = std::minmax(fact.subject, fact.object);
            auto key = std::make_pair(std::string(relation_name(fact.relation)) + pair.first,
                                      pair.second);
            auto it = findings.find(key);
            if (it == findings.end()) {
                findings.emplace(key, std::move(fact));
            } else if (fact.subject <= fact.object && it->second.subject > it->second.object) {
                it->second = std::move(fact);
            }
        });
    }
    std::vector<Fact> out;
    for (auto& [key, fact] : findings) out.push_back(std::move(fact));
    return out;
}

namespace {

void render_node(const Repository& repo, const Fact& fact,
                 const std::map<std::string, const Fact*>& by_key, int depth,
                 std::set<std::string>& seen, std::ostringstream& out) {
    out << std::string(static_cast<std::size_t>(depth) * 2, ' ') << fact.key() << " ["
        << provenance_name(fact.provenance);
    if (fact.derivation) out << " via " << fact.derivation->rule_id;
    out << "]\n";
    if (!fact.derivation) return;
    if (!seen.insert(fact.key()).second) return; // guard against trace loops
    for (const auto& premise_key : fact.derivation->premises) {
        auto it = by_key.find(premise_key);
        if (it == by_key.end()) {
            out << std::string(static_cast<std::size_t>(depth + 1) * 2, ' ') << premise_key
                << " [missing]\n";
            continue;
        }
        render_node(repo, *it->second, by_key, depth + 1, seen, out);
    }
    seen.erase(fact.key());
}

} // namespace

std::string render_derivation(const Repository& repo, const Fact& fact) {
    std::map<std::string, const Fact*> by_key;
    for (const auto& f : repo.facts()) by_key.emplace(f.key(), &f);
    std::ostringstream out;
    std::set<std::string> seen;
    render_node(repo, fact, by_key, 0, seen, out);
    return out.str();
}

} // namespace semnet
