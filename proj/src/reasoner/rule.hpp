#ifndef SEMNET_REASONER_RULE_HPP
#define SEMNET_REASONER_RULE_HPP

#include <string>
#include <vector>

#include "core/relation.hpp"

namespace semnet {

// One schematic relation atom; left/right are variable names.
struct Atom {
    Relation relation;
    std::string left;
    std::string right;

    bool operator==(const Atom&) const = default;
};

// Horn-style implication body => head. Range-restricted: every head
// variable occurs in the body.
struct Rule {
    std::string id;
    std::vector<Atom> body;
    Atom head;
};

// Text form `id: rel(X,Y) & rel(Y,Z) => rel(X,Z)`.
std::string format_rule(const Rule& rule);
std::string format_rules(const std::vector<Rule>& rules);

// Parses one rule per line; '#' starts a comment, blank lines ignored.
// Throws Error{ParseError} with a line reference, Error{UnknownRelation}
// for bad relation names, Error{InvalidData} for range violations.
std::vector<Rule> parse_rules(const std::string& text);

// The shipped rule set: the five thematic propagation rules (the
// disjunctive one split in two), the two part/requires bridging rules,
// structural rules generated from the relation algebra, and the two
// incorrectness rules last.
const std::vector<Rule>& default_rules();

// Serialized form of default_rules(), as emitted by `rules --dump`.
std::string default_rules_text();

// Inverse/symmetric/transitive rules generated from the algebra table.
// The engine folds these into any user-supplied rule list.
const std::vector<Rule>& structural_rules();

// The consistency-monitor subset (rules concluding incorrectness).
std::vector<Rule> incorrectness_rules();

bool is_incorrectness_rule(const Rule& rule);

} // namespace semnet

#endif
