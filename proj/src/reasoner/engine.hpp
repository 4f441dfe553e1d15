#ifndef SEMNET_REASONER_ENGINE_HPP
#define SEMNET_REASONER_ENGINE_HPP

#include <vector>

#include "core/model.hpp"
#include "reasoner/rule.hpp"

namespace semnet {

struct ClosureResult {
    Repository repo;        // input facts plus everything inferred
    std::size_t rounds = 0; // main-stratum semi-naive passes, >= 1
    std::size_t new_count = 0;
};

// Least fixpoint of the rule set over the repository's ground facts.
// Rules concluding incorrectness run in a final stratum so their output
// never feeds relation-producing bodies. Deterministic as a fact set;
// every inferred fact carries a (rule id, premises) trace.
ClosureResult closure(const Repository& repo, const std::vector<Rule>& rules);

// Equivalent to closure(repo + new_facts, rules) but seeds the semi-naive
// delta with just the additions; the input must already be at fixpoint.
ClosureResult incremental_update(const Repository& repo, const std::vector<Fact>& new_facts,
                                 const std::vector<Rule>& rules);

// Runs only the incorrectness detection rules over the current facts and
// returns the findings, one per unordered subject/object pair, each with
// its derivation. Does not mutate the repository.
std::vector<Fact> check_consistency(const Repository& repo);

// Indented proof tree for a derived fact, following premise keys down to
// ground facts. Used by the consistency and experiment reports.
std::string render_derivation(const Repository& repo, const Fact& fact);

} // namespace semnet

#endif
