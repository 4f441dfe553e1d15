#ifndef SEMNET_REPORT_EXPERIMENT_HPP
#define SEMNET_REPORT_EXPERIMENT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/model.hpp"
#include "reasoner/heuristic.hpp"

namespace semnet::report {

// Fixture: a repository file with an optional "experiment" section holding
// the heuristic-stage config and the author/missing fact batches.
struct ExperimentFixture {
    Repository repo;
    std::optional<HeuristicConfig> heuristic;
    std::vector<Fact> author_facts;
    std::vector<Fact> missing_facts;
};

ExperimentFixture experiment_fixture_from_json(const std::string& text);
ExperimentFixture load_experiment_fixture(const std::string& path);

struct StageReport {
    char stage = 'A';
    std::size_t facts_added = 0; // batch size as materialized, pre-closure
    std::size_t total_after_closure = 0;
    std::size_t inferred_count = 0;
    std::map<std::string, std::size_t> per_relation;
};

struct ExperimentResult {
    std::vector<StageReport> stages; // A..D
    Repository final_repo;
    HeuristicConfig heuristic_used;
};

// Staged yield run: A seeds structure and taxonomy, B adds heuristic
// conjectures, C the author batch, D the misses; each stage closes under
// the default rules.
ExperimentResult run_experiment(const ExperimentFixture& fixture);

std::string experiment_report_text(const ExperimentResult& result);
std::string experiment_report_json(const ExperimentResult& result);

} // namespace semnet::report

#endif
