#include "report/experiment.hpp"

#include <sstream>

#include <json.hpp>

#include "core/repository_json.hpp"
#include "reasoner/engine.hpp"
#include "reasoner/rule.hpp"
#include "support/error.hpp"

namespace semnet::report {

using nlohmann::json;

namespace {

std::vector<Fact> parse_batch(const json& arr, const char* what) {
    if (!arr.is_array())
        throw Error(ErrorCode::FixtureError, std::string(what) + " must be a JSON array");
    std::vector<Fact> out;
    for (const auto& entry : arr) {
        Fact fact;
        try {
            fact.subject = entry.at("from").get<std::string>();
            fact.relation = relation_from_name(entry.at("type").get<std::string>());
            fact.object = entry.at("to").get<std::string>();
        } catch (const json::exception&) {
            throw Error(ErrorCode::FixtureError,
                        std::string(what) + " entries need from/type/to fields");
        }
        fact.provenance = Provenance::Asserted;
        out.push_back(std::move(fact));
    }
    return out;
}

StageReport stage_report(char stage, std::size_t before_total, std::size_t pre_closure_total,
                         const Repository& closed) {
    StageReport report;
    report.stage = stage;
    report.facts_added = pre_closure_total - before_total;
    report.total_after_closure = closed.fact_count();
    report.inferred_count = closed.count_by_provenance(Provenance::Inferred);
    for (const auto& fact : closed.facts())
        ++report.per_relation[std::string(relation_name(fact.relation))];
    return report;
}

} // namespace

ExperimentFixture experiment_fixture_from_json(const std::string& text) {
    ExperimentFixture fixture;
    try {
        fixture.repo = repository_from_json(text);
    } catch (const Error& e) {
        throw Error(ErrorCode::FixtureError, std::string("bad fixture repository: ") + e.what());
    }

    json doc = json::parse(text);
    if (!doc.contains("experiment")) return fixture;
    const json& exp = doc.at("experiment");
    if (!exp.is_object())
        throw Error(ErrorCode::FixtureError, "'experiment' must be a JSON object");

    if (exp.contains("heuristic") && !exp.at("heuristic").is_null()) {
        const json& h = exp.at("heuristic");
        HeuristicConfig config;
        config.keyword_threshold = h.value("keyword_threshold", config.keyword_threshold);
        if (h.contains("compared_attributes")) {
            config.compared_attributes.clear();
            for (const auto& a : h.at("compared_attributes"))
                config.compared_attributes.push_back(a.get<std::string>());
        }
        fixture.heuristic = config;
    }
    if (exp.contains("author_facts"))
        fixture.author_facts = parse_batch(exp.at("author_facts"), "author_facts");
    if (exp.contains("missing_facts"))
        fixture.missing_facts = parse_batch(exp.at("missing_facts"), "missing_facts");
    return fixture;
}

ExperimentFixture load_experiment_fixture(const std::string& path) {
    return experiment_fixture_from_json(read_file(path));
}

ExperimentResult run_experiment(const ExperimentFixture& fixture) {
    const auto& rules = default_rules();
    ExperimentResult result;
    result.heuristic_used = fixture.heuristic.value_or(HeuristicConfig{});

    // Stage A: structure and taxonomy only.
    Repository seeded = structural_and_taxonomic_seed(fixture.repo);
    std::size_t pre = seeded.fact_count();
    Repository current = closure(seeded, rules).repo;
    result.stages.push_back(stage_report('A', 0, pre, current));

    // Stage B: heuristic conjectures.
    std::size_t before = current.fact_count();
    Repository with_heuristics =
        fixture.heuristic ? heuristic_seed(current, *fixture.heuristic) : current;
    pre = with_heuristics.fact_count();
    current = closure(with_heuristics, rules).repo;
    result.stages.push_back(stage_report('B', before, pre, current));

    // Stage C: the author's sparse thematic relations.
    before = current.fact_count();
    Repository with_author = current;
    for (const auto& fact : fixture.author_facts) with_author.add_fact(fact);
    pre = with_author.fact_count();
    current = closure(with_author, rules).repo;
    result.stages.push_back(stage_report('C', before, pre, current));

    // Stage D: relations identified as missing.
    before = current.fact_count();
    Repository with_missing = current;
    for (const auto& fact : fixture.missing_facts) with_missing.add_fact(fact);
    pre = with_missing.fact_count();
    current = closure(with_missing, rules).repo;
    result.stages.push_back(stage_report('D', before, pre, current));

    result.final_repo = std::move(current);
    return result;
}

std::string experiment_report_text(const ExperimentResult& result) {
    std::ostringstream out;
    out << "stage  added  total  inferred\n";
    for (const auto& stage : result.stages) {
        out << "  " << stage.stage << "    " << stage.facts_added << "      "
            << stage.total_after_closure << "    " << stage.inferred_count << "\n";
    }
    const auto& last = result.stages.back();
    out << "relation histogram after stage " << last.stage << ":\n";
    for (const auto& [relation, count] : last.per_relation)
        out << "  " << relation << ": " << count << "\n";
    return out.str();
}

std::string experiment_report_json(const ExperimentResult& result) {
    json doc = json::object();
    json stages = json::array();
    for (const auto& stage : result.stages) {
        json s = json::object();
        s["stage"] = std::string(1, stage.stage);
        s["facts_added"] = stage.facts_added;
        s["total_after_closure"] = stage.total_after_closure;
        s["inferred_count"] = stage.inferred_count;
        json hist = json::object();
        for (const auto& [relation, count] : stage.per_relation) hist[relation] = count;
        s["per_relation"] = std::move(hist);
        stages.push_back(std::move(s));
    }
    doc["stages"] = std::move(stages);
    json heuristic = json::object();
    heuristic["keyword_threshold"] = result.heuristic_used.keyword_threshold;
    heuristic["compared_attributes"] = result.heuristic_used.compared_attributes;
    doc["heuristic"] = std::move(heuristic);
    return doc.dump(2) + "\n";
}

} // namespace semnet::report
