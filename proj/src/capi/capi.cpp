#include "semnet/semnet.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "classify/classifier.hpp"
#include "core/model.hpp"
#include "core/repository_json.hpp"
#include "query/context.hpp"
#include "query/query.hpp"
#include "rdf/store.hpp"
#include "reasoner/engine.hpp"
#include "reasoner/heuristic.hpp"
#include "reasoner/rule.hpp"
#include "report/consistency.hpp"
#include "report/dot.hpp"
#include "report/experiment.hpp"
#include "segment/segmenter.hpp"
#include "support/error.hpp"

struct semnet_repo {
    semnet::Repository value;
};

struct semnet_rules {
    std::vector<semnet::Rule> value;
};

struct semnet_store {
    semnet::rdf::StatementStore value;
};

namespace {

thread_local std::string t_last_error;

semnet_status status_of(semnet::ErrorCode code) {
    using semnet::ErrorCode;
    switch (code) {
        case ErrorCode::UnknownRelation: return SEMNET_ERR_UNKNOWN_RELATION;
        case ErrorCode::UnknownObject: return SEMNET_ERR_UNKNOWN_OBJECT;
        case ErrorCode::UnknownNode: return SEMNET_ERR_UNKNOWN_NODE;
        case ErrorCode::UnknownPrefix: return SEMNET_ERR_UNKNOWN_PREFIX;
        case ErrorCode::ParseError: return SEMNET_ERR_PARSE;
        case ErrorCode::IoError: return SEMNET_ERR_IO;
        case ErrorCode::ResourceMismatch:
        case ErrorCode::IncompleteReification:
        case ErrorCode::EmptyInput:
        case ErrorCode::FixtureError:
        case ErrorCode::InvalidData: return SEMNET_ERR_DATA;
    }
    return SEMNET_ERR_INTERNAL;
}

// Runs the body and funnels exceptions into status codes + last_error.
template <typename Fn>
semnet_status guarded(Fn&& fn) {
    try {
        fn();
        return SEMNET_OK;
    } catch (const semnet::Error& e) {
        t_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return SEMNET_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

semnet_status require(bool ok, const char* message) {
    if (ok) return SEMNET_OK;
    t_last_error = message;
    return SEMNET_ERR_INVALID_ARGUMENT;
}

// Taxonomy input: a bare node array, {"taxonomy": [...]}, or a whole
// repository file.
semnet::Taxonomy load_taxonomy_file(const std::string& path) {
    std::string text = semnet::read_file(path);
    std::string wrapped = text;
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[')
        wrapped = "{\"taxonomy\":" + text + "}";
    return semnet::repository_from_json(wrapped).taxonomy();
}

std::vector<std::string> load_document_tokens(const std::string& path) {
    std::string text = semnet::read_file(path);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[')
        return semnet::classify::tokens_from_json(text);
    return semnet::classify::tokenize(text);
}

} // namespace

extern "C" {

const char* semnet_version(void) { return "0.1.0"; }

const char* semnet_last_error(void) { return t_last_error.c_str(); }

void semnet_string_free(char* s) { std::free(s); }

/* --- repository ------------------------------------------------------ */

semnet_status semnet_repo_load_file(const char* path, semnet_repo** out) {
    if (auto s = require(path && out, "path and out must be non-NULL")) return s;
    return guarded([&] { *out = new semnet_repo{semnet::load_repository(path)}; });
}

semnet_status semnet_repo_load_json(const char* json_text, semnet_repo** out) {
    if (auto s = require(json_text && out, "json_text and out must be non-NULL")) return s;
    return guarded([&] { *out = new semnet_repo{semnet::repository_from_json(json_text)}; });
}

semnet_status semnet_repo_to_json(const semnet_repo* repo, char** out_json) {
    if (auto s = require(repo && out_json, "repo and out_json must be non-NULL")) return s;
    return guarded([&] { *out_json = dup_string(semnet::repository_to_json(repo->value)); });
}

semnet_status semnet_repo_save_file(const semnet_repo* repo, const char* path) {
    if (auto s = require(repo && path, "repo and path must be non-NULL")) return s;
    return guarded([&] { semnet::save_repository(repo->value, path); });
}

void semnet_repo_free(semnet_repo* repo) { delete repo; }

size_t semnet_repo_object_count(const semnet_repo* repo) {
    return repo ? repo->value.objects().size() : 0;
}

size_t semnet_repo_fact_count(const semnet_repo* repo) {
    return repo ? repo->value.fact_count() : 0;
}

semnet_status semnet_repo_add_fact(semnet_repo* repo, const char* subject,
                                   const char* relation, const char* object,
                                   const char* provenance) {
    if (auto s = require(repo && subject && relation && object,
                         "repo, subject, relation and object must be non-NULL"))
        return s;
    return guarded([&] {
        semnet::Fact fact;
        fact.subject = subject;
        fact.relation = semnet::relation_from_name(relation);
        fact.object = object;
        fact.provenance =
            provenance ? semnet::provenance_from_name(provenance) : semnet::Provenance::Asserted;
        repo->value.add_fact(std::move(fact));
    });
}

semnet_status semnet_repo_seed(semnet_repo* repo) {
    if (auto s = require(repo != nullptr, "repo must be non-NULL")) return s;
    return guarded([&] { repo->value = semnet::structural_and_taxonomic_seed(repo->value); });
}

semnet_status semnet_repo_heuristic_seed(semnet_repo* repo, double keyword_threshold,
                                         const char* const* attributes,
                                         size_t attribute_count) {
    if (auto s = require(repo != nullptr, "repo must be non-NULL")) return s;
    return guarded([&] {
        semnet::HeuristicConfig config;
        config.keyword_threshold = keyword_threshold;
        if (attributes) {
            config.compared_attributes.clear();
            for (size_t i = 0; i < attribute_count; ++i)
                config.compared_attributes.emplace_back(attributes[i]);
        }
        repo->value = semnet::heuristic_seed(repo->value, config);
    });
}

/* --- rule sets -------------------------------------------------------- */

semnet_status semnet_rules_default(semnet_rules** out) {
    if (auto s = require(out != nullptr, "out must be non-NULL")) return s;
    return guarded([&] { *out = new semnet_rules{semnet::default_rules()}; });
}

semnet_status semnet_rules_parse(const char* text, semnet_rules** out) {
    if (auto s = require(text && out, "text and out must be non-NULL")) return s;
    return guarded([&] { *out = new semnet_rules{semnet::parse_rules(text)}; });
}

semnet_status semnet_rules_load_file(const char* path, semnet_rules** out) {
    if (auto s = require(path && out, "path and out must be non-NULL")) return s;
    return guarded(
        [&] { *out = new semnet_rules{semnet::parse_rules(semnet::read_file(path))}; });
}

semnet_status semnet_rules_dump(const semnet_rules* rules, char** out_text) {
    if (auto s = require(rules && out_text, "rules and out_text must be non-NULL")) return s;
    return guarded([&] { *out_text = dup_string(semnet::format_rules(rules->value)); });
}

size_t semnet_rules_count(const semnet_rules* rules) {
    return rules ? rules->value.size() : 0;
}

void semnet_rules_free(semnet_rules* rules) { delete rules; }

/* --- reasoning -------------------------------------------------------- */

semnet_status semnet_repo_infer(semnet_repo* repo, const semnet_rules* rules,
                                size_t* rounds_out, size_t* inferred_out) {
    if (auto s = require(repo != nullptr, "repo must be non-NULL")) return s;
    return guarded([&] {
        const auto& rule_list = rules ? rules->value : semnet::default_rules();
        auto result = semnet::closure(repo->value, rule_list);
        if (rounds_out) *rounds_out = result.rounds;
        if (inferred_out) *inferred_out = result.new_count;
        repo->value = std::move(result.repo);
    });
}

semnet_status semnet_repo_check(const semnet_repo* repo, int as_json, char** report_out,
                                size_t* finding_count_out) {
    if (auto s = require(repo && report_out, "repo and report_out must be non-NULL")) return s;
    return guarded([&] {
        auto report = semnet::report::consistency_report(repo->value);
        if (finding_count_out) *finding_count_out = report.findings.size();
        *report_out = dup_string(as_json ? semnet::report::consistency_report_json(report)
                                         : semnet::report::consistency_report_text(report));
    });
}

semnet_status semnet_repo_export_dot(const semnet_repo* repo, int keep_mirrors,
                                     char** dot_out) {
    if (auto s = require(repo && dot_out, "repo and dot_out must be non-NULL")) return s;
    return guarded([&] {
        semnet::report::DotOptions options;
        options.dedup_mirrors = keep_mirrors == 0;
        *dot_out = dup_string(semnet::report::export_dot(repo->value, options));
    });
}

semnet_status semnet_experiment_run(const char* fixture_path, char** text_report_out,
                                    char** json_report_out) {
    if (auto s = require(fixture_path != nullptr, "fixture_path must be non-NULL")) return s;
    return guarded([&] {
        auto fixture = semnet::report::load_experiment_fixture(fixture_path);
        auto result = semnet::report::run_experiment(fixture);
        if (text_report_out)
            *text_report_out = dup_string(semnet::report::experiment_report_text(result));
        if (json_report_out)
            *json_report_out = dup_string(semnet::report::experiment_report_json(result));
    });
}

/* --- statement store and link contexts ------------------------------- */

semnet_status semnet_store_load_file(const char* path, semnet_store** out) {
    if (auto s = require(path && out, "path and out must be non-NULL")) return s;
    return guarded([&] { *out = new semnet_store{semnet::rdf::load_store(path)}; });
}

semnet_status semnet_store_load_json(const char* json_text, semnet_store** out) {
    if (auto s = require(json_text && out, "json_text and out must be non-NULL")) return s;
    return guarded([&] { *out = new semnet_store{semnet::rdf::store_from_json(json_text)}; });
}

semnet_status semnet_store_to_json(const semnet_store* store, char** out_json) {
    if (auto s = require(store && out_json, "store and out_json must be non-NULL")) return s;
    return guarded([&] { *out_json = dup_string(semnet::rdf::store_to_json(store->value)); });
}

void semnet_store_free(semnet_store* store) { delete store; }

semnet_status semnet_store_query(const semnet_store* store, const char* query_text,
                                 char** tsv_out) {
    if (auto s = require(store && query_text && tsv_out,
                         "store, query_text and tsv_out must be non-NULL"))
        return s;
    return guarded([&] {
        auto query = semnet::query::parse_query(query_text, store->value.prefixes());
        auto bindings = semnet::query::evaluate(store->value, query);
        *tsv_out = dup_string(semnet::query::bindings_to_tsv(bindings, store->value.prefixes()));
    });
}

semnet_status semnet_store_select_links(const semnet_store* store, const char* context_json,
                                        char** links_out, char** warnings_out) {
    if (auto s = require(store && context_json && links_out,
                         "store, context_json and links_out must be non-NULL"))
        return s;
    return guarded([&] {
        auto context = semnet::query::context_from_json(context_json);
        auto selection = semnet::query::select_links(store->value, context);
        std::ostringstream lines;
        for (const auto& link : selection.links) {
            lines << semnet::rdf::compact_iri(link.id, store->value.prefixes()) << '\t'
                  << semnet::rdf::compact_iri(link.from, store->value.prefixes()) << '\t'
                  << semnet::rdf::compact_iri(link.to, store->value.prefixes()) << '\t'
                  << semnet::rdf::compact_iri(link.arcrole, store->value.prefixes());
            for (const auto& title : link.titles) lines << "\t\"" << title << '"';
            lines << '\n';
        }
        *links_out = dup_string(lines.str());
        if (warnings_out) {
            std::string warnings;
            for (const auto& w : selection.warnings) warnings += w + "\n";
            *warnings_out = dup_string(warnings);
        }
    });
}

/* --- classification --------------------------------------------------- */

semnet_status semnet_classify_file(const char* vocab_path, const char* taxonomy_path,
                                   const char* document_path, double significance,
                                   int partition_size, const char* context_branch,
                                   char** report_out) {
    if (auto s = require(vocab_path && taxonomy_path && document_path && report_out,
                         "vocab, taxonomy, document and report_out must be non-NULL"))
        return s;
    return guarded([&] {
        auto vocab = semnet::classify::load_vocabulary(vocab_path);
        auto taxonomy = load_taxonomy_file(taxonomy_path);
        auto tokens = load_document_tokens(document_path);

        semnet::classify::ClassifierConfig config;
        config.significance = significance;
        config.partition_size = partition_size;
        if (context_branch) config.context_branch = context_branch;

        // Spotting follows the partition schedule: term sets applied in
        // narrowing order, each against the full token stream.
        auto sets = semnet::classify::partition_vocabulary(vocab, taxonomy, config);
        std::set<std::string> scheduled;
        for (const auto& set : sets) scheduled.insert(set.begin(), set.end());
        semnet::classify::Vocabulary active;
        for (const auto& entry : vocab)
            if (scheduled.count(entry.canonical)) active.push_back(entry);

        auto spotting = semnet::classify::spot_keywords(tokens, active);
        auto scores = semnet::classify::classify(spotting.spotted, vocab, taxonomy, config);

        std::ostringstream lines;
        lines.precision(6);
        for (const auto& ns : scores) lines << ns.node << '\t' << ns.score << '\n';
        *report_out = dup_string(lines.str());
    });
}

/* --- segmentation ----------------------------------------------------- */

semnet_status semnet_segment_file(const char* envelope_path, const char* triggers_path,
                                  double window, double min_pause, char** segments_out) {
    if (auto s = require(envelope_path && triggers_path && segments_out,
                         "envelope, triggers and segments_out must be non-NULL"))
        return s;
    return guarded([&] {
        auto env = semnet::seg::load_envelope(envelope_path);
        auto triggers = semnet::seg::load_triggers(triggers_path);
        semnet::seg::SegmenterConfig config;
        config.window = window;
        config.min_pause = min_pause;
        auto segments = semnet::seg::segment(env, triggers, config);
        std::ostringstream lines;
        for (const auto& s : segments)
            lines << s.start << '\t' << s.end << '\t' << s.trigger << '\n';
        *segments_out = dup_string(lines.str());
    });
}

} // extern "C"
