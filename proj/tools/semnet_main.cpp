// semnet command-line front end. Everything goes through the shared
// library's C API, the same surface other language bindings get.

#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "semnet/semnet.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

int fail(const char* what) {
    std::fprintf(stderr, "semnet: %s: %s\n", what, semnet_last_error());
    return kExitData;
}

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { semnet_string_free(ptr); }
    const char* get() const { return ptr ? ptr : ""; }
};

struct RepoHandle {
    semnet_repo* ptr = nullptr;
    ~RepoHandle() { semnet_repo_free(ptr); }
};

struct RulesHandle {
    semnet_rules* ptr = nullptr;
    ~RulesHandle() { semnet_rules_free(ptr); }
};

struct StoreHandle {
    semnet_store* ptr = nullptr;
    ~StoreHandle() { semnet_store_free(ptr); }
};

std::string read_text_file(const std::string& path, bool& ok) {
    ok = false;
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) return {};
    std::string content;
    char buffer[4096];
    size_t n;
    while ((n = std::fread(buffer, 1, sizeof buffer, f)) > 0) content.append(buffer, n);
    std::fclose(f);
    ok = true;
    return content;
}

int run_ingest(const std::string& input, const std::string& output) {
    RepoHandle repo;
    if (semnet_repo_load_file(input.c_str(), &repo.ptr)) return fail("ingest");
    std::printf("ok: %zu objects, %zu facts\n", semnet_repo_object_count(repo.ptr),
                semnet_repo_fact_count(repo.ptr));
    if (!output.empty() && semnet_repo_save_file(repo.ptr, output.c_str()))
        return fail("save");
    return kExitOk;
}

int run_infer(const std::string& input, const std::string& output,
              const std::string& rules_path, bool seed) {
    RepoHandle repo;
    if (semnet_repo_load_file(input.c_str(), &repo.ptr)) return fail("load");
    if (seed && semnet_repo_seed(repo.ptr)) return fail("seed");

    RulesHandle rules;
    if (!rules_path.empty() && semnet_rules_load_file(rules_path.c_str(), &rules.ptr))
        return fail("rules");

    size_t rounds = 0, inferred = 0;
    if (semnet_repo_infer(repo.ptr, rules.ptr, &rounds, &inferred)) return fail("infer");
    std::printf("inferred %zu new facts in %zu rounds; %zu facts total\n", inferred, rounds,
                semnet_repo_fact_count(repo.ptr));
    if (!output.empty() && semnet_repo_save_file(repo.ptr, output.c_str()))
        return fail("save");
    return kExitOk;
}

int run_check(const std::string& input, bool as_json) {
    RepoHandle repo;
    if (semnet_repo_load_file(input.c_str(), &repo.ptr)) return fail("load");
    OwnedString report;
    size_t findings = 0;
    if (semnet_repo_check(repo.ptr, as_json ? 1 : 0, &report.ptr, &findings))
        return fail("check");
    std::fputs(report.get(), stdout);
    return findings == 0 ? kExitOk : kExitData;
}

int run_classify(const std::string& vocab, const std::string& taxonomy,
                 const std::string& text, double theta, int partition,
                 const std::string& branch) {
    OwnedString report;
    if (semnet_classify_file(vocab.c_str(), taxonomy.c_str(), text.c_str(), theta, partition,
                             branch.empty() ? nullptr : branch.c_str(), &report.ptr))
        return fail("classify");
    std::fputs(report.get(), stdout);
    return kExitOk;
}

int run_segment(const std::string& envelope, const std::string& triggers, double window,
                double min_pause) {
    OwnedString segments;
    if (semnet_segment_file(envelope.c_str(), triggers.c_str(), window, min_pause,
                            &segments.ptr))
        return fail("segment");
    std::fputs(segments.get(), stdout);
    return kExitOk;
}

int run_query(const std::string& store_path, const std::string& query_path,
              const std::string& context_path) {
    StoreHandle store;
    if (semnet_store_load_file(store_path.c_str(), &store.ptr)) return fail("load store");
    if (!query_path.empty()) {
        bool ok = false;
        std::string query_text = read_text_file(query_path, ok);
        if (!ok) {
            std::fprintf(stderr, "semnet: cannot read query file %s\n", query_path.c_str());
            return kExitData;
        }
        OwnedString tsv;
        if (semnet_store_query(store.ptr, query_text.c_str(), &tsv.ptr)) return fail("query");
        std::fputs(tsv.get(), stdout);
        return kExitOk;
    }
    bool ok = false;
    std::string context_json = read_text_file(context_path, ok);
    if (!ok) {
        std::fprintf(stderr, "semnet: cannot read context file %s\n", context_path.c_str());
        return kExitData;
    }
    OwnedString links, warnings;
    if (semnet_store_select_links(store.ptr, context_json.c_str(), &links.ptr, &warnings.ptr))
        return fail("select links");
    std::fputs(links.get(), stdout);
    if (warnings.ptr && *warnings.get()) std::fputs(warnings.get(), stderr);
    return kExitOk;
}

int run_experiment(const std::string& fixture, const std::string& report_path) {
    OwnedString text, json;
    if (semnet_experiment_run(fixture.c_str(), &text.ptr, &json.ptr))
        return fail("experiment");
    std::fputs(text.get(), stdout);
    std::FILE* f = std::fopen(report_path.c_str(), "wb");
    if (!f) {
        std::fprintf(stderr, "semnet: cannot write report %s\n", report_path.c_str());
        return kExitData;
    }
    std::fputs(json.get(), f);
    std::fclose(f);
    std::printf("report written to %s\n", report_path.c_str());
    return kExitOk;
}

int run_export_dot(const std::string& input, const std::string& output, bool keep_mirrors) {
    RepoHandle repo;
    if (semnet_repo_load_file(input.c_str(), &repo.ptr)) return fail("load");
    OwnedString dot;
    if (semnet_repo_export_dot(repo.ptr, keep_mirrors ? 1 : 0, &dot.ptr))
        return fail("export");
    if (output.empty()) {
        std::fputs(dot.get(), stdout);
        return kExitOk;
    }
    std::FILE* f = std::fopen(output.c_str(), "wb");
    if (!f) {
        std::fprintf(stderr, "semnet: cannot write %s\n", output.c_str());
        return kExitData;
    }
    std::fputs(dot.get(), f);
    std::fclose(f);
    return kExitOk;
}

int run_rules(bool dump) {
    RulesHandle rules;
    if (semnet_rules_default(&rules.ptr)) return fail("rules");
    if (dump) {
        OwnedString text;
        if (semnet_rules_dump(rules.ptr, &text.ptr)) return fail("rules dump");
        std::fputs(text.get(), stdout);
    } else {
        std::printf("%zu default rules; use --dump to print them\n",
                    semnet_rules_count(rules.ptr));
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"semnet: semantic nets over educational content repositories"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    std::string input, output, rules_path;
    bool seed = false;

    auto* ingest = app.add_subcommand("ingest", "validate a repository file");
    ingest->add_option("file", input, "repository JSON")->required();
    ingest->add_option("-o,--output", output, "write canonical form here");

    auto* infer = app.add_subcommand("infer", "forward-chain the rule set to fixpoint");
    infer->add_option("file", input, "repository JSON")->required();
    infer->add_option("-o,--output", output, "write the closed repository here");
    infer->add_option("--rules", rules_path, "extra rule file (replaces the default set)");
    infer->add_flag("--seed", seed, "seed structural/taxonomic relations first");

    bool check_json = false;
    auto* check = app.add_subcommand("check", "consistency report (exit 1 on findings)");
    check->add_option("file", input, "repository JSON")->required();
    check->add_flag("--json", check_json, "emit JSON");

    std::string vocab, taxonomy, text, branch;
    double theta = 0.5;
    int partition = 50;
    auto* classify = app.add_subcommand("classify", "keyword-spot and classify a document");
    classify->add_option("--vocab", vocab, "vocabulary JSON")->required();
    classify->add_option("--taxonomy", taxonomy, "taxonomy JSON")->required();
    classify->add_option("--text", text, "document (plain text or JSON token list)")
        ->required();
    classify->add_option("--theta", theta, "significance level (default 0.5)");
    classify->add_option("--partition", partition, "term-set size (default 50)");
    classify->add_option("--branch", branch, "context branch node");

    std::string envelope, triggers;
    double window = 10.0, min_pause = 0.5;
    auto* segment = app.add_subcommand("segment", "cut a recorded stream at speech pauses");
    segment->add_option("--envelope", envelope, "loudness envelope JSON")->required();
    segment->add_option("--triggers", triggers, "trigger list JSON")->required();
    segment->add_option("--window", window, "cut search half-window seconds (default 10)");
    segment->add_option("--min-pause", min_pause, "minimum pause seconds (default 0.5)");

    std::string query_path, context_path;
    auto* query = app.add_subcommand("query", "evaluate a query or link context over a store");
    query->add_option("store", input, "statement store JSON")->required();
    auto* qopt = query->add_option("--query", query_path, "query text file");
    auto* copt = query->add_option("--context", context_path, "link context JSON file");
    qopt->excludes(copt);

    std::string report_path = "experiment-report.json";
    auto* experiment = app.add_subcommand("experiment", "staged relation-yield run");
    experiment->add_option("fixture", input, "staged repository fixture")->required();
    experiment->add_option("-o,--output", report_path, "JSON report path");

    bool keep_mirrors = false;
    auto* export_dot = app.add_subcommand("export-dot", "repository as a DOT graph");
    export_dot->add_option("file", input, "repository JSON")->required();
    export_dot->add_option("-o,--output", output, "DOT output path (default stdout)");
    export_dot->add_flag("--keep-mirrors", keep_mirrors, "emit both directions of each pair");

    bool dump = false;
    auto* rules = app.add_subcommand("rules", "show the embedded rule set");
    rules->add_flag("--dump", dump, "print the full rule file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (ingest->parsed()) return run_ingest(input, output);
    if (infer->parsed()) return run_infer(input, output, rules_path, seed);
    if (check->parsed()) return run_check(input, check_json);
    if (classify->parsed())
        return run_classify(vocab, taxonomy, text, theta, partition, branch);
    if (segment->parsed()) return run_segment(envelope, triggers, window, min_pause);
    if (query->parsed()) {
        if (query_path.empty() && context_path.empty()) {
            std::fprintf(stderr, "semnet query: need --query or --context\n");
            return kExitUsage;
        }
        return run_query(input, query_path, context_path);
    }
    if (experiment->parsed()) return run_experiment(input, report_path);
    if (export_dot->parsed()) return run_export_dot(input, output, keep_mirrors);
    if (rules->parsed()) return run_rules(dump);
    return kExitUsage;
}
