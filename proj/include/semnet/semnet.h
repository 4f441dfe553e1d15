/*
 * semnet C API: educational semantic-net construction and monitoring.
 *
 * The library materializes typed relations between content objects by
 * rule-based forward chaining, reports consistency findings, classifies
 * objects against a taxonomy by keyword spotting, evaluates link-context
 * queries over a reified statement store, and segments recorded lecture
 * streams.
 *
 * All functions return SEMNET_OK on success; on failure they return a
 * status code and leave a message retrievable via semnet_last_error()
 * (thread-local). Strings returned through char** out-parameters are
 * heap-allocated and must be released with semnet_string_free().
 * Handles are opaque; each has a matching _free function.
 */
#ifndef SEMNET_H
#define SEMNET_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum semnet_status {
    SEMNET_OK = 0,
    SEMNET_ERR_INVALID_ARGUMENT = 1,
    SEMNET_ERR_PARSE = 2,
    SEMNET_ERR_UNKNOWN_OBJECT = 3,
    SEMNET_ERR_UNKNOWN_RELATION = 4,
    SEMNET_ERR_UNKNOWN_NODE = 5,
    SEMNET_ERR_UNKNOWN_PREFIX = 6,
    SEMNET_ERR_DATA = 7,
    SEMNET_ERR_IO = 8,
    SEMNET_ERR_INTERNAL = 9
} semnet_status;

typedef struct semnet_repo semnet_repo;   /* repository snapshot */
typedef struct semnet_rules semnet_rules; /* inference rule set */
typedef struct semnet_store semnet_store; /* triple statement store */

const char* semnet_version(void);

/* Message for the most recent failure on this thread; never NULL. */
const char* semnet_last_error(void);

void semnet_string_free(char* s);

/* --- repository ------------------------------------------------------ */

semnet_status semnet_repo_load_file(const char* path, semnet_repo** out);
semnet_status semnet_repo_load_json(const char* json_text, semnet_repo** out);
semnet_status semnet_repo_to_json(const semnet_repo* repo, char** out_json);
/* Canonical serialization: sorted keys and fact lists, byte-stable. */
semnet_status semnet_repo_save_file(const semnet_repo* repo, const char* path);
void semnet_repo_free(semnet_repo* repo);

size_t semnet_repo_object_count(const semnet_repo* repo);
size_t semnet_repo_fact_count(const semnet_repo* repo);

/* Adds the fact and its inverse/symmetric mirror; idempotent. provenance
 * is one of asserted|structural|taxonomic|heuristic (NULL = asserted). */
semnet_status semnet_repo_add_fact(semnet_repo* repo, const char* subject,
                                   const char* relation, const char* object,
                                   const char* provenance);

/* Seeds hasPart from nesting and isBroaderThan from classification
 * ancestry. */
semnet_status semnet_repo_seed(semnet_repo* repo);

/* Conjectures isAlternativeTo between near-identical objects. attributes
 * may be NULL to compare the default context/difficulty pair. */
semnet_status semnet_repo_heuristic_seed(semnet_repo* repo, double keyword_threshold,
                                         const char* const* attributes,
                                         size_t attribute_count);

/* --- rule sets -------------------------------------------------------- */

semnet_status semnet_rules_default(semnet_rules** out);
semnet_status semnet_rules_parse(const char* text, semnet_rules** out);
semnet_status semnet_rules_load_file(const char* path, semnet_rules** out);
semnet_status semnet_rules_dump(const semnet_rules* rules, char** out_text);
size_t semnet_rules_count(const semnet_rules* rules);
void semnet_rules_free(semnet_rules* rules);

/* --- reasoning -------------------------------------------------------- */

/* Forward-chains to fixpoint in place. rules == NULL uses the default
 * set; custom sets are always augmented with the algebra closure rules. */
semnet_status semnet_repo_infer(semnet_repo* repo, const semnet_rules* rules,
                                size_t* rounds_out, size_t* inferred_out);

/* Consistency findings over the current facts with derivation chains.
 * as_json != 0 renders JSON, otherwise plain text. */
semnet_status semnet_repo_check(const semnet_repo* repo, int as_json, char** report_out,
                                size_t* finding_count_out);

/* Deterministic DOT graph of the repository. keep_mirrors != 0 emits both
 * directions of every inverse pair. */
semnet_status semnet_repo_export_dot(const semnet_repo* repo, int keep_mirrors,
                                     char** dot_out);

/* Staged yield experiment over a fixture file; emits the per-stage text
 * table and the machine-readable JSON report. */
semnet_status semnet_experiment_run(const char* fixture_path, char** text_report_out,
                                    char** json_report_out);

/* --- statement store and link contexts ------------------------------- */

semnet_status semnet_store_load_file(const char* path, semnet_store** out);
semnet_status semnet_store_load_json(const char* json_text, semnet_store** out);
semnet_status semnet_store_to_json(const semnet_store* store, char** out_json);
void semnet_store_free(semnet_store* store);

/* Evaluates a conjunctive SELECT query; tab-separated rows, header line
 * first, rows sorted lexicographically. */
semnet_status semnet_store_query(const semnet_store* store, const char* query_text,
                                 char** tsv_out);

/* Applies a link-context definition (JSON) and materializes the selected
 * links, one "id from to arcrole [titles...]" line each. Bindings that
 * are not complete reified links are reported through warnings_out. */
semnet_status semnet_store_select_links(const semnet_store* store, const char* context_json,
                                        char** links_out, char** warnings_out);

/* --- classification --------------------------------------------------- */

/* Spots vocabulary terms in the document (plain text or JSON token list)
 * and scores taxonomy nodes; report lines are "node score", best first.
 * context_branch may be NULL. */
semnet_status semnet_classify_file(const char* vocab_path, const char* taxonomy_path,
                                   const char* document_path, double significance,
                                   int partition_size, const char* context_branch,
                                   char** report_out);

/* --- segmentation ----------------------------------------------------- */

/* Cuts the recorded stream at speech pauses near the triggers; one
 * "start end trigger" line per segment. */
semnet_status semnet_segment_file(const char* envelope_path, const char* triggers_path,
                                  double window, double min_pause, char** segments_out);

#ifdef __cplusplus
}
#endif

#endif /* SEMNET_H */
