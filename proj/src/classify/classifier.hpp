#ifndef SEMNET_CLASSIFY_CLASSIFIER_HPP
#define SEMNET_CLASSIFY_CLASSIFIER_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "core/model.hpp"

namespace semnet::classify {

// Controlled-vocabulary entry: a canonical term, its flexion/synonym
// surface forms, and the taxonomy nodes it evidences.
struct VocabularyEntry {
    std::string canonical;
    std::set<std::string> variants; // normalized; always includes canonical
    std::set<std::string> nodes;    // non-empty
};

using Vocabulary = std::vector<VocabularyEntry>;

// Vocabulary file: JSON list of {canonical, variants[], nodes[]}. Terms
// are normalized on load.
Vocabulary vocabulary_from_json(const std::string& text);
Vocabulary load_vocabulary(const std::string& path);

struct ClassifierConfig {
    double significance = 0.5; // score needed for a node to classify
    int partition_size = 50;
    std::optional<std::string> context_branch;
    // Score per-node hits against the node's terms (hit rate). The
    // unrestricted variant scores the whole spotted set instead.
    bool restricted_overlap = true;
};

// Token normalization contract: lower-case, punctuation stripped,
// whitespace collapsed, diacritics preserved.
std::string normalize_token(const std::string& token);
std::vector<std::string> tokenize(const std::string& text);

// Token-list document input: JSON array of strings or of
// {"token": t, "confidence": c} objects; confidences are ignored.
std::vector<std::string> tokens_from_json(const std::string& text);

struct Hit {
    std::string canonical;
    std::size_t position;

    bool operator==(const Hit&) const = default;
};

struct SpottingResult {
    std::vector<Hit> hits;
    std::set<std::string> spotted; // distinct canonicals
};

// Contiguous-sequence matching of every variant against the token stream.
// Distinct entries may hit the same position; within one entry the longest
// variant wins per position.
SpottingResult spot_keywords(const std::vector<std::string>& tokens, const Vocabulary& vocab);

// Splits the vocabulary into term sets of at most partition_size,
// breadth-first from the context branch (or the roots) downward. Entries
// outside the branch are excluded; each covered entry appears exactly once.
std::vector<std::vector<std::string>> partition_vocabulary(const Vocabulary& vocab,
                                                           const Taxonomy& taxonomy,
                                                           const ClassifierConfig& config);

struct NodeScore {
    std::string node;
    double score;

    bool operator==(const NodeScore&) const = default;
};

// Jaccard score of spotted terms per taxonomy node; nodes at or above the
// significance level, best first.
std::vector<NodeScore> classify(const std::set<std::string>& spotted, const Vocabulary& vocab,
                                const Taxonomy& taxonomy, const ClassifierConfig& config);

struct PRReport {
    double precision;
    double recall;
    std::size_t true_positives;
    std::size_t false_positives;
    std::size_t false_negatives;
};

// Set-membership precision/recall; vacuous cases score 1.
PRReport evaluate_pr(const std::set<std::string>& predicted, const std::set<std::string>& gold);

} // namespace semnet::classify

#endif
