#include "classify/classifier.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "classify/similarity.hpp"
#include "core/repository_json.hpp" // read_file
#include "support/error.hpp"

namespace semnet::classify {

using nlohmann::json;

namespace {

// Minimal UTF-8 walk; enough to lower-case ASCII and the Latin-1 block
// (covers the German umlauts) while leaving other code points alone.
void append_lowered(std::string& out, uint32_t cp) {
    if (cp >= 'A' && cp <= 'Z') cp += 0x20;
    else if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) cp += 0x20; // À-Þ -> à-þ
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

uint32_t next_codepoint(const std::string& s, std::size_t& i) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    uint32_t cp = c;
    int extra = 0;
    if (c >= 0xF0) { cp = c & 0x07; extra = 3; }
    else if (c >= 0xE0) { cp = c & 0x0F; extra = 2; }
    else if (c >= 0xC0) { cp = c & 0x1F; extra = 1; }
    ++i;
    while (extra-- > 0 && i < s.size()) {
        cp = (cp << 6) | (static_cast<unsigned char>(s[i]) & 0x3F);
        ++i;
    }
    return cp;
}

bool word_codepoint(uint32_t cp) {
    if (cp >= '0' && cp <= '9') return true;
    if (cp >= 'a' && cp <= 'z') return true;
    if (cp >= 'A' && cp <= 'Z') return true;
    return cp >= 0x80; // non-ASCII letters (umlauts etc.) count as word chars
}

} // namespace

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    std::string current;
    std::size_t i = 0;
    while (i < text.size()) {
        uint32_t cp = next_codepoint(text, i);
        if (word_codepoint(cp)) {
            append_lowered(current, cp);
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

std::string normalize_token(const std::string& token) {
    auto tokens = tokenize(token);
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) out += ' ';
        out += tokens[i];
    }
    return out;
}

std::vector<std::string> tokens_from_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_array())
        throw Error(ErrorCode::ParseError, "token document must be a JSON array");
    std::vector<std::string> tokens;
    for (const auto& entry : doc) {
        std::string raw;
        if (entry.is_string()) raw = entry.get<std::string>();
        else if (entry.is_object() && entry.contains("token"))
            raw = entry.at("token").get<std::string>();
        else
            throw Error(ErrorCode::ParseError, "token entries must be strings or {token,...}");
        std::string normalized = normalize_token(raw);
        if (!normalized.empty()) tokens.push_back(std::move(normalized));
    }
    return tokens;
}

Vocabulary vocabulary_from_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_array())
        throw Error(ErrorCode::ParseError, "vocabulary must be a JSON array");
    Vocabulary vocab;
    for (const auto& entry : doc) {
        VocabularyEntry e;
        if (!entry.contains("canonical"))
            throw Error(ErrorCode::ParseError, "vocabulary entry lacks 'canonical'");
        e.canonical = normalize_token(entry.at("canonical").get<std::string>());
        if (entry.contains("variants"))
            for (const auto& v : entry.at("variants"))
                e.variants.insert(normalize_token(v.get<std::string>()));
        e.variants.insert(e.canonical);
        if (entry.contains("nodes"))
            for (const auto& n : entry.at("nodes")) e.nodes.insert(n.get<std::string>());
        if (e.nodes.empty())
            throw Error(ErrorCode::ParseError,
                        "vocabulary entry '" + e.canonical + "' lists no taxonomy nodes");
        vocab.push_back(std::move(e));
    }
    return vocab;
}

Vocabulary load_vocabulary(const std::string& path) {
    return vocabulary_from_json(read_file(path));
}

SpottingResult spot_keywords(const std::vector<std::string>& tokens, const Vocabulary& vocab) {
    // Variant token sequences per entry, longest first.
    struct CompiledEntry {
        const std::string* canonical;
        std::vector<std::vector<std::string>> sequences;
    };
    std::vector<CompiledEntry> compiled;
    compiled.reserve(vocab.size());
    for (const auto& entry : vocab) {
        CompiledEntry ce;
        ce.canonical = &entry.canonical;
        for (const auto& variant : entry.variants) {
            std::vector<std::string> seq;
            std::size_t start = 0;
            while (start <= variant.size()) {
                auto space = variant.find(' ', start);
                if (space == std::string::npos) {
                    if (start < variant.size()) seq.push_back(variant.substr(start));
                    break;
                }
                if (space > start) seq.push_back(variant.substr(start, space - start));
                start = space + 1;
            }
            if (!seq.empty()) ce.sequences.push_back(std::move(seq));
        }
        std::sort(ce.sequences.begin(), ce.sequences.end(),
                  [](const auto& a, const auto& b) { return a.size() > b.size(); });
        compiled.push_back(std::move(ce));
    }

    SpottingResult result;
    for (std::size_t pos = 0; pos < tokens.size(); ++pos) {
        for (const auto& entry : compiled) {
            for (const auto& seq : entry.sequences) {
                if (pos + seq.size() > tokens.size()) continue;
                bool match = std::equal(seq.begin(), seq.end(), tokens.begin() + pos);
                if (match) {
                    result.hits.push_back(Hit{*entry.canonical, pos});
                    break; // longest variant of this entry wins here
                }
            }
        }
    }
    for (const auto& hit : result.hits) result.spotted.insert(hit.canonical);
    return result;
}

std::vector<std::vector<std::string>> partition_vocabulary(const Vocabulary& vocab,
                                                           const Taxonomy& taxonomy,
                                                           const ClassifierConfig& config) {
    std::map<std::string, std::vector<std::string>> node_terms;
    for (const auto& entry : vocab)
        for (const auto& node : entry.nodes) {
            if (!taxonomy.contains(node))
                throw Error(ErrorCode::UnknownNode,
                            "vocabulary term '" + entry.canonical +
                                "' references unknown node '" + node + "'");
            node_terms[node].push_back(entry.canonical);
        }

    // Breadth-first node order from the branch (or the roots) downward.
    std::vector<std::string> frontier;
    if (config.context_branch) {
        if (!taxonomy.contains(*config.context_branch))
            throw Error(ErrorCode::UnknownNode,
                        "unknown context branch '" + *config.context_branch + "'");
        frontier.push_back(*config.context_branch);
    } else {
        frontier = taxonomy.roots();
        std::sort(frontier.begin(), frontier.end());
    }

    std::vector<std::vector<std::string>> sets;
    std::set<std::string> assigned;
    std::size_t chunk = static_cast<std::size_t>(config.partition_size);
    while (!frontier.empty()) {
        std::vector<std::string> next;
        for (const auto& node : frontier) {
            std::vector<std::string> terms;
            auto it = node_terms.find(node);
            if (it != node_terms.end())
                for (const auto& term : it->second)
                    if (assigned.insert(term).second) terms.push_back(term);
            std::sort(terms.begin(), terms.end());
            for (std::size_t start = 0; start < terms.size(); start += chunk) {
                std::size_t stop = std::min(terms.size(), start + chunk);
                sets.emplace_back(terms.begin() + static_cast<std::ptrdiff_t>(start),
                                  terms.begin() + static_cast<std::ptrdiff_t>(stop));
            }
            auto children = taxonomy.children_of(node);
            std::sort(children.begin(), children.end());
            next.insert(next.end(), children.begin(), children.end());
        }
        frontier = std::move(next);
    }
    return sets;
}

std::vector<NodeScore> classify(const std::set<std::string>& spotted, const Vocabulary& vocab,
                                const Taxonomy& taxonomy, const ClassifierConfig& config) {
    std::map<std::string, std::set<std::string>> node_terms;
    for (const auto& entry : vocab)
        for (const auto& node : entry.nodes) node_terms[node].insert(entry.canonical);

    std::vector<NodeScore> out;
    for (const auto& [node_id, node] : taxonomy.nodes()) {
        auto it = node_terms.find(node_id);
        const std::set<std::string> empty;
        const auto& terms = it == node_terms.end() ? empty : it->second;
        double score;
        if (config.restricted_overlap) {
            std::set<std::string> restricted;
            for (const auto& term : spotted)
                if (terms.count(term)) restricted.insert(term);
            score = jaccard(restricted, terms);
        } else {
            score = jaccard(spotted, terms);
        }
        if (score >= config.significance) out.push_back(NodeScore{node_id, score});
    }
    std::sort(out.begin(), out.end(), [](const NodeScore& a, const NodeScore& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.node < b.node;
    });
    return out;
}

PRReport evaluate_pr(const std::set<std::string>& predicted, const std::set<std::string>& gold) {
    PRReport report{};
    for (const auto& p : predicted)
        gold.count(p) ? ++report.true_positives : ++report.false_positives;
    for (const auto& g : gold)
        if (!predicted.count(g)) ++report.false_negatives;

    auto ratio = [](std::size_t num, std::size_t den) {
        return den == 0 ? 1.0 : static_cast<double>(num) / static_cast<double>(den);
    };
    report.precision = ratio(report.true_positives,
                             report.true_positives + report.false_positives);
    report.recall = ratio(report.true_positives,
                          report.true_positives + report.false_negatives);
    return report;
}

} // namespace semnet::classify
