#include <doctest.h>

#include <random>

#include "classify/classifier.hpp"
#include "classify/similarity.hpp"
#include "support/error.hpp"
#include "support/fixtures.hpp"

using namespace semnet;
using namespace semnet::classify;

namespace {

VocabularyEntry entry(const std::string& canonical, std::vector<std::string> variants,
                      std::vector<std::string> nodes) {
    VocabularyEntry e;
    e.canonical = canonical;
    e.variants.insert(canonical);
    for (auto& v : variants) e.variants.insert(std::move(v));
    for (auto& n : nodes) e.nodes.insert(std::move(n));
    return e;
}

Taxonomy flat_taxonomy(const std::vector<std::string>& nodes) {
    Taxonomy t;
    t.add_node("root", "root", std::nullopt);
    for (const auto& n : nodes) t.add_node(n, n, "root");
    return t;
}

} // namespace

TEST_CASE("tokenization lower-cases, strips punctuation and keeps umlauts") {
    auto tokens = tokenize("Das Ethernet-Protokoll, schnell! Übertragung läuft.");
    CHECK(tokens == std::vector<std::string>{"das", "ethernet", "protokoll", "schnell",
                                             "übertragung", "läuft"});
    CHECK(normalize_token("  CSMA/CD  ") == "csma cd");
    CHECK(tokenize("").empty());
}

TEST_CASE("token documents accept plain strings and token objects") {
    auto tokens = tokens_from_json(R"(["Das", {"token": "Ethernet", "confidence": 0.7}])");
    CHECK(tokens == std::vector<std::string>{"das", "ethernet"});
    CHECK_THROWS_AS(tokens_from_json(R"({"not": "a list"})"), Error);
}

TEST_CASE("keyword spotting hits planted variants") {
    Vocabulary vocab = {entry("ethernet", {"ethernets"}, {"n"})};
    auto result = spot_keywords({"das", "ethernet", "protokoll"}, vocab);
    REQUIRE(result.hits.size() == 1);
    CHECK(result.hits[0] == Hit{"ethernet", 1});
    CHECK(result.spotted == std::set<std::string>{"ethernet"});

    CHECK(spot_keywords({}, vocab).hits.empty());
}

TEST_CASE("multi-token variants match as contiguous sequences, longest first") {
    Vocabulary vocab = {entry("csma", {"csma cd"}, {"n"}),
                        entry("adresse", {}, {"n"}),
                        entry("mac", {"mac adresse"}, {"n"})};
    auto result = spot_keywords({"csma", "cd", "mac", "adresse"}, vocab);
    // csma cd at 0 (one hit, longest variant), mac adresse at 2, and the
    // separate adresse entry still hits at 3
    REQUIRE(result.hits.size() == 3);
    CHECK(result.hits[0] == Hit{"csma", 0});
    CHECK(result.hits[1] == Hit{"mac", 2});
    CHECK(result.hits[2] == Hit{"adresse", 3});
}

TEST_CASE("a synthetic stream yields exactly the planted hits") {
    Vocabulary vocab = {entry("ethernet", {"ethernets"}, {"n"}),
                        entry("router", {"routern"}, {"n"}),
                        entry("vermittlung", {"vermittlungsschicht"}, {"n"})};
    std::vector<std::string> variants = {"ethernet", "ethernets", "router",
                                         "routern", "vermittlungsschicht"};
    std::mt19937 rng(11);
    std::vector<std::string> tokens(1000);
    for (std::size_t i = 0; i < tokens.size(); ++i)
        tokens[i] = "füller" + std::to_string(i % 97);

    std::set<std::size_t> positions;
    std::uniform_int_distribution<std::size_t> pick(0, tokens.size() - 1);
    while (positions.size() < 37) positions.insert(pick(rng));
    std::uniform_int_distribution<std::size_t> pick_variant(0, variants.size() - 1);
    std::map<std::size_t, std::string> planted;
    for (auto pos : positions) {
        tokens[pos] = variants[pick_variant(rng)];
        planted[pos] = tokens[pos];
    }

    auto result = spot_keywords(tokens, vocab);
    REQUIRE(result.hits.size() == 37);
    // recount independently: each hit position must carry its planted variant
    for (const auto& hit : result.hits) CHECK(planted.count(hit.position) == 1);
}

TEST_CASE("hits compose under stream concatenation with offset") {
    Vocabulary vocab = {entry("alpha", {}, {"n"}), entry("beta", {}, {"n"})};
    std::vector<std::string> left = {"alpha", "x", "beta"};
    std::vector<std::string> right = {"y", "alpha"};
    auto combined = left;
    combined.insert(combined.end(), right.begin(), right.end());

    auto whole = spot_keywords(combined, vocab);
    auto l = spot_keywords(left, vocab);
    auto r = spot_keywords(right, vocab);
    std::vector<Hit> composed = l.hits;
    for (auto hit : r.hits) {
        hit.position += left.size();
        composed.push_back(hit);
    }
    CHECK(whole.hits == composed);
}

TEST_CASE("vocabulary partitions honor the size bound") {
    Vocabulary vocab;
    for (int i = 0; i < 120; ++i)
        vocab.push_back(entry("term" + std::to_string(i + 100), {}, {"node"}));
    Taxonomy t = flat_taxonomy({"node"});
    ClassifierConfig config;
    config.partition_size = 50;
    auto sets = partition_vocabulary(vocab, t, config);
    REQUIRE(sets.size() == 3);
    CHECK(sets[0].size() == 50);
    CHECK(sets[1].size() == 50);
    CHECK(sets[2].size() == 20);
}

TEST_CASE("context branches exclude everything outside the subtree") {
    Taxonomy t;
    t.add_node("root", "root", std::nullopt);
    t.add_node("inside", "inside", "root");
    t.add_node("inside.deep", "deep", "inside");
    t.add_node("outside", "outside", "root");

    Vocabulary vocab;
    for (int i = 0; i < 10; ++i)
        vocab.push_back(entry("in" + std::to_string(i), {},
                              {i % 2 ? "inside" : "inside.deep"}));
    for (int i = 0; i < 90; ++i)
        vocab.push_back(entry("out" + std::to_string(i), {}, {"outside"}));

    ClassifierConfig config;
    config.context_branch = "inside";
    auto sets = partition_vocabulary(vocab, t, config);
    std::set<std::string> scheduled;
    for (const auto& s : sets) scheduled.insert(s.begin(), s.end());
    CHECK(scheduled.size() == 10);
    for (const auto& term : scheduled) CHECK(term.substr(0, 2) == "in");
}

TEST_CASE("partition order follows breadth-first taxonomy depth") {
    Taxonomy t;
    t.add_node("a", "a", std::nullopt);
    t.add_node("a.x", "x", "a");
    t.add_node("a.y", "y", "a");
    t.add_node("a.x.deep", "deep", "a.x");
    Vocabulary vocab = {entry("t-deep", {}, {"a.x.deep"}), entry("t-root", {}, {"a"}),
                        entry("t-x", {}, {"a.x"}), entry("t-y", {}, {"a.y"})};
    auto sets = partition_vocabulary(vocab, t, ClassifierConfig{});

    // independent BFS: depth(a)=0 < depth(a.x)=depth(a.y)=1 < depth(a.x.deep)=2
    std::vector<std::vector<std::string>> expected = {
        {"t-root"}, {"t-x"}, {"t-y"}, {"t-deep"}};
    CHECK(sets == expected);

    // partition property: disjoint cover of the vocabulary
    std::set<std::string> seen;
    std::size_t total = 0;
    for (const auto& s : sets) {
        total += s.size();
        seen.insert(s.begin(), s.end());
    }
    CHECK(total == seen.size());
    CHECK(seen.size() == vocab.size());
}

TEST_CASE("entries on several nodes are scheduled exactly once") {
    Taxonomy t;
    t.add_node("a", "a", std::nullopt);
    t.add_node("a.x", "x", "a");
    Vocabulary vocab = {entry("both", {}, {"a", "a.x"})};
    auto sets = partition_vocabulary(vocab, t, ClassifierConfig{});
    std::size_t occurrences = 0;
    for (const auto& s : sets)
        for (const auto& term : s)
            if (term == "both") ++occurrences;
    CHECK(occurrences == 1);
}

TEST_CASE("unknown vocabulary nodes are an error") {
    Vocabulary vocab = {entry("term", {}, {"nowhere"})};
    Taxonomy t = flat_taxonomy({"node"});
    try {
        partition_vocabulary(vocab, t, ClassifierConfig{});
        FAIL("expected UnknownNode");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnknownNode);
    }
}

TEST_CASE("jaccard basics") {
    CHECK(jaccard({"x", "y", "z"}, {"x", "y", "z"}) == 1.0);
    CHECK(jaccard({"a", "b", "c"}, {"b", "c", "d"}) == 0.5);
    CHECK(jaccard({}, {}) == 0.0);
    CHECK(jaccard({"a"}, {}) == 0.0);
    // symmetric and bounded
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < 50; ++i) {
        std::set<std::string> a, b;
        for (int k = 0; k < 6; ++k) {
            if (coin(rng)) a.insert("e" + std::to_string(k));
            if (coin(rng)) b.insert("e" + std::to_string(k));
        }
        double ab = jaccard(a, b);
        CHECK(ab == jaccard(b, a));
        CHECK(ab >= 0.0);
        CHECK(ab <= 1.0);
        if (!a.empty() && a == b) CHECK(ab == 1.0);
        if (ab == 1.0) CHECK(a == b);
    }
}

TEST_CASE("node scores are per-node keyword hit rates") {
    Vocabulary vocab = {entry("ethernet", {}, {"lan"}), entry("csma", {}, {"lan"}),
                        entry("mac", {}, {"lan"}), entry("router", {}, {"wan"})};
    Taxonomy t = flat_taxonomy({"lan", "wan"});

    ClassifierConfig config; // theta 0.5
    auto scores = classify::classify({"ethernet", "csma"}, vocab, t, config);
    REQUIRE(scores.size() == 1);
    CHECK(scores[0].node == "lan");
    CHECK(scores[0].score == doctest::Approx(2.0 / 3.0));

    // identical sets score 1
    auto full = classify::classify({"ethernet", "csma", "mac"}, vocab, t, config);
    REQUIRE(!full.empty());
    CHECK(full[0].score == 1.0);

    // empty intersection keeps the node out
    for (const auto& ns : classify::classify({"router"}, vocab, t, config))
        CHECK(ns.node != "lan");
}

TEST_CASE("the unrestricted overlap variant punishes off-node terms") {
    Vocabulary vocab = {entry("ethernet", {}, {"lan"}), entry("csma", {}, {"lan"}),
                        entry("router", {}, {"wan"})};
    Taxonomy t = flat_taxonomy({"lan", "wan"});
    ClassifierConfig config;
    config.significance = 0.1;
    config.restricted_overlap = false;
    auto scores = classify::classify({"ethernet", "csma", "router"}, vocab, t, config);
    for (const auto& ns : scores)
        if (ns.node == "lan") CHECK(ns.score == doctest::Approx(2.0 / 3.0));
    // restricted form gives lan the full hit rate
    config.restricted_overlap = true;
    auto restricted = classify::classify({"ethernet", "csma", "router"}, vocab, t, config);
    CHECK(restricted[0].node == "lan");
    CHECK(restricted[0].score == 1.0);
}

TEST_CASE("raising the significance level never adds nodes") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_real_distribution<double> theta(0.0, 1.0);
    Taxonomy t = flat_taxonomy({"n0", "n1", "n2"});
    for (int i = 0; i < 100; ++i) {
        Vocabulary vocab;
        std::set<std::string> spotted;
        for (int k = 0; k < 9; ++k) {
            std::string term = "t" + std::to_string(k);
            vocab.push_back(entry(term, {}, {"n" + std::to_string(k % 3)}));
            if (coin(rng)) spotted.insert(term);
        }
        double lo = theta(rng), hi = theta(rng);
        if (lo > hi) std::swap(lo, hi);
        ClassifierConfig a, b;
        a.significance = lo;
        b.significance = hi;
        auto low = classify::classify(spotted, vocab, t, a);
        auto high = classify::classify(spotted, vocab, t, b);
        std::set<std::string> low_nodes, high_nodes;
        for (const auto& ns : low) low_nodes.insert(ns.node);
        for (const auto& ns : high) high_nodes.insert(ns.node);
        for (const auto& n : high_nodes) CHECK(low_nodes.count(n) == 1);
    }
}

TEST_CASE("precision and recall follow the set counts") {
    auto same = evaluate_pr({"a", "b"}, {"a", "b"});
    CHECK(same.precision == 1.0);
    CHECK(same.recall == 1.0);

    auto report = evaluate_pr({"a", "b", "c", "x"}, {"a", "b", "c", "d"});
    CHECK(report.true_positives == 3);
    CHECK(report.false_positives == 1);
    CHECK(report.false_negatives == 1);
    CHECK(report.precision == 0.75);
    CHECK(report.recall == 0.75);

    auto vacuous = evaluate_pr({}, {"a"});
    CHECK(vacuous.precision == 1.0);
    CHECK(vacuous.recall == 0.0);
}

TEST_CASE("the shipped vocabulary classifies the lecture notes") {
    auto vocab = load_vocabulary(testing::fixture_path("vocab_net.json"));
    std::string text;
    {
        auto path = testing::fixture_path("lecture_notes.txt");
        FILE* f = fopen(path.c_str(), "rb");
        REQUIRE(f != nullptr);
        char buf[4096];
        size_t n;
        while ((n = fread(buf, 1, sizeof buf, f)) > 0) text.append(buf, n);
        fclose(f);
    }
    auto tokens = tokenize(text);
    auto spotting = spot_keywords(tokens, vocab);
    CHECK(spotting.spotted ==
          std::set<std::string>{"csma", "ethernet", "mac", "netzwerk", "protokoll",
                                "switch", "übertragung"});

    Taxonomy t;
    t.add_node("net", "Computer Networks", std::nullopt);
    t.add_node("net.lan", "LAN", "net");
    t.add_node("net.routing", "Routing", "net");
    t.add_node("net.physical", "Physical", "net");
    auto scores = classify::classify(spotting.spotted, vocab, t, ClassifierConfig{});
    REQUIRE(scores.size() == 3);
    CHECK(scores[0].node == "net");
    CHECK(scores[0].score == 1.0);
    CHECK(scores[1].node == "net.lan");
    CHECK(scores[1].score == 1.0);
    CHECK(scores[2].node == "net.physical");
    CHECK(scores[2].score == 0.5);
}
