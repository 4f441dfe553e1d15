#include <doctest.h>

#include <algorithm>
#include <random>

#include "core/repository_json.hpp"
#include "reasoner/engine.hpp"
#include "reasoner/heuristic.hpp"
#include "support/error.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace semnet;
using testing::RepoBuilder;

namespace {

Repository facts_repo(int objects, const std::vector<Fact>& facts) {
    auto repo = testing::plain_objects(objects);
    for (const auto& f : facts) repo.add_fact(f);
    return repo;
}

Fact asserted(const std::string& s, Relation r, const std::string& o) {
    return Fact{s, r, o, Provenance::Asserted, {}};
}

void check_matches_oracle(const Repository& repo) {
    auto result = closure(repo, default_rules());
    CHECK(oracle::to_ground(result.repo) ==
          oracle::naive_closure(oracle::to_ground(repo), default_rules()));
}

} // namespace

TEST_CASE("thematic rule: narrower-than propagates through format equivalence") {
    auto repo = facts_repo(3, {asserted("o0", Relation::IsNarrowerThan, "o1"),
                               asserted("o1", Relation::IsFormatOf, "o2")});
    auto result = closure(repo, default_rules());
    CHECK(result.repo.has_triple("o0", Relation::IsNarrowerThan, "o2"));
    CHECK(result.repo.has_triple("o2", Relation::IsBroaderThan, "o0"));
    check_matches_oracle(repo);
}

TEST_CASE("thematic rule: based-on lifts to the containing whole") {
    auto repo = facts_repo(3, {asserted("o0", Relation::IsBasedOn, "o1"),
                               asserted("o2", Relation::HasPart, "o1")});
    auto result = closure(repo, default_rules());
    CHECK(result.repo.has_triple("o0", Relation::IsBasedOn, "o2"));
    check_matches_oracle(repo);
}

TEST_CASE("thematic rule: requirements carry the basis relation") {
    auto repo = facts_repo(3, {asserted("o0", Relation::Requires, "o1"),
                               asserted("o1", Relation::IsBasedOn, "o2")});
    auto result = closure(repo, default_rules());
    CHECK(result.repo.has_triple("o0", Relation::IsBasedOn, "o2"));
    check_matches_oracle(repo);
}

TEST_CASE("thematic rule: more-specific propagates through format equivalence") {
    auto repo = facts_repo(3, {asserted("o0", Relation::IsMoreSpecificThan, "o1"),
                               asserted("o1", Relation::IsFormatOf, "o2")});
    auto result = closure(repo, default_rules());
    CHECK(result.repo.has_triple("o0", Relation::IsMoreSpecificThan, "o2"));
    check_matches_oracle(repo);
}

TEST_CASE("thematic rule: versions sharing a format are alternatives, both readings") {
    // isVersionOf reading
    auto repo = facts_repo(3, {asserted("o0", Relation::IsVersionOf, "o1"),
                               asserted("o0", Relation::IsFormatOf, "o2"),
                               asserted("o1", Relation::IsFormatOf, "o2")});
    auto result = closure(repo, default_rules());
    CHECK(result.repo.has_triple("o0", Relation::IsAlternativeTo, "o1"));
    CHECK(result.repo.has_triple("o1", Relation::IsAlternativeTo, "o0"));
    check_matches_oracle(repo);

    // hasVersion reading
    auto repo2 = facts_repo(3, {asserted("o0", Relation::HasVersion, "o1"),
                                asserted("o0", Relation::IsFormatOf, "o2"),
                                asserted("o1", Relation::IsFormatOf, "o2")});
    auto result2 = closure(repo2, default_rules());
    CHECK(result2.repo.has_triple("o0", Relation::IsAlternativeTo, "o1"));
    check_matches_oracle(repo2);
}

TEST_CASE("the markup-languages chain yields isRequiredBy across islands") {
    RepoBuilder b;
    b.object("MarkupLanguages").object("XML").object("DOM").object("JavaSample2");
    b.fact("MarkupLanguages", Relation::HasPart, "XML");
    b.fact("DOM", Relation::Requires, "XML");
    b.fact("JavaSample2", Relation::HasPart, "DOM");
    auto repo = b.build();

    auto result = closure(repo, default_rules());
    const Fact* conclusion =
        result.repo.find_triple("MarkupLanguages", Relation::IsRequiredBy, "JavaSample2");
    REQUIRE(conclusion != nullptr);
    CHECK(conclusion->provenance == Provenance::Inferred);
    REQUIRE(conclusion->derivation.has_value());
    CHECK(oracle::derivation_replays(result.repo, *conclusion, default_rules()));
    check_matches_oracle(repo);
}

TEST_CASE("empty fact set closes in one round with nothing inferred") {
    auto repo = testing::plain_objects(3);
    auto result = closure(repo, default_rules());
    CHECK(result.rounds == 1);
    CHECK(result.new_count == 0);
    CHECK(result.repo.fact_count() == 0);
}

TEST_CASE("transitive relations equal independent reachability closure") {
    // algebra-closure rules only: the thematic bridges deliberately mix
    // hasPart into requires and would add non-reachability edges
    std::vector<Relation> transitive = {Relation::HasPart, Relation::Requires,
                                        Relation::IsNarrowerThan};
    for (int seed = 0; seed < 100; ++seed) {
        std::mt19937 rng(1000 + seed);
        auto repo = testing::random_repository(rng, 12, 25, transitive);
        auto ground = oracle::to_ground(repo);
        auto result = closure(repo, structural_rules());
        auto closed = oracle::to_ground(result.repo);

        std::set<std::string> names;
        for (Relation r : all_relations())
            if (is_transitive(r)) names.insert(std::string(relation_name(r)));
        auto reach = oracle::transitive_reachability(ground, names);

        for (const auto& name : names) {
            oracle::FactSet got, expected;
            for (const auto& f : closed)
                if (f[1] == name) got.insert(f);
            for (const auto& f : reach)
                if (f[1] == name) expected.insert(f);
            CHECK(got == expected);
        }
    }
}

TEST_CASE("closure equals the saturation oracle on random repositories") {
    std::vector<Relation> pool(all_relations().begin(), all_relations().end());
    for (int seed = 0; seed < 30; ++seed) {
        std::mt19937 rng(2000 + seed);
        auto repo = testing::random_repository(rng, 10, 30, pool);
        check_matches_oracle(repo);
    }
}

TEST_CASE("closure is idempotent") {
    std::vector<Relation> pool(all_relations().begin(), all_relations().end());
    for (int seed = 0; seed < 25; ++seed) {
        std::mt19937 rng(3000 + seed);
        auto repo = testing::random_repository(rng, 10, 25, pool);
        auto once = closure(repo, default_rules());
        auto twice = closure(once.repo, default_rules());
        CHECK(twice.new_count == 0);
        CHECK(oracle::to_ground(twice.repo) == oracle::to_ground(once.repo));
    }
}

TEST_CASE("closure is monotone in the input facts") {
    std::vector<Relation> pool(all_relations().begin(), all_relations().end());
    for (int seed = 0; seed < 25; ++seed) {
        std::mt19937 rng(4000 + seed);
        auto repo = testing::random_repository(rng, 8, 15, pool);
        auto base = oracle::to_ground(closure(repo, default_rules()).repo);

        auto extended = repo;
        std::uniform_int_distribution<int> pick(0, 7);
        for (int i = 0; i < 4; ++i) {
            std::string s = "o" + std::to_string(pick(rng) % (int)repo.objects().size());
            std::string o = "o" + std::to_string(pick(rng) % (int)repo.objects().size());
            extended.add_fact(asserted(s, pool[pick(rng) % pool.size()], o));
        }
        auto bigger = oracle::to_ground(closure(extended, default_rules()).repo);
        CHECK(std::includes(bigger.begin(), bigger.end(), base.begin(), base.end()));
    }
}

TEST_CASE("closure is independent of fact and rule order") {
    std::vector<Fact> facts = {
        asserted("o0", Relation::HasPart, "o1"), asserted("o1", Relation::Requires, "o2"),
        asserted("o2", Relation::IsBasedOn, "o3"), asserted("o3", Relation::IsFormatOf, "o4"),
        asserted("o4", Relation::IsNarrowerThan, "o0"),
        asserted("o1", Relation::IsVersionOf, "o2")};
    auto reference = oracle::to_ground(closure(facts_repo(5, facts), default_rules()).repo);

    std::mt19937 rng(99);
    for (int i = 0; i < 15; ++i) {
        auto shuffled_facts = facts;
        std::shuffle(shuffled_facts.begin(), shuffled_facts.end(), rng);
        auto rules = default_rules();
        std::shuffle(rules.begin(), rules.end(), rng);
        auto result = closure(facts_repo(5, shuffled_facts), rules);
        CHECK(oracle::to_ground(result.repo) == reference);
    }
}

TEST_CASE("every inferred fact carries a replayable derivation") {
    RepoBuilder b;
    for (int i = 0; i < 5; ++i) b.object("o" + std::to_string(i));
    b.fact("o0", Relation::HasPart, "o1").fact("o1", Relation::HasPart, "o2");
    b.fact("o2", Relation::Requires, "o3").fact("o3", Relation::IsBasedOn, "o4");
    auto result = closure(b.build(), default_rules());
    std::size_t inferred = 0;
    for (const auto& fact : result.repo.facts()) {
        if (fact.provenance != Provenance::Inferred) continue;
        ++inferred;
        CHECK(oracle::derivation_replays(result.repo, fact, default_rules()));
    }
    CHECK(inferred > 0);
    CHECK(inferred == result.new_count);
}

TEST_CASE("incremental update equals one-shot closure under random batching") {
    std::vector<Relation> pool = {Relation::HasPart,   Relation::Requires,
                                  Relation::IsBasedOn, Relation::IsFormatOf,
                                  Relation::Illustrates};
    for (int seed = 0; seed < 25; ++seed) {
        std::mt19937 rng(5000 + seed);
        std::uniform_int_distribution<int> pick(0, 8);
        std::vector<Fact> facts;
        for (int i = 0; i < 14; ++i)
            facts.push_back(asserted("o" + std::to_string(pick(rng)),
                                     pool[pick(rng) % pool.size()],
                                     "o" + std::to_string(pick(rng))));

        auto one_shot = closure(facts_repo(9, facts), default_rules());

        std::shuffle(facts.begin(), facts.end(), rng);
        auto current = closure(testing::plain_objects(9), default_rules());
        std::size_t i = 0;
        while (i < facts.size()) {
            std::size_t batch = 1 + pick(rng) % 4;
            std::vector<Fact> chunk(facts.begin() + i,
                                    facts.begin() + std::min(facts.size(), i + batch));
            i += chunk.size();
            current = incremental_update(current.repo, chunk, default_rules());
        }
        CHECK(oracle::to_ground(current.repo) == oracle::to_ground(one_shot.repo));
    }
}

TEST_CASE("incremental update with no new facts is the identity") {
    auto repo = facts_repo(3, {asserted("o0", Relation::HasPart, "o1")});
    auto fixed = closure(repo, default_rules());
    auto updated = incremental_update(fixed.repo, {}, default_rules());
    CHECK(updated.new_count == 0);
    CHECK(oracle::to_ground(updated.repo) == oracle::to_ground(fixed.repo));
}

TEST_CASE("an inserted object gains taxonomy links without touching the other island") {
    RepoBuilder b;
    b.node("root").node("markup", "root");
    b.object("markup_course").classify("markup_course", "root");
    b.object("island_a").object("island_b");
    b.fact("island_a", Relation::Requires, "island_b");
    auto base = closure(structural_and_taxonomic_seed(b.build()), default_rules()).repo;

    // the daemon path: an object arrives, its seed facts run incrementally
    Repository extended = base;
    ELearningObject html;
    html.id = "html";
    html.title = "HTML";
    html.classifications.insert("markup");
    extended.add_object(html);

    auto seeded_full = structural_and_taxonomic_seed(extended);
    std::vector<Fact> delta;
    for (const auto& fact : seeded_full.facts())
        if (!extended.find_triple(fact.subject, fact.relation, fact.object))
            delta.push_back(fact);
    auto incremental = incremental_update(extended, delta, default_rules());

    CHECK(incremental.repo.has_triple("markup_course", Relation::IsBroaderThan, "html"));
    CHECK(incremental.repo.has_triple("html", Relation::IsNarrowerThan, "markup_course"));
    CHECK(incremental.repo.has_triple("island_a", Relation::Requires, "island_b"));
    auto full = closure(seeded_full, default_rules());
    CHECK(oracle::to_ground(incremental.repo) == oracle::to_ground(full.repo));
}

TEST_CASE("heuristic seeding conjectures alternatives for near-identical objects") {
    RepoBuilder b;
    b.node("topic");
    b.object("a").classify("a", "topic").keywords("a", {"x", "y", "z"});
    b.attribute("a", "context", "school").attribute("a", "difficulty", "easy");
    b.object("b").classify("b", "topic").keywords("b", {"x", "y", "z"});
    b.attribute("b", "context", "school").attribute("b", "difficulty", "easy");
    b.object("c").classify("c", "topic").keywords("c", {"p", "q"});
    b.attribute("c", "context", "school").attribute("c", "difficulty", "easy");
    auto repo = b.build();

    auto seeded = heuristic_seed(repo, HeuristicConfig{});
    CHECK(seeded.has_triple("a", Relation::IsAlternativeTo, "b"));
    CHECK(seeded.has_triple("b", Relation::IsAlternativeTo, "a"));
    CHECK(seeded.find_triple("a", Relation::IsAlternativeTo, "b")->provenance ==
          Provenance::Heuristic);
    CHECK_FALSE(seeded.has_triple("a", Relation::IsAlternativeTo, "c")); // disjoint keywords

    // attribute mismatch blocks the pair
    RepoBuilder b2;
    b2.node("topic");
    b2.object("a").classify("a", "topic").keywords("a", {"x"});
    b2.attribute("a", "difficulty", "easy");
    b2.object("b").classify("b", "topic").keywords("b", {"x"});
    b2.attribute("b", "difficulty", "hard");
    CHECK(heuristic_pairs(b2.build(), HeuristicConfig{}).empty());
}

TEST_CASE("heuristic yield matches the quadratic recount on the shipped fixture") {
    auto repo = load_repository(testing::fixture_path("islands18.json"));
    HeuristicConfig config;
    auto pairs = heuristic_pairs(repo, config);
    auto expected = oracle::heuristic_recount(repo, config.keyword_threshold,
                                              config.compared_attributes);
    std::set<std::pair<std::string, std::string>> got(pairs.begin(), pairs.end());
    CHECK(got == expected);
    CHECK(got.count({"java_sample_1", "java_sample_2"}) == 1);
}

TEST_CASE("part-of cycles are flagged as exactly one incorrectPart finding") {
    auto repo = facts_repo(2, {asserted("o0", Relation::IsPartOf, "o1"),
                               asserted("o1", Relation::IsPartOf, "o0")});
    auto findings = check_consistency(repo);
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].relation == Relation::IncorrectPart);
    CHECK(findings[0].subject == "o0");
    CHECK(findings[0].object == "o1");
    REQUIRE(findings[0].derivation.has_value());
    CHECK(findings[0].derivation->rule_id == "incorrect-part-cycle");
    CHECK(findings[0].derivation->premises.size() == 2);
}

TEST_CASE("format/version contradictions are flagged once") {
    auto repo = facts_repo(2, {asserted("o0", Relation::IsFormatOf, "o1"),
                               asserted("o1", Relation::HasVersion, "o0")});
    auto findings = check_consistency(repo);
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].relation == Relation::IncorrectFormatVersion);
    CHECK(findings[0].subject == "o0");
    CHECK(findings[0].object == "o1");
}

TEST_CASE("the closed shipped fixture stays contradiction-free") {
    auto repo = load_repository(testing::fixture_path("islands18.json"));
    auto closed = closure(structural_and_taxonomic_seed(repo), default_rules()).repo;
    CHECK(check_consistency(closed).empty());
}

TEST_CASE("incorrectness conclusions never breed regular relations") {
    // a rule consuming incorrectness facts sits in the relation stratum
    // and must not see derived incorrectness conclusions
    auto rules = default_rules();
    rules.push_back(parse_rules("probe: incorrectPart(A,B) => references(A,B)")[0]);
    auto repo = facts_repo(2, {asserted("o0", Relation::IsPartOf, "o1"),
                               asserted("o1", Relation::IsPartOf, "o0")});
    auto result = closure(repo, rules);
    CHECK(result.repo.has_triple("o0", Relation::IncorrectPart, "o1"));
    CHECK_FALSE(result.repo.has_triple("o0", Relation::References, "o1"));
}
