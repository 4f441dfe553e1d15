#ifndef SEMNET_TESTS_FIXTURES_HPP
#define SEMNET_TESTS_FIXTURES_HPP

#include <random>
#include <string>
#include <vector>

#include "core/model.hpp"
#include "rdf/reify.hpp"
#include "rdf/store.hpp"

namespace semnet::testing {

std::string fixture_path(const std::string& name);

// Incremental repository construction for test setups; build() validates.
class RepoBuilder {
public:
    RepoBuilder& node(const std::string& id, const std::string& parent = "");
    RepoBuilder& object(const std::string& id, const std::string& title = "");
    RepoBuilder& child(const std::string& parent, const std::string& child);
    RepoBuilder& classify(const std::string& id, const std::string& node);
    RepoBuilder& keywords(const std::string& id, const std::vector<std::string>& words);
    RepoBuilder& attribute(const std::string& id, const std::string& key,
                           const std::string& value);
    RepoBuilder& fact(const std::string& subject, Relation relation,
                      const std::string& object, Provenance provenance = Provenance::Asserted);

    Repository build() const;

private:
    Taxonomy taxonomy_;
    std::map<std::string, ELearningObject> objects_;
    std::vector<Fact> facts_;
};

// Repository of n unrelated objects named o0..o{n-1}.
Repository plain_objects(int n);

// Random repository for closure-oracle runs: objects o0..o{k} and up to
// max_facts random asserted relations (mirrors included via add_fact).
Repository random_repository(std::mt19937& rng, int max_objects, int max_facts,
                             const std::vector<Relation>& relations);

// Random reified link over small id pools.
rdf::LinkRecord random_link(std::mt19937& rng);

// Random statement store over a small term pool plus a random conjunctive
// query of up to max_patterns patterns against it.
rdf::StatementStore random_store(std::mt19937& rng, int max_triples);

} // namespace semnet::testing

#endif
