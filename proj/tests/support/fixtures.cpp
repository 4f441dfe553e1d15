#include "support/fixtures.hpp"

#ifndef SEMNET_FIXTURE_DIR
#define SEMNET_FIXTURE_DIR "data/fixtures"
#endif

namespace semnet::testing {

std::string fixture_path(const std::string& name) {
    return std::string(SEMNET_FIXTURE_DIR) + "/" + name;
}

RepoBuilder& RepoBuilder::node(const std::string& id, const std::string& parent) {
    taxonomy_.add_node(id, id, parent.empty() ? std::nullopt : std::optional(parent));
    return *this;
}

RepoBuilder& RepoBuilder::object(const std::string& id, const std::string& title) {
    ELearningObject obj;
    obj.id = id;
    obj.title = title.empty() ? id : title;
    objects_[id] = std::move(obj);
    return *this;
}

RepoBuilder& RepoBuilder::child(const std::string& parent, const std::string& child) {
    objects_.at(parent).children.push_back(child);
    return *this;
}

RepoBuilder& RepoBuilder::classify(const std::string& id, const std::string& node) {
    objects_.at(id).classifications.insert(node);
    return *this;
}

RepoBuilder& RepoBuilder::keywords(const std::string& id,
                                   const std::vector<std::string>& words) {
    for (const auto& w : words) objects_.at(id).keywords.insert(w);
    return *this;
}

RepoBuilder& RepoBuilder::attribute(const std::string& id, const std::string& key,
                                    const std::string& value) {
    objects_.at(id).attributes[key] = value;
    return *this;
}

RepoBuilder& RepoBuilder::fact(const std::string& subject, Relation relation,
                               const std::string& object, Provenance provenance) {
    Fact f;
    f.subject = subject;
    f.relation = relation;
    f.object = object;
    f.provenance = provenance;
    facts_.push_back(std::move(f));
    return *this;
}

Repository RepoBuilder::build() const {
    Repository repo;
    repo.set_taxonomy(taxonomy_);
    for (const auto& [id, obj] : objects_) repo.add_object(obj);
    for (const auto& fact : facts_) repo.add_fact(fact);
    repo.validate();
    return repo;
}

Repository plain_objects(int n) {
    RepoBuilder b;
    for (int i = 0; i < n; ++i) b.object("o" + std::to_string(i));
    return b.build();
}

Repository random_repository(std::mt19937& rng, int max_objects, int max_facts,
                             const std::vector<Relation>& relations) {
    std::uniform_int_distribution<int> object_count(2, max_objects);
    int n = object_count(rng);
    Repository repo = plain_objects(n);

    std::uniform_int_distribution<int> fact_count(0, max_facts);
    std::uniform_int_distribution<int> pick_object(0, n - 1);
    std::uniform_int_distribution<std::size_t> pick_relation(0, relations.size() - 1);
    int m = fact_count(rng);
    for (int i = 0; i < m; ++i) {
        Fact f;
        f.subject = "o" + std::to_string(pick_object(rng));
        f.relation = relations[pick_relation(rng)];
        f.object = "o" + std::to_string(pick_object(rng));
        f.provenance = Provenance::Asserted;
        repo.add_fact(std::move(f));
    }
    return repo;
}

rdf::LinkRecord random_link(std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, 9);
    std::uniform_int_distribution<int> count(0, 3);
    rdf::LinkRecord link;
    link.id = rdf::iri::link("L" + std::to_string(pick(rng)) + std::to_string(pick(rng)));
    link.from = rdf::iri::anchor("a" + std::to_string(pick(rng)));
    link.to = rdf::iri::anchor("b" + std::to_string(pick(rng)));
    link.arcrole = rdf::iri::taxonomy_node("role" + std::to_string(pick(rng)));
    int titles = count(rng);
    for (int i = 0; i < titles; ++i)
        link.titles.push_back("title " + std::to_string(pick(rng)));
    link.normalize_titles();
    if (count(rng) > 1) link.author = "author " + std::to_string(pick(rng));
    return link;
}

rdf::StatementStore random_store(std::mt19937& rng, int max_triples) {
    // small pools keep the enumeration oracle tractable
    static const std::vector<std::string> subjects = {"s0", "s1", "s2", "s3"};
    static const std::vector<std::string> predicates = {"p0", "p1", "p2"};
    static const std::vector<std::string> objects = {"s0", "v0", "v1", "v2"};

    rdf::StatementStore store;
    std::uniform_int_distribution<int> triple_count(0, max_triples);
    std::uniform_int_distribution<std::size_t> ps(0, subjects.size() - 1);
    std::uniform_int_distribution<std::size_t> pp(0, predicates.size() - 1);
    std::uniform_int_distribution<std::size_t> po(0, objects.size() - 1);
    std::uniform_int_distribution<int> literal(0, 3);
    int n = triple_count(rng);
    for (int i = 0; i < n; ++i) {
        rdf::Triple t;
        t.subject = rdf::Term::iri(rdf::iri::elo(subjects[ps(rng)]));
        t.predicate = rdf::Term::iri(rdf::iri::lom(predicates[pp(rng)]));
        std::string o = objects[po(rng)];
        t.object = literal(rng) == 0 ? rdf::Term::literal(o)
                                     : rdf::Term::iri(rdf::iri::elo(o));
        store.insert(std::move(t));
    }
    return store;
}

} // namespace semnet::testing
