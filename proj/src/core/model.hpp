#ifndef SEMNET_CORE_MODEL_HPP
#define SEMNET_CORE_MODEL_HPP

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "core/relation.hpp"

namespace semnet {

// Where a fact came from; the order doubles as precedence when the same
// triple is written twice (stronger sources are never downgraded).
enum class Provenance {
    Asserted,
    Structural,
    Taxonomic,
    Heuristic,
    Inferred,
};

std::string_view provenance_name(Provenance p);
Provenance provenance_from_name(std::string_view name);

// Inference trace: rule that fired plus the keys of its premise facts.
struct Derivation {
    std::string rule_id;
    std::vector<std::string> premises;

    bool operator==(const Derivation&) const = default;
};

// A ground relation instance. Identity is the (subject, relation, object)
// triple; provenance and derivation are bookkeeping.
struct Fact {
    std::string subject;
    Relation relation;
    std::string object;
    Provenance provenance = Provenance::Asserted;
    std::optional<Derivation> derivation;

    // Canonical key, also used as premise reference in derivations.
    std::string key() const;

    auto triple() const { return std::tie(subject, relation, object); }
};

inline bool same_triple(const Fact& a, const Fact& b) {
    return a.triple() == b.triple();
}

struct FactTripleLess {
    using is_transparent = void;
    bool operator()(const Fact& a, const Fact& b) const { return a.triple() < b.triple(); }
};

struct ELearningObject {
    std::string id;
    std::string title;
    std::string author;
    std::set<std::string> keywords;          // normalized terms
    std::set<std::string> classifications;   // taxonomy node ids
    std::map<std::string, std::string> attributes;
    std::vector<std::string> children;       // ordered structural nesting
};

class Taxonomy {
public:
    struct Node {
        std::string label;
        std::optional<std::string> parent;
    };

    void add_node(const std::string& id, std::string label,
                  std::optional<std::string> parent);

    bool contains(const std::string& id) const { return nodes_.count(id) != 0; }
    const Node& node(const std::string& id) const;
    const std::map<std::string, Node>& nodes() const { return nodes_; }
    std::vector<std::string> roots() const;
    std::vector<std::string> children_of(const std::string& id) const;

    // Strict ancestry: a node is not its own ancestor.
    bool is_strict_ancestor(const std::string& ancestor, const std::string& node) const;

    // Every node under (and including) the given root.
    std::set<std::string> subtree(const std::string& root) const;

    // Validates the forest shape; throws Error{InvalidData} on parent
    // cycles or dangling parent ids.
    void validate() const;

private:
    std::map<std::string, Node> nodes_;
};

// Immutable-by-convention snapshot of objects, taxonomy and facts. All
// mutating operations on higher layers copy the snapshot and return a new
// one; within this class the mutators exist for construction and loading.
class Repository {
public:
    using FactSet = std::set<Fact, FactTripleLess>;

    void set_taxonomy(Taxonomy t) { taxonomy_ = std::move(t); }
    const Taxonomy& taxonomy() const { return taxonomy_; }

    void add_object(ELearningObject obj);
    bool has_object(const std::string& id) const { return objects_.count(id) != 0; }
    const ELearningObject& object(const std::string& id) const;
    const std::map<std::string, ELearningObject>& objects() const { return objects_; }

    // Inserts the fact and its inverse/symmetric mirror. Idempotent; on a
    // duplicate triple the stronger provenance wins and the incumbent
    // derivation is kept when strengths tie. Throws on dangling ids.
    void add_fact(Fact fact);

    // Insertion without the mirrored twin; the reasoner uses this when it
    // derives mirrors itself so each carries its own derivation.
    void add_fact_raw(Fact fact);

    // Adds the mirrors that are missing, leaving present ones untouched.
    // Loading canonical files is a no-op here.
    void close_under_inversion();

    bool has_triple(const std::string& subject, Relation r, const std::string& object) const;
    const Fact* find_triple(const std::string& subject, Relation r,
                            const std::string& object) const;
    const FactSet& facts() const { return facts_; }
    std::size_t fact_count() const { return facts_.size(); }

    std::size_t count_by_provenance(Provenance p) const;

    // Full invariant sweep: object references, classification resolution,
    // nesting acyclicity, fact endpoints. Throws Error{InvalidData} /
    // Error{UnknownObject} / Error{UnknownNode} with a readable message.
    void validate() const;

private:
    void check_endpoints(const Fact& fact) const;

    std::map<std::string, ELearningObject> objects_;
    Taxonomy taxonomy_;
    FactSet facts_;
};

// Materializes hasPart from structural nesting and isBroaderThan from
// strict classification-node ancestry, mirrors included.
Repository structural_and_taxonomic_seed(const Repository& repo);

} // namespace semnet

#endif
