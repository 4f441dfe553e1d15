#include "core/model.hpp"

#include <algorithm>
#include <functional>

#include "support/error.hpp"

namespace semnet {

namespace {

constexpr std::string_view kProvenanceNames[] = {
    "asserted", "structural", "taxonomic", "heuristic", "inferred",
};

char ascii_lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c + 32) : c; }

} // namespace

std::string_view provenance_name(Provenance p) {
    return kProvenanceNames[static_cast<int>(p)];
}

Provenance provenance_from_name(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), ascii_lower);
    for (int i = 0; i < 5; ++i)
        if (lower == kProvenanceNames[i]) return static_cast<Provenance>(i);
    throw Error(ErrorCode::InvalidData, "unknown provenance: " + std::string(name));
}

std::string Fact::key() const {
    std::string k;
    k.reserve(subject.size() + object.size() + 32);
    k.append(relation_name(relation));
    k.push_back('(');
    k.append(subject);
    k.push_back(',');
    k.append(object);
    k.push_back(')');
    return k;
}

void Taxonomy::add_node(const std::string& id, std::string label,
                        std::optional<std::string> parent) {
    if (id.empty())
        throw Error(ErrorCode::InvalidData, "taxonomy node id must be non-empty");
    nodes_[id] = Node{std::move(label), std::move(parent)};
}

const Taxonomy::Node& Taxonomy::node(const std::string& id) const {
    auto it = nodes_.find(id);
    if (it == nodes_.end())
        throw Error(ErrorCode::UnknownNode, "unknown taxonomy node: " + id);
    return it->second;
}

std::vector<std::string> Taxonomy::roots() const {
    std::vector<std::string> out;
    for (const auto& [id, node] : nodes_)
        if (!node.parent) out.push_back(id);
    return out;
}

std::vector<std::string> Taxonomy::children_of(const std::string& id) const {
    std::vector<std::string> out;
    for (const auto& [nid, node] : nodes_)
        if (node.parent && *node.parent == id) out.push_back(nid);
    return out;
}

bool Taxonomy::is_strict_ancestor(const std::string& ancestor,
                                  const std::string& node_id) const {
    auto it = nodes_.find(node_id);
    if (it == nodes_.end()) return false;
    auto cur = it->second.parent;
    while (cur) {
        if (*cur == ancestor) return true;
        auto next = nodes_.find(*cur);
        if (next == nodes_.end()) return false;
        cur = next->second.parent;
    }
    return false;
}

std::set<std::string> Taxonomy::subtree(const std::string& root) const {
    if (!contains(root))
        throw Error(ErrorCode::UnknownNode, "unknown taxonomy node: " + root);
    std::set<std::string> out{root};
    for (const auto& [id, node] : nodes_)
        if (is_strict_ancestor(root, id)) out.insert(id);
    return out;
}

void Taxonomy::validate() const {
    for (const auto& [id, node] : nodes_) {
        if (node.parent && nodes_.find(*node.parent) == nodes_.end())
            throw Error(ErrorCode::InvalidData,
                        "taxonomy node '" + id + "' has dangling parent '" + *node.parent + "'");
        // walk up; revisiting the start means a parent cycle
        auto cur = node.parent;
        std::size_t steps = 0;
        while (cur) {
            if (*cur == id || ++steps > nodes_.size())
                throw Error(ErrorCode::InvalidData,
                            "taxonomy parent cycle through node '" + id + "'");
            cur = nodes_.at(*cur).parent;
        }
    }
}

void Repository::add_object(ELearningObject obj) {
    if (obj.id.empty())
        throw Error(ErrorCode::InvalidData, "object id must be non-empty");
    objects_[obj.id] = std::move(obj);
}

const ELearningObject& Repository::object(const std::string& id) const {
    auto it = objects_.find(id);
    if (it == objects_.end())
        throw Error(ErrorCode::UnknownObject, "unknown object id: " + id);
    return it->second;
}

void Repository::check_endpoints(const Fact& fact) const {
    if (!has_object(fact.subject))
        throw Error(ErrorCode::UnknownObject, "fact subject not in repository: " + fact.subject);
    if (!has_object(fact.object))
        throw Error(ErrorCode::UnknownObject, "fact object not in repository: " + fact.object);
}

void Repository::add_fact_raw(Fact fact) {
    check_endpoints(fact);
    auto [it, inserted] = facts_.insert(fact);
    if (inserted) return;
    // Duplicate triple: keep the stronger provenance; on a tie the first
    // writer wins, so an existing derivation survives re-derivation.
    if (static_cast<int>(fact.provenance) < static_cast<int>(it->provenance)) {
        Fact merged = fact;
        facts_.erase(it);
        facts_.insert(std::move(merged));
    }
}

void Repository::add_fact(Fact fact) {
    Fact mirror;
    mirror.subject = fact.object;
    mirror.relation = inverse_of(fact.relation);
    mirror.object = fact.subject;
    mirror.provenance = fact.provenance;
    if (fact.derivation) {
        // One inversion step away from the original; the rule id matches
        // the generated structural rule so the trace stays replayable.
        mirror.derivation = Derivation{
            (is_symmetric(fact.relation) ? "sym-" : "inv-") +
                std::string(relation_name(fact.relation)),
            {fact.key()}};
    }
    add_fact_raw(std::move(fact));
    add_fact_raw(std::move(mirror));
}

void Repository::close_under_inversion() {
    std::vector<Fact> missing;
    for (const auto& fact : facts_) {
        Fact mirror;
        mirror.subject = fact.object;
        mirror.relation = inverse_of(fact.relation);
        mirror.object = fact.subject;
        if (facts_.count(mirror)) continue;
        mirror.provenance = fact.provenance;
        if (fact.derivation)
            mirror.derivation = Derivation{
                (is_symmetric(fact.relation) ? "sym-" : "inv-") +
                    std::string(relation_name(fact.relation)),
                {fact.key()}};
        missing.push_back(std::move(mirror));
    }
    for (auto& m : missing) add_fact_raw(std::move(m));
}

bool Repository::has_triple(const std::string& subject, Relation r,
                            const std::string& object) const {
    return find_triple(subject, r, object) != nullptr;
}

const Fact* Repository::find_triple(const std::string& subject, Relation r,
                                    const std::string& object) const {
    Fact probe;
    probe.subject = subject;
    probe.relation = r;
    probe.object = object;
    auto it = facts_.find(probe);
    return it == facts_.end() ? nullptr : &*it;
}

std::size_t Repository::count_by_provenance(Provenance p) const {
    return static_cast<std::size_t>(
        std::count_if(facts_.begin(), facts_.end(),
                      [p](const Fact& f) { return f.provenance == p; }));
}

void Repository::validate() const {
    taxonomy_.validate();
    for (const auto& [id, obj] : objects_) {
        for (const auto& child : obj.children)
            if (!has_object(child))
                throw Error(ErrorCode::UnknownObject,
                            "object '" + id + "' lists missing child '" + child + "'");
        for (const auto& cls : obj.classifications)
            if (!taxonomy_.contains(cls))
                throw Error(ErrorCode::UnknownNode,
                            "object '" + id + "' classified at unknown node '" + cls + "'");
    }
    // nesting acyclicity via DFS coloring
    enum class Color { White, Grey, Black };
    std::map<std::string, Color> color;
    std::function<void(const std::string&)> visit = [&](const std::string& id) {
        color[id] = Color::Grey;
        for (const auto& child : objects_.at(id).children) {
            auto c = color.count(child) ? color[child] : Color::White;
            if (c == Color::Grey)
                throw Error(ErrorCode::InvalidData,
                            "nesting cycle through object '" + child + "'");
            if (c == Color::White) visit(child);
        }
        color[id] = Color::Black;
    };
    for (const auto& [id, obj] : objects_)
        if (!color.count(id)) visit(id);

    for (const auto& fact : facts_) {
        check_endpoints(fact);
        bool inferred = fact.provenance == Provenance::Inferred;
        bool has_derivation = fact.derivation && !fact.derivation->premises.empty();
        if (inferred != has_derivation)
            throw Error(ErrorCode::InvalidData,
                        "fact '" + fact.key() +
                            (inferred ? "' is inferred but lacks a derivation"
                                      : "' carries a derivation but is not inferred"));
    }
}

Repository structural_and_taxonomic_seed(const Repository& repo) {
    Repository out = repo;
    for (const auto& [id, obj] : repo.objects()) {
        for (const auto& child : obj.children) {
            Fact f;
            f.subject = id;
            f.relation = Relation::HasPart;
            f.object = child;
            f.provenance = Provenance::Structural;
            out.add_fact(std::move(f));
        }
    }
    const auto& taxonomy = repo.taxonomy();
    for (const auto& [broader_id, broader] : repo.objects()) {
        for (const auto& [narrower_id, narrower] : repo.objects()) {
            bool related = false;
            for (const auto& a : broader.classifications) {
                for (const auto& b : narrower.classifications) {
                    if (taxonomy.is_strict_ancestor(a, b)) {
                        related = true;
                        break;
                    }
                }
                if (related) break;
            }
            if (!related) continue;
            Fact f;
            f.subject = broader_id;
            f.relation = Relation::IsBroaderThan;
            f.object = narrower_id;
            f.provenance = Provenance::Taxonomic;
            out.add_fact(std::move(f));
        }
    }
    return out;
}

} // namespace semnet
