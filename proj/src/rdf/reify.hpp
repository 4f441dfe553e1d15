#ifndef SEMNET_RDF_REIFY_HPP
#define SEMNET_RDF_REIFY_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "core/model.hpp"
#include "rdf/store.hpp"

namespace semnet::rdf {

// Addressed sub-portion of a content resource. The locator is opaque
// path-like text; it is stored, never evaluated.
struct Anchor {
    std::string id;       // iri
    std::string resource; // object id
    std::string locator;
    std::optional<std::string> title;
    std::optional<std::string> label;
};

// Directed hyperlink between two anchors. Titles are an unordered
// collection and are kept sorted and unique.
struct LinkRecord {
    std::string id;      // iri
    std::string from;    // anchor iri
    std::string to;      // anchor iri
    std::string arcrole; // iri
    std::vector<std::string> titles;
    std::optional<std::string> author;

    void normalize_titles();
    bool operator==(const LinkRecord&) const = default;
};

// One statement per metadata field of the object: scalar fields, one per
// keyword, one lom:classification per taxonomy node. Empty fields emit
// nothing.
std::set<Triple> metadata_to_statements(const ELearningObject& elo);

// Re-subjects the object's statements to the anchor and adds the anchor's
// dedicated title/label statements. Throws Error{ResourceMismatch} if the
// statements describe a different resource.
std::set<Triple> harvest_anchor_descriptors(const Anchor& anchor,
                                            const std::set<Triple>& elo_statements);

// The reification quad plus title/creator statements; the link id becomes
// a first-class subject.
std::set<Triple> link_to_reified(const LinkRecord& link);

// Lossless inverse of link_to_reified. Throws Error{IncompleteReification}
// when the quad is missing pieces or ambiguous.
LinkRecord reified_to_link(const StatementStore& store, const std::string& link_iri);

} // namespace semnet::rdf

#endif
