#include "rdf/reify.hpp"

#include <algorithm>
#include <map>

#include "support/error.hpp"

namespace semnet::rdf {

namespace {

// Canonical LOM-style paths for the fields the authoring sheet exercises;
// anything else passes through under its own key.
const std::map<std::string, std::string>& attribute_paths() {
    static const std::map<std::string, std::string> paths = {
        {"description", "general.description"},
        {"structure", "general.structure"},
        {"status", "lifeCycle.status"},
        {"context", "educational.context"},
        {"difficulty", "educational.difficulty"},
        {"semanticDensity", "educational.semanticDensity"},
        {"learningResourceType", "educational.learningResourceType"},
    };
    return paths;
}

} // namespace

void LinkRecord::normalize_titles() {
    std::sort(titles.begin(), titles.end());
    titles.erase(std::unique(titles.begin(), titles.end()), titles.end());
}

std::set<Triple> metadata_to_statements(const ELearningObject& elo) {
    std::set<Triple> out;
    Term subject = Term::iri(iri::elo(elo.id));

    auto emit = [&](const std::string& field_path, Term object) {
        out.insert(Triple{subject, Term::iri(iri::lom(field_path)), std::move(object)});
    };

    if (!elo.title.empty()) emit("general.title", Term::literal(elo.title));
    if (!elo.author.empty()) emit("lifeCycle.author", Term::literal(elo.author));
    for (const auto& keyword : elo.keywords)
        emit("general.keyword", Term::literal(keyword));
    for (const auto& node : elo.classifications)
        emit("classification", Term::iri(iri::taxonomy_node(node)));
    for (const auto& [key, value] : elo.attributes) {
        if (value.empty()) continue;
        auto it = attribute_paths().find(key);
        emit(it != attribute_paths().end() ? it->second : key, Term::literal(value));
    }
    return out;
}

std::set<Triple> harvest_anchor_descriptors(const Anchor& anchor,
                                            const std::set<Triple>& elo_statements) {
    Term expected_subject = Term::iri(iri::elo(anchor.resource));
    Term anchor_subject = Term::iri(expand_iri(anchor.id, default_prefixes()));

    std::set<Triple> out;
    for (const auto& statement : elo_statements) {
        if (!(statement.subject == expected_subject))
            throw Error(ErrorCode::ResourceMismatch,
                        "anchor resource '" + anchor.resource +
                            "' does not match statement subject '" + statement.subject.value +
                            "'");
        out.insert(Triple{anchor_subject, statement.predicate, statement.object});
    }
    if (anchor.title)
        out.insert(Triple{anchor_subject, Term::iri(iri::dc_title()), Term::literal(*anchor.title)});
    if (anchor.label)
        out.insert(Triple{anchor_subject, Term::iri(iri::mir_label()), Term::literal(*anchor.label)});
    return out;
}

std::set<Triple> link_to_reified(const LinkRecord& link) {
    const auto& prefixes = default_prefixes();
    Term subject = Term::iri(expand_iri(link.id, prefixes));

    std::set<Triple> out;
    out.insert(Triple{subject, Term::iri(iri::rdf_type()), Term::iri(iri::rdf_statement())});
    out.insert(Triple{subject, Term::iri(iri::rdf_subject()),
                      Term::iri(expand_iri(link.from, prefixes))});
    out.insert(Triple{subject, Term::iri(iri::rdf_predicate()),
                      Term::iri(expand_iri(link.arcrole, prefixes))});
    out.insert(Triple{subject, Term::iri(iri::rdf_object()),
                      Term::iri(expand_iri(link.to, prefixes))});
    for (const auto& title : link.titles)
        out.insert(Triple{subject, Term::iri(iri::dc_title()), Term::literal(title)});
    if (link.author)
        out.insert(Triple{subject, Term::iri(iri::dc_creator()), Term::literal(*link.author)});
    return out;
}

LinkRecord reified_to_link(const StatementStore& store, const std::string& link_iri) {
    Term subject = Term::iri(expand_iri(link_iri, store.prefixes()));

    auto one_iri = [&](const std::string& predicate, const char* what) {
        auto objects = store.objects_of(subject, predicate);
        if (objects.size() != 1 || !objects.front().is_iri())
            throw Error(ErrorCode::IncompleteReification,
                        "reified link '" + subject.value + "' lacks a unique " + what);
        return objects.front().value;
    };

    bool is_statement = store.contains(
        Triple{subject, Term::iri(iri::rdf_type()), Term::iri(iri::rdf_statement())});
    if (!is_statement)
        throw Error(ErrorCode::IncompleteReification,
                    "'" + subject.value + "' is not typed rdf:Statement");

    LinkRecord link;
    link.id = subject.value;
    link.from = one_iri(iri::rdf_subject(), "rdf:subject");
    link.arcrole = one_iri(iri::rdf_predicate(), "rdf:predicate");
    link.to = one_iri(iri::rdf_object(), "rdf:object");

    for (const auto& title : store.objects_of(subject, iri::dc_title()))
        if (!title.is_iri()) link.titles.push_back(title.value);
    link.normalize_titles();

    auto creators = store.objects_of(subject, iri::dc_creator());
    if (!creators.empty() && !creators.front().is_iri()) link.author = creators.front().value;
    return link;
}

} // namespace semnet::rdf
