#include "rdf/store.hpp"

#include <json.hpp>

#include "core/repository_json.hpp" // read_file/write_file
#include "support/error.hpp"

namespace semnet::rdf {

using nlohmann::json;

namespace {

constexpr const char* kRdfBase = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
constexpr const char* kDcBase = "http://purl.org/dc/elements/1.1/";
constexpr const char* kMirBase = "http://www.rz.fhtw-berlin.de/MIR/mir#";
constexpr const char* kLomBase = "http://ltsc.ieee.org/xsd/LOM#";
constexpr const char* kEloBase = "http://www.rz.fhtw-berlin.de/MIR/elo#";
constexpr const char* kAnchorBase = "http://www.rz.fhtw-berlin.de/MIR/anchor#";
constexpr const char* kLinkBase = "http://www.rz.fhtw-berlin.de/MIR/link#";

bool pname_local_ok(std::string_view local) {
    for (char c : local) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                  (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.';
        if (!ok) return false;
    }
    return true;
}

} // namespace

const PrefixMap& default_prefixes() {
    static const PrefixMap prefixes = {
        {"rdf", kRdfBase},   {"dc", kDcBase},         {"mir", kMirBase},
        {"lom", kLomBase},   {"elo", kEloBase},       {"anchor", kAnchorBase},
        {"link", kLinkBase},
    };
    return prefixes;
}

namespace iri {
std::string rdf_type() { return std::string(kRdfBase) + "type"; }
std::string rdf_statement() { return std::string(kRdfBase) + "Statement"; }
std::string rdf_subject() { return std::string(kRdfBase) + "subject"; }
std::string rdf_predicate() { return std::string(kRdfBase) + "predicate"; }
std::string rdf_object() { return std::string(kRdfBase) + "object"; }
std::string dc_title() { return std::string(kDcBase) + "title"; }
std::string dc_creator() { return std::string(kDcBase) + "creator"; }
std::string mir_label() { return std::string(kMirBase) + "label"; }
std::string elo(const std::string& id) { return std::string(kEloBase) + id; }
std::string anchor(const std::string& id) { return std::string(kAnchorBase) + id; }
std::string link(const std::string& id) { return std::string(kLinkBase) + id; }
std::string taxonomy_node(const std::string& id) { return std::string(kMirBase) + id; }
std::string lom(const std::string& field_path) { return std::string(kLomBase) + field_path; }
} // namespace iri

std::string expand_iri(const std::string& text, const PrefixMap& prefixes) {
    if (text.size() >= 2 && text.front() == '<' && text.back() == '>')
        return text.substr(1, text.size() - 2);
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        std::string prefix = text.substr(0, colon);
        auto it = prefixes.find(prefix);
        if (it != prefixes.end()) return it->second + text.substr(colon + 1);
        // full iris carry a scheme followed by '//' or look like urn:
        if (text.find("://") != std::string::npos || prefix == "urn") return text;
        throw Error(ErrorCode::UnknownPrefix, "undeclared prefix '" + prefix + "'");
    }
    throw Error(ErrorCode::ParseError, "not an iri or prefixed name: " + text);
}

std::string compact_iri(const std::string& iri_text, const PrefixMap& prefixes) {
    std::string best_prefix;
    std::string best_base;
    for (const auto& [prefix, base] : prefixes) {
        if (iri_text.size() <= base.size() || iri_text.compare(0, base.size(), base) != 0)
            continue;
        if (base.size() > best_base.size()) {
            best_base = base;
            best_prefix = prefix;
        }
    }
    if (!best_base.empty()) {
        std::string local = iri_text.substr(best_base.size());
        if (pname_local_ok(local)) return best_prefix + ":" + local;
    }
    return "<" + iri_text + ">";
}

std::string term_to_text(const Term& term, const PrefixMap& prefixes) {
    if (term.is_iri()) return compact_iri(term.value, prefixes);
    return "\"" + term.value + "\"";
}

Term term_from_text(const std::string& text, const PrefixMap& prefixes) {
    if (text.size() >= 2 && text.front() == '"' && text.back() == '"')
        return Term::literal(text.substr(1, text.size() - 2));
    return Term::iri(expand_iri(text, prefixes));
}

std::vector<Term> StatementStore::objects_of(const Term& subject,
                                             const std::string& predicate_iri) const {
    std::vector<Term> out;
    for (const auto& t : triples_)
        if (t.subject == subject && t.predicate.value == predicate_iri)
            out.push_back(t.object);
    return out;
}

StatementStore store_from_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object())
        throw Error(ErrorCode::ParseError, "malformed statement store JSON");

    StatementStore store;
    if (doc.contains("prefixes"))
        for (const auto& [prefix, base] : doc.at("prefixes").items())
            store.declare_prefix(prefix, base.get<std::string>());

    if (doc.contains("triples")) {
        for (const auto& entry : doc.at("triples")) {
            Triple t;
            t.subject = term_from_text(entry.at("s").get<std::string>(), store.prefixes());
            t.predicate = term_from_text(entry.at("p").get<std::string>(), store.prefixes());
            t.object = term_from_text(entry.at("o").get<std::string>(), store.prefixes());
            if (!t.subject.is_iri() || !t.predicate.is_iri())
                throw Error(ErrorCode::ParseError,
                            "triple subject and predicate must be iris");
            if (entry.contains("lang")) {
                if (!t.object.is_iri())
                    t.object.lang = entry.at("lang").get<std::string>();
            }
            store.insert(std::move(t));
        }
    }
    return store;
}

StatementStore load_store(const std::string& path) {
    return store_from_json(read_file(path));
}

std::string store_to_json(const StatementStore& store) {
    json doc = json::object();
    json prefixes = json::object();
    for (const auto& [prefix, base] : store.prefixes()) prefixes[prefix] = base;
    doc["prefixes"] = std::move(prefixes);

    json triples = json::array();
    for (const auto& t : store.triples()) {
        json row = json::object();
        row["s"] = term_to_text(t.subject, store.prefixes());
        row["p"] = term_to_text(t.predicate, store.prefixes());
        row["o"] = term_to_text(t.object, store.prefixes());
        if (t.object.lang) row["lang"] = *t.object.lang;
        triples.push_back(std::move(row));
    }
    doc["triples"] = std::move(triples);
    return doc.dump(2) + "\n";
}

void save_store(const StatementStore& store, const std::string& path) {
    write_file(path, store_to_json(store));
}

} // namespace semnet::rdf
