#ifndef SEMNET_RDF_STORE_HPP
#define SEMNET_RDF_STORE_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace semnet::rdf {

enum class TermKind { Iri, Literal };

// Subject/predicate/object constituent. Iri values are stored fully
// expanded; prefixed names are a display and interchange affair.
struct Term {
    TermKind kind = TermKind::Iri;
    std::string value;
    std::optional<std::string> lang; // literals only

    static Term iri(std::string v) { return {TermKind::Iri, std::move(v), std::nullopt}; }
    static Term literal(std::string v, std::optional<std::string> lang = std::nullopt) {
        return {TermKind::Literal, std::move(v), std::move(lang)};
    }

    bool is_iri() const { return kind == TermKind::Iri; }

    auto tie() const { return std::tie(kind, value, lang); }
    bool operator==(const Term& o) const { return tie() == o.tie(); }
    bool operator<(const Term& o) const { return tie() < o.tie(); }
};

struct Triple {
    Term subject;   // iri
    Term predicate; // iri
    Term object;

    auto tie() const { return std::tie(subject, predicate, object); }
    bool operator==(const Triple& o) const { return tie() == o.tie(); }
    bool operator<(const Triple& o) const { return tie() < o.tie(); }
};

// prefix -> namespace iri. The shipped map covers the vocabularies the
// statement layer emits; stores may extend it.
using PrefixMap = std::map<std::string, std::string>;

const PrefixMap& default_prefixes();

// Well-known iris.
namespace iri {
std::string rdf_type();
std::string rdf_statement();
std::string rdf_subject();
std::string rdf_predicate();
std::string rdf_object();
std::string dc_title();
std::string dc_creator();
std::string mir_label();
std::string elo(const std::string& id);
std::string anchor(const std::string& id);
std::string link(const std::string& id);
std::string taxonomy_node(const std::string& id);
std::string lom(const std::string& field_path);
} // namespace iri

// Expands `prefix:local` against the map; passes through `<iri>` and full
// iris. Throws Error{UnknownPrefix} for an undeclared prefix.
std::string expand_iri(const std::string& text, const PrefixMap& prefixes);

// Longest-base prefixed form when one applies, else `<iri>`.
std::string compact_iri(const std::string& iri, const PrefixMap& prefixes);

// Lexical term form used in files: literals quoted, iris compacted.
std::string term_to_text(const Term& term, const PrefixMap& prefixes);
Term term_from_text(const std::string& text, const PrefixMap& prefixes);

class StatementStore {
public:
    StatementStore() : prefixes_(default_prefixes()) {}

    void insert(Triple t) { triples_.insert(std::move(t)); }
    void insert(const std::set<Triple>& ts) { triples_.insert(ts.begin(), ts.end()); }
    bool contains(const Triple& t) const { return triples_.count(t) != 0; }
    const std::set<Triple>& triples() const { return triples_; }
    std::size_t size() const { return triples_.size(); }

    const PrefixMap& prefixes() const { return prefixes_; }
    void declare_prefix(const std::string& prefix, const std::string& base) {
        prefixes_[prefix] = base;
    }

    // Objects of (subject, predicate, *), in store order.
    std::vector<Term> objects_of(const Term& subject, const std::string& predicate_iri) const;

private:
    std::set<Triple> triples_;
    PrefixMap prefixes_;
};

// Interchange: {"prefixes": {..}, "triples": [{"s","p","o","lang"?}]}.
StatementStore store_from_json(const std::string& text);
StatementStore load_store(const std::string& path);
std::string store_to_json(const StatementStore& store);
void save_store(const StatementStore& store, const std::string& path);

} // namespace semnet::rdf

#endif
