#ifndef SEMNET_QUERY_QUERY_HPP
#define SEMNET_QUERY_QUERY_HPP

#include <string>
#include <vector>

#include "rdf/store.hpp"

namespace semnet::query {

// A pattern position: either a variable or a ground term.
struct PatternTerm {
    bool is_variable = false;
    std::string variable;
    rdf::Term term;

    static PatternTerm var(std::string name) {
        PatternTerm p;
        p.is_variable = true;
        p.variable = std::move(name);
        return p;
    }
    static PatternTerm ground(rdf::Term t) {
        PatternTerm p;
        p.term = std::move(t);
        return p;
    }

    bool operator==(const PatternTerm&) const = default;
};

struct TriplePattern {
    PatternTerm subject;
    PatternTerm predicate;
    PatternTerm object;

    bool operator==(const TriplePattern&) const = default;
};

// Conjunctive SELECT query: `PREFIX p:<iri>`* `SELECT ?v+` `WHERE { ... }`.
struct Query {
    rdf::PrefixMap prefixes; // declared plus inherited base prefixes
    std::vector<std::string> select_vars;
    std::vector<TriplePattern> patterns;

    bool operator==(const Query&) const = default;
};

// Parses the conjunctive subset. Base prefixes (typically the store's) are
// visible to the query; PREFIX declarations extend or override them.
// Errors: Error{ParseError} with line/column, Error{UnknownPrefix}.
Query parse_query(const std::string& text, const rdf::PrefixMap& base_prefixes = {});

// Canonical text form; parse(print(q)) == q.
std::string print_query(const Query& query);

// Query results: rows of terms aligned with select_vars, duplicate-free,
// sorted lexicographically by serialized form.
struct BindingSet {
    std::vector<std::string> vars;
    std::vector<std::vector<rdf::Term>> rows;
};

BindingSet evaluate(const rdf::StatementStore& store, const Query& query);

// Tab-separated serialization, one row per line, `?var` header included.
std::string bindings_to_tsv(const BindingSet& bindings, const rdf::PrefixMap& prefixes);

} // namespace semnet::query

#endif
