#ifndef SEMNET_QUERY_CONTEXT_HPP
#define SEMNET_QUERY_CONTEXT_HPP

#include <string>
#include <vector>

#include "query/query.hpp"
#include "rdf/reify.hpp"

namespace semnet::query {

// Named selection over the link base: wrapper metadata plus the query that
// extracts the matching sub-graph.
struct LinkContextDef {
    std::string id;
    std::string creator;
    std::string title;
    std::string description;
    std::string query_text;
};

// Context file: {"id","creator","title","description","query"}.
LinkContextDef context_from_json(const std::string& text);
LinkContextDef load_context(const std::string& path);

struct LinkSelection {
    std::vector<rdf::LinkRecord> links;
    std::vector<std::string> warnings; // bindings that were not reified links
};

// Evaluates the context query (first select variable binds link subjects)
// and materializes each bound link. Non-link bindings are skipped and
// reported as warnings.
LinkSelection select_links(const rdf::StatementStore& store, const LinkContextDef& context);

} // namespace semnet::query

#endif
