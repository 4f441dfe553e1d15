#include "query/context.hpp"

#include <json.hpp>

#include "core/repository_json.hpp" // read_file
#include "support/error.hpp"

namespace semnet::query {

using nlohmann::json;

LinkContextDef context_from_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object())
        throw Error(ErrorCode::ParseError, "malformed link-context JSON");
    LinkContextDef def;
    def.id = doc.value("id", "");
    def.creator = doc.value("creator", "");
    def.title = doc.value("title", "");
    def.description = doc.value("description", "");
    if (!doc.contains("query") || !doc.at("query").is_string())
        throw Error(ErrorCode::ParseError, "link context needs a 'query' string");
    def.query_text = doc.at("query").get<std::string>();
    return def;
}

LinkContextDef load_context(const std::string& path) {
    return context_from_json(read_file(path));
}

LinkSelection select_links(const rdf::StatementStore& store, const LinkContextDef& context) {
    Query query = parse_query(context.query_text, store.prefixes());
    BindingSet bindings = evaluate(store, query);

    LinkSelection out;
    for (const auto& row : bindings.rows) {
        const rdf::Term& candidate = row.front(); // first select var binds links
        if (!candidate.is_iri()) {
            out.warnings.push_back("binding '" + candidate.value + "' is not an iri");
            continue;
        }
        try {
            out.links.push_back(rdf::reified_to_link(store, candidate.value));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::IncompleteReification) throw;
            out.warnings.push_back("skipping '" + candidate.value + "': " + e.what());
        }
    }
    return out;
}

} // namespace semnet::query
