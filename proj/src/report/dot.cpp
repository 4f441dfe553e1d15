#include "report/dot.hpp"

#include <sstream>

namespace semnet::report {

namespace {

std::string escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

} // namespace

std::string export_dot(const Repository& repo, const DotOptions& options) {
    std::ostringstream out;
    out << "digraph semnet {\n";
    out << "  node [shape=box];\n";
    for (const auto& [id, obj] : repo.objects()) {
        out << "  \"" << escape(id) << "\" [label=\""
            << escape(obj.title.empty() ? id : obj.title) << "\"];\n";
    }
    for (const auto& fact : repo.facts()) {
        const auto& traits = relation_traits(fact.relation);
        if (options.dedup_mirrors) {
            if (traits.symmetric) {
                if (fact.subject > fact.object) continue; // one edge per pair
            } else if (!traits.canonical) {
                continue;
            }
        }
        out << "  \"" << escape(fact.subject) << "\" -> \"" << escape(fact.object)
            << "\" [label=\"" << relation_name(fact.relation) << '"';
        if (traits.symmetric) out << ", dir=none";
        if (is_incorrectness(fact.relation)) out << ", color=red, fontcolor=red";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace semnet::report
