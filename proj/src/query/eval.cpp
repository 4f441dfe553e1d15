#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "query/query.hpp"

namespace semnet::query {

namespace {

using Env = std::map<std::string, rdf::Term>;

// True when the pattern position accepts the term under the environment;
// binds free variables into env.
bool unify(const PatternTerm& p, const rdf::Term& value, Env& env,
           std::vector<std::string>& bound_here) {
    if (!p.is_variable) return p.term == value;
    auto it = env.find(p.variable);
    if (it != env.end()) return it->second == value;
    env.emplace(p.variable, value);
    bound_here.push_back(p.variable);
    return true;
}

void join(const rdf::StatementStore& store, const std::vector<TriplePattern>& patterns,
          std::size_t i, Env& env, const std::vector<std::string>& select_vars,
          std::set<std::vector<rdf::Term>>& out) {
    if (i == patterns.size()) {
        std::vector<rdf::Term> row;
        row.reserve(select_vars.size());
        for (const auto& v : select_vars) row.push_back(env.at(v));
        out.insert(std::move(row));
        return;
    }
    const auto& pattern = patterns[i];
    for (const auto& triple : store.triples()) {
        std::vector<std::string> bound;
        bool ok = unify(pattern.subject, triple.subject, env, bound) &&
                  unify(pattern.predicate, triple.predicate, env, bound) &&
                  unify(pattern.object, triple.object, env, bound);
        if (ok) join(store, patterns, i + 1, env, select_vars, out);
        for (const auto& v : bound) env.erase(v);
    }
}

} // namespace

BindingSet evaluate(const rdf::StatementStore& store, const Query& query) {
    std::set<std::vector<rdf::Term>> rows;
    Env env;
    join(store, query.patterns, 0, env, query.select_vars, rows);

    BindingSet result;
    result.vars = query.select_vars;
    result.rows.assign(rows.begin(), rows.end());
    return result;
}

std::string bindings_to_tsv(const BindingSet& bindings, const rdf::PrefixMap& prefixes) {
    std::ostringstream out;
    for (std::size_t i = 0; i < bindings.vars.size(); ++i)
        out << (i ? "\t" : "") << '?' << bindings.vars[i];
    out << '\n';

    std::vector<std::string> lines;
    for (const auto& row : bindings.rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) line += '\t';
            line += rdf::term_to_text(row[i], prefixes);
        }
        lines.push_back(std::move(line));
    }
    std::sort(lines.begin(), lines.end());
    for (const auto& line : lines) out << line << '\n';
    return out.str();
}

} // namespace semnet::query
