#include "reasoner/rule.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "support/error.hpp"

namespace semnet {

namespace {

void validate_rule(const Rule& rule, int line_no) {
    auto where = [&] {
        return line_no > 0 ? " (line " + std::to_string(line_no) + ")" : "";
    };
    if (rule.body.empty())
        throw Error(ErrorCode::InvalidData, "rule '" + rule.id + "' has an empty body" + where());
    std::set<std::string> body_vars;
    for (const auto& atom : rule.body) {
        body_vars.insert(atom.left);
        body_vars.insert(atom.right);
    }
    for (const auto& v : {rule.head.left, rule.head.right})
        if (!body_vars.count(v))
            throw Error(ErrorCode::InvalidData,
                        "rule '" + rule.id + "' is not range-restricted: head variable '" +
                            v + "' missing from body" + where());
}

struct LineParser {
    std::string_view text;
    std::size_t pos = 0;
    int line_no;

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorCode::ParseError,
                    "rule line " + std::to_string(line_no) + ", column " +
                        std::to_string(pos + 1) + ": " + msg);
    }

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    bool eat_literal(std::string_view lit) {
        skip_ws();
        if (text.substr(pos, lit.size()) == lit) {
            pos += lit.size();
            return true;
        }
        return false;
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
                text[pos] == '-' || text[pos] == '.'))
            ++pos;
        if (pos == start) fail("expected an identifier");
        return std::string(text.substr(start, pos - start));
    }

    Atom atom() {
        std::string rel = ident();
        auto relation = try_relation_from_name(rel);
        if (!relation)
            throw Error(ErrorCode::UnknownRelation,
                        "rule line " + std::to_string(line_no) + ": unknown relation '" +
                            rel + "'");
        expect('(');
        std::string left = ident();
        expect(',');
        std::string right = ident();
        expect(')');
        return Atom{*relation, std::move(left), std::move(right)};
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
};

} // namespace

std::string format_rule(const Rule& rule) {
    std::ostringstream out;
    out << rule.id << ": ";
    for (std::size_t i = 0; i < rule.body.size(); ++i) {
        if (i) out << " & ";
        const auto& a = rule.body[i];
        out << relation_name(a.relation) << '(' << a.left << ',' << a.right << ')';
    }
    out << " => " << relation_name(rule.head.relation) << '(' << rule.head.left << ','
        << rule.head.right << ')';
    return out.str();
}

std::string format_rules(const std::vector<Rule>& rules) {
    std::string out;
    for (const auto& rule : rules) {
        out += format_rule(rule);
        out += '\n';
    }
    return out;
}

std::vector<Rule> parse_rules(const std::string& text) {
    std::vector<Rule> rules;
    std::istringstream lines(text);
    std::string line;
    int line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        bool blank = std::all_of(line.begin(), line.end(), [](unsigned char c) {
            return std::isspace(c);
        });
        if (blank) continue;

        LineParser p{line, 0, line_no};
        Rule rule;
        rule.id = p.ident();
        p.expect(':');
        rule.body.push_back(p.atom());
        while (p.eat('&')) rule.body.push_back(p.atom());
        if (!p.eat_literal("=>")) p.fail("expected '=>'");
        rule.head = p.atom();
        if (!p.at_end()) p.fail("trailing input after rule");
        validate_rule(rule, line_no);
        rules.push_back(std::move(rule));
    }
    return rules;
}

namespace {

Rule make_rule(std::string id, std::vector<Atom> body, Atom head) {
    Rule r{std::move(id), std::move(body), std::move(head)};
    validate_rule(r, 0);
    return r;
}

std::vector<Rule> build_structural_rules() {
    std::vector<Rule> rules;
    for (Relation r : all_relations()) {
        const auto& traits = relation_traits(r);
        std::string name(relation_name(r));
        if (traits.symmetric)
            rules.push_back(make_rule("sym-" + name, {{r, "A", "B"}}, {r, "B", "A"}));
        else
            rules.push_back(
                make_rule("inv-" + name, {{r, "A", "B"}}, {traits.inverse, "B", "A"}));
    }
    for (Relation r : all_relations()) {
        if (!is_transitive(r)) continue;
        std::string name(relation_name(r));
        rules.push_back(
            make_rule("trans-" + name, {{r, "A", "B"}, {r, "B", "C"}}, {r, "A", "C"}));
    }
    return rules;
}

std::vector<Rule> build_default_rules() {
    using R = Relation;
    std::vector<Rule> rules;

    // Thematic propagation.
    rules.push_back(make_rule("narrower-through-format",
                              {{R::IsNarrowerThan, "A", "B"}, {R::IsFormatOf, "B", "C"}},
                              {R::IsNarrowerThan, "A", "C"}));
    rules.push_back(make_rule("based-on-part-of-whole",
                              {{R::IsBasedOn, "A", "B"}, {R::HasPart, "C", "B"}},
                              {R::IsBasedOn, "A", "C"}));
    rules.push_back(make_rule("requires-carries-basis",
                              {{R::Requires, "A", "B"}, {R::IsBasedOn, "B", "C"}},
                              {R::IsBasedOn, "A", "C"}));
    rules.push_back(make_rule("more-specific-through-format",
                              {{R::IsMoreSpecificThan, "A", "B"}, {R::IsFormatOf, "B", "C"}},
                              {R::IsMoreSpecificThan, "A", "C"}));
    rules.push_back(make_rule("versions-sharing-format-alt",
                              {{R::IsVersionOf, "A", "B"},
                               {R::IsFormatOf, "A", "C"},
                               {R::IsFormatOf, "B", "C"}},
                              {R::IsAlternativeTo, "A", "B"}));
    rules.push_back(make_rule("versioned-sharing-format-alt",
                              {{R::HasVersion, "A", "B"},
                               {R::IsFormatOf, "A", "C"},
                               {R::IsFormatOf, "B", "C"}},
                              {R::IsAlternativeTo, "A", "B"}));

    // Part/whole bridging of mandatory dependence.
    rules.push_back(make_rule("whole-requires-what-parts-require",
                              {{R::HasPart, "A", "B"}, {R::Requires, "B", "C"}},
                              {R::Requires, "A", "C"}));
    rules.push_back(make_rule("requiring-part-requires-whole",
                              {{R::Requires, "A", "B"}, {R::IsPartOf, "B", "C"}},
                              {R::Requires, "A", "C"}));

    // Structural closure generated from the algebra table.
    for (const auto& rule : build_structural_rules()) rules.push_back(rule);

    // Consistency monitoring; evaluated in the final stratum.
    rules.push_back(make_rule("incorrect-part-cycle",
                              {{R::IsPartOf, "A", "B"}, {R::IsPartOf, "B", "A"}},
                              {R::IncorrectPart, "A", "B"}));
    rules.push_back(make_rule("incorrect-format-version",
                              {{R::IsFormatOf, "A", "B"}, {R::HasVersion, "B", "A"}},
                              {R::IncorrectFormatVersion, "A", "B"}));
    return rules;
}

} // namespace

const std::vector<Rule>& default_rules() {
    static const std::vector<Rule> rules = build_default_rules();
    return rules;
}

const std::vector<Rule>& structural_rules() {
    static const std::vector<Rule> rules = build_structural_rules();
    return rules;
}

std::string default_rules_text() {
    std::string out = "# semnet default rule set\n";
    out += format_rules(default_rules());
    return out;
}

bool is_incorrectness_rule(const Rule& rule) {
    return is_incorrectness(rule.head.relation);
}

std::vector<Rule> incorrectness_rules() {
    // Detection rules conclude incorrectness from regular relations; the
    // generated sym- mirrors over incorrectness relations are not detectors.
    std::vector<Rule> out;
    for (const auto& rule : default_rules()) {
        if (!is_incorrectness_rule(rule)) continue;
        bool from_regular =
            std::none_of(rule.body.begin(), rule.body.end(),
                         [](const Atom& a) { return is_incorrectness(a.relation); });
        if (from_regular) out.push_back(rule);
    }
    return out;
}

} // namespace semnet
