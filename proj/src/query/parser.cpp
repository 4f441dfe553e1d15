#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "query/query.hpp"
#include "support/error.hpp"

namespace semnet::query {

namespace {

bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
}

class Parser {
public:
    Parser(const std::string& text, rdf::PrefixMap base) : text_(text) {
        query_.prefixes = std::move(base);
    }

    Query parse() {
        while (eat_keyword("PREFIX")) prefix_decl();
        if (!eat_keyword("SELECT")) fail("expected SELECT");
        select_clause();
        if (!eat_keyword("WHERE")) fail("expected WHERE");
        where_clause();
        skip_ws();
        if (pos_ < text_.size()) fail("trailing input after query");
        validate();
        return std::move(query_);
    }

private:
    [[noreturn]] void fail(const std::string& msg) {
        throw Error(ErrorCode::ParseError, "query parse error at line " + std::to_string(line_) +
                                               ", column " + std::to_string(col_) + ": " + msg);
    }

    void advance() {
        if (pos_ < text_.size()) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            advance();
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool eat(char c) {
        skip_ws();
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!eat(c)) fail(std::string("expected '") + c + "' " + what);
    }

    // Keywords are matched case-insensitively and must not run into a name.
    bool eat_keyword(std::string_view keyword) {
        skip_ws();
        if (pos_ + keyword.size() > text_.size()) return false;
        for (std::size_t i = 0; i < keyword.size(); ++i) {
            char a = static_cast<char>(std::toupper(static_cast<unsigned char>(text_[pos_ + i])));
            if (a != keyword[i]) return false;
        }
        std::size_t after = pos_ + keyword.size();
        if (after < text_.size() && name_char(text_[after])) return false;
        for (std::size_t i = 0; i < keyword.size(); ++i) advance();
        return true;
    }

    std::string name(const char* what) {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && name_char(text_[pos_])) advance();
        if (pos_ == start) fail(std::string("expected ") + what);
        return text_.substr(start, pos_ - start);
    }

    void prefix_decl() {
        std::string prefix = name("prefix name");
        expect(':', "after prefix name");
        expect('<', "opening iri");
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != '>') advance();
        if (pos_ >= text_.size()) fail("unterminated iri");
        std::string iri = text_.substr(start, pos_ - start);
        advance(); // '>'
        query_.prefixes[prefix] = std::move(iri);
    }

    void select_clause() {
        skip_ws();
        while (peek() == '?') {
            advance();
            query_.select_vars.push_back(name("variable name"));
            skip_ws();
        }
        if (query_.select_vars.empty()) fail("SELECT needs at least one ?variable");
    }

    PatternTerm pattern_term() {
        skip_ws();
        char c = peek();
        if (c == '?') {
            advance();
            return PatternTerm::var(name("variable name"));
        }
        if (c == '<') {
            advance();
            std::size_t start = pos_;
            while (pos_ < text_.size() && text_[pos_] != '>') advance();
            if (pos_ >= text_.size()) fail("unterminated iri");
            std::string iri = text_.substr(start, pos_ - start);
            advance();
            return PatternTerm::ground(rdf::Term::iri(std::move(iri)));
        }
        if (c == '"') {
            advance();
            std::size_t start = pos_;
            while (pos_ < text_.size() && text_[pos_] != '"') advance();
            if (pos_ >= text_.size()) fail("unterminated string literal");
            std::string value = text_.substr(start, pos_ - start);
            advance();
            return PatternTerm::ground(rdf::Term::literal(std::move(value)));
        }
        std::string prefix = name("term");
        expect(':', "in prefixed name");
        std::string local;
        while (pos_ < text_.size() && name_char(text_[pos_])) {
            local += text_[pos_];
            advance();
        }
        auto it = query_.prefixes.find(prefix);
        if (it == query_.prefixes.end())
            throw Error(ErrorCode::UnknownPrefix,
                        "undeclared prefix '" + prefix + "' at line " + std::to_string(line_));
        return PatternTerm::ground(rdf::Term::iri(it->second + local));
    }

    void where_clause() {
        expect('{', "to open the pattern block");
        for (;;) {
            TriplePattern pattern;
            pattern.subject = pattern_term();
            pattern.predicate = pattern_term();
            pattern.object = pattern_term();
            query_.patterns.push_back(std::move(pattern));
            bool more = eat('.');
            skip_ws();
            if (peek() == '}') {
                advance();
                return;
            }
            if (!more) fail("expected '.' between patterns or '}'");
        }
    }

    void validate() {
        std::set<std::string> pattern_vars;
        for (const auto& p : query_.patterns)
            for (const auto* t : {&p.subject, &p.predicate, &p.object})
                if (t->is_variable) pattern_vars.insert(t->variable);
        for (const auto& v : query_.select_vars)
            if (!pattern_vars.count(v))
                throw Error(ErrorCode::ParseError,
                            "selected variable ?" + v + " does not occur in any pattern");
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Query query_;
};

std::string pattern_term_text(const PatternTerm& t, const rdf::PrefixMap& prefixes) {
    if (t.is_variable) return "?" + t.variable;
    return rdf::term_to_text(t.term, prefixes);
}

} // namespace

Query parse_query(const std::string& text, const rdf::PrefixMap& base_prefixes) {
    return Parser(text, base_prefixes).parse();
}

std::string print_query(const Query& query) {
    std::ostringstream out;
    for (const auto& [prefix, iri] : query.prefixes)
        out << "PREFIX " << prefix << ":<" << iri << ">\n";
    out << "SELECT";
    for (const auto& v : query.select_vars) out << " ?" << v;
    out << "\nWHERE {";
    for (std::size_t i = 0; i < query.patterns.size(); ++i) {
        const auto& p = query.patterns[i];
        if (i) out << " .";
        out << ' ' << pattern_term_text(p.subject, query.prefixes) << ' '
            << pattern_term_text(p.predicate, query.prefixes) << ' '
            << pattern_term_text(p.object, query.prefixes);
    }
    out << " }\n";
    return out.str();
}

} // namespace semnet::query
