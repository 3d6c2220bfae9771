#include "stratmorse/parse.hpp"

#include <cctype>
#include <map>
#include <set>
#include <vector>

namespace stratmorse {

namespace {

enum class Tok { Ident, Integer, Punct, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    int line = 0;
    int column = 0;
};

const std::set<std::string> kKeywords = {"vars", "stratum", "dim", "closure",
                                         "f",    "l",       "option"};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](char c) {
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') advance(text[i++]);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(c);
            ++i;
            continue;
        }
        Token t;
        t.line = line;
        t.column = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Tok::Ident;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
                t.text += text[i];
                advance(text[i++]);
            }
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Tok::Integer;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                t.text += text[i];
                advance(text[i++]);
            }
        } else if (std::string("+-*/^(),=").find(c) != std::string::npos) {
            t.kind = Tok::Punct;
            t.text = c;
            advance(c);
            ++i;
        } else {
            throw ParseError(line, col, std::string("unexpected character '") + c +
                                            "' at line " + std::to_string(line));
        }
        out.push_back(std::move(t));
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& text) : tokens_(tokenize(text)) {}

    JobSpec parse_file() {
        expect_keyword("vars");
        parse_variables();
        std::vector<Stratum> strata;
        while (at_keyword("stratum")) strata.push_back(parse_stratum());
        if (strata.empty()) fail("origin stratum required");
        expect_keyword("f");
        Polynomial f = parse_poly();
        std::optional<Polynomial> l;
        if (at_keyword("l")) {
            Token tok = peek();
            next();
            l = parse_poly();
            if (!l->is_linear_form())
                throw ParseError(tok.line, tok.column,
                                 "l must be a linear homogeneous form at line " +
                                     std::to_string(tok.line));
        }
        JobOptions options;
        while (at_keyword("option")) parse_option(options);
        if (peek().kind != Tok::End) fail_at(peek(), "trailing input");
        if (!l && options.random_l_attempts == 0)
            fail("l missing and random_l_attempts is 0");
        try {
            StratifiedGerm germ(variables_, std::move(strata));
            return JobSpec{std::move(germ), std::move(f), std::move(l), options};
        } catch (const std::invalid_argument& e) {
            throw ParseError(0, 0, e.what());
        }
    }

    Polynomial parse_single_poly(const std::vector<std::string>& variables) {
        variables_ = variables;
        for (std::size_t i = 0; i < variables.size(); ++i) var_index_[variables[i]] = i;
        Polynomial p = parse_poly();
        if (peek().kind != Tok::End) fail_at(peek(), "trailing input");
        return p;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    void next() { ++pos_; }

    bool at_keyword(const std::string& kw) const {
        return peek().kind == Tok::Ident && peek().text == kw;
    }

    void expect_keyword(const std::string& kw) {
        if (!at_keyword(kw)) fail_at(peek(), "expected '" + kw + "'");
        next();
    }

    [[noreturn]] void fail_at(const Token& t, const std::string& what) const {
        std::string shown = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
        throw ParseError(t.line, t.column, what + ", got " + shown + " at line " +
                                               std::to_string(t.line));
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(0, 0, message);
    }

    void parse_variables() {
        while (peek().kind == Tok::Ident && !kKeywords.count(peek().text)) {
            const Token& t = peek();
            if (var_index_.count(t.text))
                throw ParseError(t.line, t.column, "duplicate variable '" + t.text +
                                                       "' at line " + std::to_string(t.line));
            var_index_[t.text] = variables_.size();
            variables_.push_back(t.text);
            next();
        }
        if (variables_.empty()) fail_at(peek(), "expected a variable name");
    }

    Stratum parse_stratum() {
        expect_keyword("stratum");
        if (peek().kind != Tok::Ident || kKeywords.count(peek().text))
            fail_at(peek(), "expected a stratum name");
        Token name_tok = peek();
        std::string name = peek().text;
        next();
        if (!stratum_names_.insert(name).second)
            throw ParseError(name_tok.line, name_tok.column,
                             "duplicate stratum name '" + name + "' at line " +
                                 std::to_string(name_tok.line));
        expect_keyword("dim");
        if (peek().kind != Tok::Integer) fail_at(peek(), "expected the stratum dimension");
        std::size_t dim = std::stoul(peek().text);
        next();
        expect_keyword("closure");
        std::vector<Polynomial> gens;
        gens.push_back(parse_poly());
        while (peek().kind == Tok::Punct && peek().text == ",") {
            next();
            gens.push_back(parse_poly());
        }
        return Stratum{name, dim, Ideal(variables_.size(), std::move(gens))};
    }

    void parse_option(JobOptions& options) {
        expect_keyword("option");
        if (peek().kind != Tok::Ident) fail_at(peek(), "expected an option name");
        Token name_tok = peek();
        std::string name = peek().text;
        next();
        if (!(peek().kind == Tok::Punct && peek().text == "=")) fail_at(peek(), "expected '='");
        next();
        Token value = peek();
        if (value.kind != Tok::Integer && value.kind != Tok::Ident)
            fail_at(value, "expected an option value");
        next();
        auto integer = [&]() -> unsigned long {
            if (value.kind != Tok::Integer)
                throw ParseError(value.line, value.column,
                                 "invalid value for option '" + name + "' at line " +
                                     std::to_string(value.line));
            return std::stoul(value.text);
        };
        if (name == "random_l_attempts") {
            options.random_l_attempts = static_cast<unsigned>(integer());
        } else if (name == "coefficient_bound") {
            unsigned long b = integer();
            if (b == 0)
                throw ParseError(value.line, value.column,
                                 "coefficient_bound must be positive at line " +
                                     std::to_string(value.line));
            options.coefficient_bound = static_cast<unsigned>(b);
        } else if (name == "output_format") {
            if (value.kind != Tok::Ident || (value.text != "text" && value.text != "structured"))
                throw ParseError(value.line, value.column,
                                 "invalid value for option 'output_format' at line " +
                                     std::to_string(value.line));
            options.output_format = value.text;
        } else if (name == "oracle_degree_bound") {
            unsigned long b = integer();
            if (b < 2)
                throw ParseError(value.line, value.column,
                                 "oracle_degree_bound must be at least 2 at line " +
                                     std::to_string(value.line));
            options.oracle_degree_bound = static_cast<std::uint32_t>(b);
        } else if (name == "seed") {
            if (value.kind != Tok::Integer)
                throw ParseError(value.line, value.column,
                                 "invalid value for option 'seed' at line " +
                                     std::to_string(value.line));
            options.seed = std::stoull(value.text);
        } else {
            throw ParseError(name_tok.line, name_tok.column,
                             "unknown option '" + name + "' at line " +
                                 std::to_string(name_tok.line));
        }
    }

    // expression parsing

    Polynomial parse_poly() {
        bool negative = false;
        while (peek().kind == Tok::Punct && (peek().text == "+" || peek().text == "-")) {
            if (peek().text == "-") negative = !negative;
            next();
        }
        Polynomial p = parse_term();
        if (negative) p = -p;
        while (peek().kind == Tok::Punct && (peek().text == "+" || peek().text == "-")) {
            bool minus = peek().text == "-";
            next();
            Polynomial t = parse_term();
            if (minus)
                p -= t;
            else
                p += t;
        }
        return p;
    }

    bool starts_factor() const {
        const Token& t = peek();
        if (t.kind == Tok::Integer) return true;
        if (t.kind == Tok::Punct && t.text == "(") return true;
        if (t.kind == Tok::Ident && !kKeywords.count(t.text)) return true;
        return false;
    }

    Polynomial parse_term() {
        Polynomial p = parse_factor();
        for (;;) {
            if (peek().kind == Tok::Punct && peek().text == "*") {
                next();
                p = p * parse_factor();
            } else if (starts_factor()) {
                p = p * parse_factor();  // juxtaposition
            } else {
                return p;
            }
        }
    }

    Polynomial parse_factor() {
        Polynomial base = parse_base();
        if (peek().kind == Tok::Punct && peek().text == "^") {
            next();
            if (peek().kind != Tok::Integer) fail_at(peek(), "expected an exponent");
            unsigned long e = std::stoul(peek().text);
            next();
            Polynomial out = Polynomial::constant(base.nvars(), Rational(1));
            for (unsigned long k = 0; k < e; ++k) out = out * base;
            return out;
        }
        return base;
    }

    Polynomial parse_base() {
        const Token t = peek();
        const std::size_t n = variables_.size();
        if (t.kind == Tok::Integer) {
            next();
            Rational c = rational_from_string(t.text);
            if (peek().kind == Tok::Punct && peek().text == "/") {
                next();
                if (peek().kind != Tok::Integer) fail_at(peek(), "expected a denominator");
                Rational d = rational_from_string(peek().text);
                next();
                if (d == 0)
                    throw ParseError(t.line, t.column,
                                     "zero denominator at line " + std::to_string(t.line));
                c /= d;
            }
            return Polynomial::constant(n, c);
        }
        if (t.kind == Tok::Ident && !kKeywords.count(t.text)) {
            auto it = var_index_.find(t.text);
            if (it == var_index_.end())
                throw ParseError(t.line, t.column, "undeclared variable '" + t.text +
                                                       "' at line " + std::to_string(t.line));
            next();
            return Polynomial::variable(n, it->second);
        }
        if (t.kind == Tok::Punct && t.text == "(") {
            next();
            Polynomial p = parse_poly();
            if (!(peek().kind == Tok::Punct && peek().text == ")")) fail_at(peek(), "expected ')'");
            next();
            return p;
        }
        fail_at(t, "expected a polynomial");
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::vector<std::string> variables_;
    std::map<std::string, std::size_t> var_index_;
    std::set<std::string> stratum_names_;
};

}  // namespace

JobSpec parse_input(const std::string& text) { return Parser(text).parse_file(); }

Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& variables) {
    return Parser(text).parse_single_poly(variables);
}

}  // namespace stratmorse
