#include "ego/parse.hpp"

#include <cctype>
#include <vector>

namespace ego {

ParseError::ParseError(std::size_t offset, const std::string& found,
                       const std::string& expected)
    : Error("syntax error at byte " + std::to_string(offset) + ": found " +
            found + ", expected " + expected),
      offset_(offset),
      expected_(expected) {}

namespace {

enum class Tok {
    End,
    Ident,
    KwTrue,
    KwFalse,
    Bang,
    Bar,
    Amp,
    Arrow,
    LParen,
    RParen,
    LBracket,
    RBracket,
    AtSign,
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t offset;
};

std::string describe(const Token& t) {
    switch (t.kind) {
    case Tok::End:
        return "end of input";
    case Tok::Ident:
        return "'" + t.text + "'";
    default:
        return "'" + t.text + "'";
    }
}

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (ident_start(c)) {
            std::size_t j = i + 1;
            while (j < text.size() && ident_char(text[j]))
                ++j;
            std::string word(text.substr(i, j - i));
            Tok k = Tok::Ident;
            if (word == "true")
                k = Tok::KwTrue;
            else if (word == "false")
                k = Tok::KwFalse;
            out.push_back({k, std::move(word), start});
            i = j;
            continue;
        }
        switch (c) {
        case '!':
            out.push_back({Tok::Bang, "!", start});
            ++i;
            break;
        case '|':
            out.push_back({Tok::Bar, "|", start});
            ++i;
            break;
        case '&':
            out.push_back({Tok::Amp, "&", start});
            ++i;
            break;
        case '(':
            out.push_back({Tok::LParen, "(", start});
            ++i;
            break;
        case ')':
            out.push_back({Tok::RParen, ")", start});
            ++i;
            break;
        case '[':
            out.push_back({Tok::LBracket, "[", start});
            ++i;
            break;
        case ']':
            out.push_back({Tok::RBracket, "]", start});
            ++i;
            break;
        case '@':
            out.push_back({Tok::AtSign, "@", start});
            ++i;
            break;
        case '-':
            if (i + 1 < text.size() && text[i + 1] == '>') {
                out.push_back({Tok::Arrow, "->", start});
                i += 2;
                break;
            }
            throw ParseError(start, "'-'", "'->'");
        default:
            throw ParseError(start, "character '" + std::string(1, c) + "'",
                             "a formula token");
        }
    }
    out.push_back({Tok::End, "", text.size()});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    Formula parse() {
        Formula f = implies();
        expect(Tok::End, "end of input");
        return f;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        const std::size_t i = pos_ + ahead;
        return i < toks_.size() ? toks_[i] : toks_.back();
    }

    Token advance() { return toks_[pos_++]; }

    void expect(Tok k, const std::string& what) {
        if (peek().kind != k)
            throw ParseError(peek().offset, describe(peek()), what);
        ++pos_;
    }

    Formula implies() {
        Formula lhs = disjunction();
        if (peek().kind == Tok::Arrow) {
            advance();
            return Formula::Implies(std::move(lhs), implies());
        }
        return lhs;
    }

    Formula disjunction() {
        Formula f = conjunction();
        while (peek().kind == Tok::Bar) {
            advance();
            f = Formula::Or(std::move(f), conjunction());
        }
        return f;
    }

    Formula conjunction() {
        Formula f = unary();
        while (peek().kind == Tok::Amp) {
            advance();
            f = Formula::And(std::move(f), unary());
        }
        return f;
    }

    Name bracketed_name() {
        expect(Tok::LBracket, "'['");
        if (peek().kind == Tok::RBracket)
            throw ParseError(peek().offset, "']'", "a nonempty name");
        if (peek().kind == Tok::KwTrue || peek().kind == Tok::KwFalse)
            throw ParseError(peek().offset, describe(peek()),
                             "a name (keyword not allowed)");
        if (peek().kind != Tok::Ident)
            throw ParseError(peek().offset, describe(peek()), "a name");
        Name n{advance().text};
        expect(Tok::RBracket, "']'");
        return n;
    }

    Formula unary() {
        const Token& t = peek();
        if (t.kind == Tok::Bang) {
            advance();
            return Formula::Not(unary());
        }
        if (t.kind == Tok::AtSign) {
            advance();
            Name n = bracketed_name();
            return Formula::At(std::move(n), unary());
        }
        if (t.kind == Tok::Ident && (t.text == "R" || t.text == "D") &&
            peek(1).kind == Tok::LBracket) {
            const bool de_re = t.text == "R";
            advance();
            Name n = bracketed_name();
            Formula body = unary();
            return de_re ? Formula::DeRe(std::move(n), std::move(body))
                         : Formula::DeDicto(std::move(n), std::move(body));
        }
        return atom();
    }

    Formula atom() {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::KwTrue:
            advance();
            return Formula::True();
        case Tok::KwFalse:
            advance();
            return Formula::False();
        case Tok::Ident: {
            Formula f = Formula::P(t.text);
            advance();
            return f;
        }
        case Tok::LParen: {
            advance();
            Formula f = implies();
            expect(Tok::RParen, "')'");
            return f;
        }
        default:
            throw ParseError(t.offset, describe(t), "a formula");
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

} // namespace

Formula parse_formula(std::string_view text) {
    return Parser(lex(text)).parse();
}

} // namespace ego
