#include "volterra/parse.hpp"

#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "volterra/errors.hpp"

namespace volterra {

namespace {

enum class Tok { Ident, Int, Plus, Minus, Star, LParen, RParen, LBracket, RBracket, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

bool ascii_letter(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool ascii_digit(char c) {
    return c >= '0' && c <= '9';
}

bool ascii_word_char(char c) {
    return ascii_letter(c) || ascii_digit(c) || c == '_';
}

std::string printable(char c) {
    if (c >= 0x20 && c < 0x7f) return std::string(1, c);
    char buf[8];
    std::snprintf(buf, sizeof buf, "\\x%02x", static_cast<unsigned char>(c));
    return buf;
}

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t p = 0;
    while (p < src.size()) {
        const char c = src[p];
        if (c == '\n') {
            ++line;
            col = 1;
            ++p;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++col;
            ++p;
            continue;
        }
        const int tl = line, tc = col;
        if (ascii_letter(c)) {
            std::size_t q = p;
            while (q < src.size() && ascii_word_char(src[q])) ++q;
            out.push_back(Token{Tok::Ident, std::string(src.substr(p, q - p)), tl, tc});
            col += static_cast<int>(q - p);
            p = q;
            continue;
        }
        if (ascii_digit(c)) {
            std::size_t q = p;
            while (q < src.size() && ascii_digit(src[q])) ++q;
            out.push_back(Token{Tok::Int, std::string(src.substr(p, q - p)), tl, tc});
            col += static_cast<int>(q - p);
            p = q;
            continue;
        }
        Tok kind;
        switch (c) {
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*': kind = Tok::Star; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case '[': kind = Tok::LBracket; break;
        case ']': kind = Tok::RBracket; break;
        default:
            throw ParseError(line, col, "unexpected character '" + printable(c) + "'");
        }
        out.push_back(Token{kind, std::string(1, c), tl, tc});
        ++col;
        ++p;
    }
    out.push_back(Token{Tok::End, "", line, col});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Forest run() {
        Forest f = parse_forest();
        if (peek().kind != Tok::End) fail(peek(), "unexpected trailing input");
        return f;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        const std::size_t i = pos_ + ahead;
        return toks_[i < toks_.size() ? i : toks_.size() - 1];
    }

    const Token& advance() {
        const Token& t = peek();
        if (t.kind != Tok::End) ++pos_;
        return t;
    }

    [[noreturn]] static void fail(const Token& t, const std::string& msg) {
        throw ParseError(t.line, t.col, msg);
    }

    void expect(Tok kind, const char* what) {
        if (peek().kind != kind) fail(peek(), std::string("expected ") + what);
        advance();
    }

    int int_value(const Token& t) const {
        long long v = 0;
        for (char c : t.text) {
            v = v * 10 + (c - '0');
            if (v > std::numeric_limits<int>::max()) fail(t, "integer coefficient out of range");
        }
        return static_cast<int>(v);
    }

    Forest parse_forest() {
        Forest f;
        parse_term(f, +1);
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const int sign = peek().kind == Tok::Plus ? +1 : -1;
            advance();
            parse_term(f, sign);
        }
        return f;
    }

    // term := [integer '*'] factor ('*' factor)*
    // The integer may carry a leading '-'; bare '-' before a factor is not a
    // term, the forest-level separators handle signs.
    void parse_term(Forest& f, int sign) {
        long long coeff = 1;
        if (peek().kind == Tok::Int && peek(1).kind == Tok::Star) {
            coeff = int_value(peek());
            advance();
            advance();
        } else if (peek().kind == Tok::Minus && peek(1).kind == Tok::Int &&
                   peek(2).kind == Tok::Star) {
            coeff = -static_cast<long long>(int_value(peek(1)));
            advance();
            advance();
            advance();
        }
        Label root;
        std::vector<Edge> children;
        parse_factor(root, children);
        while (peek().kind == Tok::Star) {
            advance();
            parse_factor(root, children);
        }
        f.add_tree(Tree{std::move(root), std::move(children)}, static_cast<int>(sign * coeff));
    }

    void parse_factor(Label& root, std::vector<Edge>& children) {
        const Token& t = peek();
        if (t.kind == Tok::Int) {
            if (t.text == "1") {
                advance();
                return; // the unit factor
            }
            fail(t, "integers may only appear as a leading coefficient or the unit factor '1'");
        }
        if (t.kind != Tok::Ident) fail(t, "expected a factor");
        if ((t.text == "P" || t.text == "tau" || t.text == "tauinv") &&
            peek(1).kind == Tok::LBracket) {
            const Token op = t;
            advance();
            advance();
            if (peek().kind != Tok::Ident) fail(peek(), "expected a kernel index");
            std::string index = advance().text;
            expect(Tok::RBracket, "']'");
            if (op.text == "tau") {
                root = root * Label::twist(std::move(index));
                return;
            }
            if (op.text == "tauinv") {
                root = root * Label::twist_inv(std::move(index));
                return;
            }
            expect(Tok::LParen, "'('");
            const Token& arg = peek();
            Forest sub = parse_forest();
            expect(Tok::RParen, "')'");
            if (sub.size() != 1 || sub.terms().begin()->second != 1)
                throw ParseError(arg.line, arg.col,
                                 "operator argument must denote a single tree "
                                 "(no sums or coefficients below an edge)");
            children.push_back(Edge{std::move(index), sub.terms().begin()->first});
            return;
        }
        root = root * Label::func(t.text);
        advance();
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

} // namespace

Forest parse(std::string_view src) {
    return Parser(lex(src)).run();
}

} // namespace volterra
