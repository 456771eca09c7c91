#include "volterra/bindings.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "volterra/errors.hpp"
#include "volterra/label.hpp"

namespace volterra {

namespace {

struct Word {
    std::string text;
    int col; // 1-based start column
};

std::vector<Word> split_words(const std::string& line) {
    std::vector<Word> out;
    std::size_t p = 0;
    while (p < line.size()) {
        if (line[p] == ' ' || line[p] == '\t') {
            ++p;
            continue;
        }
        std::size_t q = p;
        while (q < line.size() && line[q] != ' ' && line[q] != '\t') ++q;
        out.push_back(Word{line.substr(p, q - p), static_cast<int>(p) + 1});
        p = q;
    }
    return out;
}

ScalarExpr parse_expr_at(const std::string& src, int line, int col) {
    try {
        return ScalarExpr::parse(src);
    } catch (const ParseError& e) {
        throw ParseError(line, col + e.col() - 1, e.message());
    }
}

} // namespace

Bindings Bindings::parse_text(std::string_view text) {
    Bindings b;
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string line(text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                        : eol - pos));
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++lineno;
        if (const std::size_t hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        const std::vector<Word> words = split_words(line);
        if (words.empty()) continue;

        if (words[0].text == "kernel") {
            if (words.size() != 4 || !words[2].text.starts_with("k=") ||
                !words[3].text.starts_with("h="))
                throw ParseError(lineno, words[0].col,
                                 "expected: kernel <index> k=<expr> h=<expr>");
            const std::string& index = words[1].text;
            if (!is_identifier(index))
                throw ParseError(lineno, words[1].col, "not an identifier: '" + index + "'");
            if (b.kernels.contains(index))
                throw ParseError(lineno, words[1].col,
                                 "duplicate kernel binding for '" + index + "'");
            ScalarExpr k = parse_expr_at(words[2].text.substr(2), lineno, words[2].col + 2);
            ScalarExpr h = parse_expr_at(words[3].text.substr(2), lineno, words[3].col + 2);
            b.kernels.emplace(index, KernelBinding{index, std::move(k), std::move(h)});
            continue;
        }
        if (words[0].text == "func") {
            if (words.size() < 3 || words[2].text.front() != '=')
                throw ParseError(lineno, words[0].col, "expected: func <name> = <expr>");
            const std::string& name = words[1].text;
            if (!is_identifier(name))
                throw ParseError(lineno, words[1].col, "not an identifier: '" + name + "'");
            if (b.functions.contains(name))
                throw ParseError(lineno, words[1].col,
                                 "duplicate function binding for '" + name + "'");
            // Everything after the '=' is the expression; spaces are fine here.
            const std::size_t eq = line.find('=', static_cast<std::size_t>(words[2].col) - 1);
            const std::string expr_src = line.substr(eq + 1);
            b.functions.emplace(name,
                                parse_expr_at(expr_src, lineno, static_cast<int>(eq) + 2));
            continue;
        }
        throw ParseError(lineno, words[0].col,
                         "expected 'kernel' or 'func', got '" + words[0].text + "'");
    }
    return b;
}

Bindings Bindings::load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open bindings file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str());
}

} // namespace volterra
