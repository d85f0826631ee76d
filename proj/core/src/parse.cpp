#include "gkm/parse.hpp"

#include "gkm/errors.hpp"

#include <cctype>
#include <map>

namespace gkm {

bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

namespace {

enum class Tok { Integer, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            step();
        current_ = {Tok::End, "", line_, column_};
        if (pos_ >= text_.size()) return;
        char c = text_[pos_];
        current_.line = line_;
        current_.column = column_;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            current_.kind = Tok::Integer;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                current_.text += text_[pos_];
                step();
            }
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            current_.kind = Tok::Ident;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                current_.text += text_[pos_];
                step();
            }
            return;
        }
        switch (c) {
            case '+': current_.kind = Tok::Plus; break;
            case '-': current_.kind = Tok::Minus; break;
            case '*': current_.kind = Tok::Star; break;
            case '^': current_.kind = Tok::Caret; break;
            case '/': current_.kind = Tok::Slash; break;
            case '(': current_.kind = Tok::LParen; break;
            case ')': current_.kind = Tok::RParen; break;
            default:
                throw ParseError(line_, column_,
                                 std::string("unexpected character '") + c + "' in polynomial");
        }
        current_.text = c;
        step();
    }

    void step() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
    Token current_{Tok::End, "", 1, 1};
};

class Parser {
public:
    Parser(std::string_view text, std::span<const std::string> vars)
        : lexer_(text), rank_(static_cast<int>(vars.size())) {
        for (std::size_t i = 0; i < vars.size(); ++i)
            index_.emplace(vars[i], static_cast<int>(i));
    }

    Polynomial parse() {
        Polynomial p = expression();
        const Token& t = lexer_.peek();
        if (t.kind != Tok::End)
            throw ParseError(t.line, t.column, "unexpected '" + t.text + "' after expression");
        return p;
    }

private:
    Polynomial expression() {
        bool negate = false;
        if (lexer_.peek().kind == Tok::Plus || lexer_.peek().kind == Tok::Minus)
            negate = lexer_.take().kind == Tok::Minus;
        Polynomial p = term();
        if (negate) p = -p;
        while (lexer_.peek().kind == Tok::Plus || lexer_.peek().kind == Tok::Minus) {
            bool minus = lexer_.take().kind == Tok::Minus;
            Polynomial q = term();
            if (minus)
                p -= q;
            else
                p += q;
        }
        return p;
    }

    Polynomial term() {
        Polynomial p = factor();
        while (lexer_.peek().kind == Tok::Star) {
            lexer_.take();
            p *= factor();
        }
        return p;
    }

    Polynomial factor() {
        Polynomial p = primary();
        if (lexer_.peek().kind == Tok::Caret) {
            Token caret = lexer_.take();
            Token e = lexer_.take();
            if (e.kind != Tok::Integer)
                throw ParseError(e.line, e.column, "exponent must be a nonnegative integer literal");
            if (e.text.size() > 6)
                throw ParseError(e.line, e.column, "exponent too large");
            p = p.pow(static_cast<unsigned>(std::stoul(e.text)));
            (void)caret;
        }
        return p;
    }

    Polynomial primary() {
        Token t = lexer_.take();
        switch (t.kind) {
            case Tok::Integer: {
                std::string literal = t.text;
                if (lexer_.peek().kind == Tok::Slash) {
                    lexer_.take();
                    Token d = lexer_.take();
                    if (d.kind != Tok::Integer)
                        throw ParseError(d.line, d.column, "expected integer denominator");
                    if (d.text.find_first_not_of('0') == std::string::npos)
                        throw ParseError(d.line, d.column, "zero denominator");
                    literal += "/" + d.text;
                }
                return Polynomial::constant(rank_, Rational::from_string(literal));
            }
            case Tok::Ident: {
                auto it = index_.find(t.text);
                if (it == index_.end())
                    throw ParseError(t.line, t.column, "unknown variable '" + t.text + "'");
                return Polynomial::variable(rank_, it->second);
            }
            case Tok::LParen: {
                Polynomial p = expression();
                Token close = lexer_.take();
                if (close.kind != Tok::RParen)
                    throw ParseError(close.line, close.column, "expected ')'");
                return p;
            }
            default:
                throw ParseError(t.line, t.column,
                                 t.kind == Tok::End ? "unexpected end of expression"
                                                    : "unexpected '" + t.text + "'");
        }
    }

    Lexer lexer_;
    int rank_;
    std::map<std::string, int, std::less<>> index_;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, std::span<const std::string> vars) {
    return Parser(text, vars).parse();
}

} // namespace gkm
