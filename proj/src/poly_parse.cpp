#include "delpezzo/poly_parse.hpp"

#include <cctype>

namespace delpezzo {

namespace {

struct Token {
    enum Kind { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End } kind;
    std::string text;
    size_t col = 0; // 1-based position of the first character
};

std::string at_col(size_t col) { return " (column " + std::to_string(col) + ")"; }

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }
    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < s_.size() && isspace((unsigned char)s_[i_])) ++i_;
        size_t col = i_ + 1;
        if (i_ >= s_.size()) {
            tok_ = {Token::End, "", col};
            return;
        }
        char c = s_[i_];
        if (isdigit((unsigned char)c)) {
            size_t j = i_;
            while (j < s_.size() && isdigit((unsigned char)s_[j])) ++j;
            tok_ = {Token::Number, s_.substr(i_, j - i_), col};
            i_ = j;
            return;
        }
        if (isalpha((unsigned char)c) || c == '_') {
            size_t j = i_;
            while (j < s_.size() && (isalnum((unsigned char)s_[j]) || s_[j] == '_')) ++j;
            tok_ = {Token::Ident, s_.substr(i_, j - i_), col};
            i_ = j;
            return;
        }
        Token::Kind k;
        switch (c) {
            case '+': k = Token::Plus; break;
            case '-': k = Token::Minus; break;
            case '*': k = Token::Star; break;
            case '^': k = Token::Caret; break;
            case '/': k = Token::Slash; break;
            case '(': k = Token::LParen; break;
            case ')': k = Token::RParen; break;
            default:
                throw parse_error(std::string("unexpected character '") + c + "' in polynomial" +
                                  at_col(col));
        }
        tok_ = {k, std::string(1, c), col};
        ++i_;
    }

    const std::string& s_;
    size_t i_ = 0;
    Token tok_;
};

class Parser {
public:
    Parser(const std::string& text, FieldPtr field, std::vector<std::string> vars)
        : lex_(text), field_(std::move(field)), vars_(std::move(vars)) {}

    MultiPoly run() {
        MultiPoly p = expr();
        if (lex_.peek().kind != Token::End)
            throw parse_error("trailing input after polynomial" + at_col(lex_.peek().col));
        return p;
    }

private:
    int nvars() const { return std::max<int>(1, (int)vars_.size()); }

    MultiPoly expr() {
        bool neg = false;
        while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
            if (lex_.take().kind == Token::Minus) neg = !neg;
        }
        MultiPoly acc = term();
        if (neg) acc = -acc;
        while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
            bool minus = lex_.take().kind == Token::Minus;
            MultiPoly t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        while (lex_.peek().kind == Token::Star) {
            lex_.take();
            acc = acc * factor();
        }
        return acc;
    }

    MultiPoly factor() {
        MultiPoly base = atom();
        if (lex_.peek().kind == Token::Caret) {
            lex_.take();
            if (lex_.peek().kind != Token::Number)
                throw parse_error("exponent must be a number" + at_col(lex_.peek().col));
            long e = std::stol(lex_.take().text);
            base = base.pow((unsigned)e);
        }
        return base;
    }

    MultiPoly atom() {
        Token t = lex_.take();
        switch (t.kind) {
            case Token::Number: {
                Integer num(t.text);
                if (lex_.peek().kind == Token::Slash) {
                    lex_.take();
                    if (lex_.peek().kind != Token::Number)
                        throw parse_error("denominator must be a number" + at_col(lex_.peek().col));
                    Integer den(lex_.take().text);
                    return MultiPoly::constant(field_, nvars(), Rational(num, den));
                }
                return MultiPoly::constant(field_, nvars(), Rational(num));
            }
            case Token::Ident: {
                for (size_t i = 0; i < vars_.size(); ++i)
                    if (vars_[i] == t.text) return MultiPoly::variable(field_, nvars(), (int)i);
                if (t.text == field_->generator_name())
                    return MultiPoly::constant(field_, nvars(), field_->generator());
                throw parse_error("unknown symbol '" + t.text + "'" + at_col(t.col));
            }
            case Token::Minus:
                return -atom();
            case Token::LParen: {
                MultiPoly inner = expr();
                if (lex_.peek().kind != Token::RParen)
                    throw parse_error("missing ')'" + at_col(lex_.peek().col));
                lex_.take();
                return inner;
            }
            default:
                throw parse_error("unexpected token '" + t.text + "'" + at_col(t.col));
        }
    }

    Lexer lex_;
    FieldPtr field_;
    std::vector<std::string> vars_;
};

} // namespace

MultiPoly parse_polynomial(const std::string& text, const FieldPtr& field,
                           const std::vector<std::string>& variables) {
    return Parser(text, field, variables).run();
}

HomogeneousForm parse_form(const std::string& text, const FieldPtr& field,
                           const std::vector<std::string>& variables) {
    MultiPoly p = parse_polynomial(text, field, variables);
    return HomogeneousForm(std::move(p), variables);
}

FieldElement parse_field_element(const std::string& text, const FieldPtr& field) {
    MultiPoly p = parse_polynomial(text, field, {});
    if (p.is_zero()) return field->zero();
    if (p.total_degree() != 0) throw parse_error("expected a constant expression");
    return p.coeff(std::vector<int>(p.nvars(), 0));
}

std::vector<FieldElement> parse_point(const std::string& text, const FieldPtr& field, int arity) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ',' || c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if ((int)parts.size() != arity)
        throw parse_error("expected " + std::to_string(arity) + " coordinates");
    std::vector<FieldElement> out;
    for (const auto& p : parts) out.push_back(parse_field_element(p, field));
    return out;
}

} // namespace delpezzo
