#include "polartree/parser.hpp"

#include <cctype>
#include <string>

namespace polartree {

namespace {

class Parser {
   public:
    Parser(std::string_view text, const ParseOptions& opt) : text_(text), opt_(opt) {}

    BiPoly parse() {
        skip();
        if (at_end()) error("empty expression");
        BiPoly r = expr();
        skip();
        if (!at_end()) error(std::string("unexpected '") + peek() + "'");
        return r;
    }

   private:
    std::string_view text_;
    const ParseOptions& opt_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;

    [[noreturn]] void error(const std::string& msg, ErrorCode code = ErrorCode::SyntaxError) const {
        throw SyntaxError(code, line_, col_, msg);
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    bool accept(char c) {
        skip();
        if (peek() != c) return false;
        advance();
        return true;
    }

    BiPoly lift(const Cyclo& c) const {
        BiPoly b = BiPoly::constant(c);
        b.set_laurent(opt_.laurent);
        return b;
    }

    BiPoly expr() {
        BiPoly acc = term();
        for (;;) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    BiPoly term() {
        BiPoly acc = unary();
        for (;;) {
            if (accept('*')) {
                acc *= unary();
            } else if (accept('/')) {
                int line = line_;
                int col = col_;
                BiPoly d = unary();
                if (d.is_zero()) throw SyntaxError(ErrorCode::DivisionByZero, line, col, "division by zero");
                if (d.terms().size() != 1 || d.terms().begin()->first != BiPoly::Key{0, 0}) {
                    throw SyntaxError(ErrorCode::SyntaxError, line, col, "division is by nonzero constants only");
                }
                acc *= d.terms().begin()->second.inverse();
            } else {
                return acc;
            }
        }
    }

    BiPoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    long exponent() {
        skip();
        bool paren = accept('(');
        bool neg = accept('-');
        skip();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) error("expected an integer exponent");
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            if (v > 100000) error("exponent too large");
            advance();
        }
        if (paren && !accept(')')) error("expected ')'");
        return neg ? -v : v;
    }

    BiPoly power() {
        BiPoly base = primary();
        skip();
        if (peek() != '^') return base;
        advance();
        int line = line_;
        int col = col_;
        long e = exponent();
        if (e >= 0) return base.pow(static_cast<unsigned>(e));
        if (!opt_.laurent) {
            throw SyntaxError(ErrorCode::NegativeExponentWithoutLaurent, line, col,
                              "negative exponent requires Laurent mode");
        }
        if (base.terms().size() != 1 || base.terms().begin()->first.first != 0) {
            throw SyntaxError(ErrorCode::SyntaxError, line, col, "negative exponents apply to monomials in y only");
        }
        const auto& [k, c] = *base.terms().begin();
        return BiPoly::monomial(c.inverse().pow(-e), 0, static_cast<int>(k.second * e), true);
    }

    BiPoly primary() {
        skip();
        if (at_end()) error("unexpected end of expression");
        char c = peek();
        if (c == '(') {
            advance();
            BiPoly r = expr();
            if (!accept(')')) error("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                digits += peek();
                advance();
            }
            return lift(Cyclo(Rational(mpz_class(digits))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            int line = line_;
            int col = col_;
            std::string id;
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
                id += peek();
                advance();
            }
            if (id == "x") return BiPoly::monomial(Cyclo(1), 1, 0, opt_.laurent);
            if (id == "y") return BiPoly::monomial(Cyclo(1), 0, 1, opt_.laurent);
            if (id == "zeta") {
                if (!opt_.field) throw SyntaxError(ErrorCode::SyntaxError, line, col, "zeta needs a field conductor");
                return lift(Cyclo::zeta_power(opt_.field, 1));
            }
            throw SyntaxError(ErrorCode::SyntaxError, line, col, "unknown symbol '" + id + "'");
        }
        error(std::string("unexpected '") + c + "'");
    }
};

}  // namespace

BiPoly parse_expression(std::string_view text, const ParseOptions& options) {
    return Parser(text, options).parse();
}

Cyclo parse_constant(std::string_view text, const ParseOptions& options) {
    BiPoly b = parse_expression(text, options);
    if (b.is_zero()) return Cyclo(0);
    if (b.terms().size() != 1 || b.terms().begin()->first != BiPoly::Key{0, 0}) {
        fail(ErrorCode::SyntaxError, "expected a constant, got " + std::string(text));
    }
    return b.terms().begin()->second;
}

}  // namespace polartree
