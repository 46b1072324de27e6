#include <random>
#include <string>

#include "doctest.h"
#include "polartree/error.hpp"
#include "polartree/parser.hpp"
#include "support.hpp"

using namespace polartree;

namespace {

ErrorCode code_of(const std::string& text, const ParseOptions& opt = {}) {
    try {
        parse_expression(text, opt);
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("parser builds the expected polynomials") {
    BiPoly x = BiPoly::x(), y = BiPoly::y();
    CHECK(parse_expression("x^3 - y^4") == x.pow(3) - y.pow(4));
    CHECK(parse_expression("(x - y)^2") == x * x - x * y * Cyclo(2) + y * y);
    CHECK(parse_expression("y^5/5") == y.pow(5) * Cyclo(make_rational(1, 5)));
    CHECK(parse_expression("-2/3*x*y^3") == x * y.pow(3) * Cyclo(make_rational(-2, 3)));
    CHECK(parse_expression("2*(x+y)") == (x + y) * Cyclo(2));
    CHECK(code_of("2(x+y)") == ErrorCode::SyntaxError);
    CHECK(parse_expression("  x*\n y ") == x * y);
}

TEST_CASE("parser handles zeta and laurent input") {
    auto K = CycloField::create(4);
    BiPoly p = parse_expression("x - zeta*y", {K, false});
    CHECK(p.coeff(0, 1) == -Cyclo::zeta_power(K, 1));
    CHECK(code_of("x - zeta*y") == ErrorCode::SyntaxError);
    CHECK(code_of("x - y^-1") == ErrorCode::NegativeExponentWithoutLaurent);
    BiPoly l = parse_expression("x^2 - y^-1*x", {nullptr, true});
    CHECK(l.min_y() == -1);
}

TEST_CASE("parser rejects malformed input") {
    CHECK(code_of("x +") == ErrorCode::SyntaxError);
    CHECK(code_of("(x - y") == ErrorCode::SyntaxError);
    CHECK(code_of("x / y") == ErrorCode::SyntaxError);
    CHECK(code_of("x / 0") == ErrorCode::DivisionByZero);
    CHECK(code_of("x^y") == ErrorCode::SyntaxError);
    CHECK(code_of("z") == ErrorCode::SyntaxError);
    CHECK(code_of("") == ErrorCode::SyntaxError);
}

TEST_CASE("syntax errors carry a position") {
    try {
        parse_expression("x +\n  * y");
        FAIL("expected a syntax error");
    } catch (const Error& e) {
        const std::string msg = e.what();
        CHECK(msg.find("2") != std::string::npos);
    }
}

TEST_CASE("constants") {
    CHECK(parse_constant("3/2") == Cyclo(make_rational(3, 2)));
    CHECK(parse_constant("-7") == Cyclo(-7));
}

TEST_CASE("to_string round trips through the parser") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coef(-9, 9), expo(0, 6), den(1, 4), terms(1, 6);
    for (int t = 0; t < 200; ++t) {
        BiPoly p;
        for (int k = terms(rng); k > 0; --k) p.add_term(expo(rng), expo(rng), Cyclo(make_rational(coef(rng), den(rng))));
        BiPoly back = parse_expression(p.to_string());
        CHECK(back == p);
    }
    for (const auto& fx : fixtures()) {
        for (const std::string& text : {fx.spec.f, fx.spec.g}) {
            BiPoly p = parse_expression(text, {nullptr, fx.spec.laurent});
            CHECK(parse_expression(p.to_string(), {nullptr, fx.spec.laurent}) == p);
        }
    }
}
