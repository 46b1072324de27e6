#include "doctest.h"
#include "polartree/error.hpp"
#include "polartree/parser.hpp"
#include "support.hpp"

using namespace polartree;
using testsupport::run;

namespace {

ErrorCode pipeline_error(const std::string& f, const std::string& g, SessionOptions opt = {}) {
    PairSpec spec;
    spec.f = f;
    spec.g = g;
    try {
        run_pipeline(spec, opt, Stage::Full);
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("every fixture verifies") {
    for (const auto& fx : fixtures()) {
        auto r = run(fx.name);
        CHECK_MESSAGE(r.verification.pass(), fx.name << " failures: " << r.verification.failures());
        CHECK_MESSAGE(r.factors.complete, fx.name);
        int total = 0;
        for (const auto& rec : r.oracle.records) total += rec.count;
        CHECK(total == r.oracle.K);
    }
}

TEST_CASE("polar root orders agree with the newton polygon of J") {
    for (const char* name : {"three-pair", "collinear-E8", "g-pair", "branch-two-pair", "collinear-tower"}) {
        auto r = run(name);
        std::map<Rational, int> want;
        for (const auto& [e, n] : testsupport::newton_orders(r.oracle.J))
            if (e > 0) want[e] += n;
        std::map<Rational, int> got;
        for (const auto& rec : r.oracle.records) {
            Rational e;
            if (rec.algebraic_at && (rec.series.terms().empty() || rec.series.terms().front().exp > *rec.algebraic_at))
                e = *rec.algebraic_at;
            else
                e = *rec.series.order();
            got[e] += rec.count;
        }
        CHECK_MESSAGE(got == want, name);
    }
}

TEST_CASE("jacobian of the G-pair") {
    auto r = run("g-pair");
    BiPoly J = jacobian(r.F, r.G);
    BiPoly want = parse_expression("-2*(2*x - (x^2*y - 2/3*x*y^3 + y^5/5))*(x - y^2)^2");
    const auto& [k, c] = *J.terms().begin();
    CHECK(J * want.coeff(k.first, k.second) == want * c);
    CHECK(r.oracle.K == 3);
}

TEST_CASE("truncation product of the cusp factor") {
    auto r = run("cusp");
    bool found = false;
    for (const auto& c : r.factors.classes) {
        if (c.P_order == 0) continue;
        found = true;
        REQUIRE(c.P_top);
        CHECK(*c.P_top == parse_expression("x^2"));
        CHECK(truncation_product(r.tree, r.oracle, c.P) == *c.P_top);
        CHECK(c.I_f_formula == 8);
        CHECK(c.I_g_formula == 2);
    }
    CHECK(found);
}

TEST_CASE("comparison levels") {
    auto a = run("collinear-E8", Stage::Analysis);
    auto b = run("collinear-E9", Stage::Analysis);
    auto s = run("line-conic", Stage::Analysis);
    CHECK(compare_pairs(a.tree, a.analysis, a.tree, a.analysis).level == EquivalenceLevel::MeroEquivalent);
    CHECK(compare_pairs(a.tree, a.analysis, b.tree, b.analysis).level != EquivalenceLevel::Inequivalent);
    auto v = compare_pairs(a.tree, a.analysis, s.tree, s.analysis);
    CHECK(v.level == EquivalenceLevel::Inequivalent);
    CHECK_FALSE(v.witness.empty());
}

TEST_CASE("meromorphic reduction") {
    BiPoly F = parse_expression("x^4 - y^-2*x^2 + 1", {nullptr, true});
    BiPoly G = parse_expression("x^2 - y^-1*x", {nullptr, true});
    CHECK(minimal_s(F, G) == 2);
    auto red = meromorphic_reduce(F, G, 2);
    CHECK(red.s == 2);
    CHECK_FALSE(red.pair.f.has_negative_y());
    CHECK_FALSE(red.pair.g.has_negative_y());
    CHECK(jacobian_correspondence(F, G, 2));
    CHECK(jacobian_correspondence(F, G, 3));
    CHECK_THROWS_AS(meromorphic_reduce(F, G, 1), Error);
}

TEST_CASE("generic coordinates") {
    BiPoly f = parse_expression("y");
    BiPoly g = parse_expression("y - x^2");
    auto gen = generic_coordinates(f, g);
    CHECK(mini_regular(gen.f));
    CHECK(mini_regular(gen.g));
    CHECK(mini_regular(jacobian(gen.f, gen.g)));
}

TEST_CASE("input violations") {
    CHECK(pipeline_error("(x - y)*(x + y)", "(x - y)*x") == ErrorCode::InputViolatesSimplicity);
    CHECK(pipeline_error("(x - y)^2", "x") == ErrorCode::InputViolatesSimplicity);
    CHECK(pipeline_error("x + ", "x") == ErrorCode::SyntaxError);
    CHECK(pipeline_error("x - y^-1", "x") == ErrorCode::NegativeExponentWithoutLaurent);
    SessionOptions small;
    small.max_field_degree = 2;
    CHECK(pipeline_error("x^5 - y^7", "y", small) == ErrorCode::FieldTooSmall);
}
