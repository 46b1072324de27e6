#include "doctest.h"
#include "polartree/error.hpp"
#include "polartree/npsolve.hpp"
#include "polartree/parser.hpp"
#include "support.hpp"

using namespace polartree;

TEST_CASE("newton polygon slopes match the independent hull walk") {
    for (const char* text : {"x^3 - y^4", "(x^2 - y^3)^2 - 4*x*y^5 - y^7", "x*(x - y^2)*(x^2 - y^5)", "x^4*y + x*y^3 + y^9"}) {
        BiPoly F = parse_expression(text);
        auto np = newton_polygon(F);
        auto orders = testsupport::newton_orders(F);
        int total = 0;
        for (const auto& [e, n] : orders)
            if (e > 0) total += n;
        std::map<Rational, int> from_np;
        for (size_t k = 0; k < np.slopes.size(); ++k) {
            const int len = std::abs(np.vertices[k + 1].first - np.vertices[k].first);
            from_np[np.slopes[k]] += len;
        }
        for (const auto& [e, n] : orders)
            if (e > 0) CHECK(from_np[e] == n);
        CHECK(total > 0);
    }
}

TEST_CASE("cusp roots live in Q(zeta_12)") {
    BiPoly F = parse_expression("x^3 - y^4");
    ExpandOptions opt;
    opt.field = CycloField::create(12);
    auto ex = expand_roots(F, make_rational(4), opt);
    CHECK(ex.resolved_count() == 3);
    CHECK(ex.partial.empty());
    for (const auto& r : ex.roots) {
        CHECK(*r.series.order() == make_rational(4, 3));
        CHECK_FALSE(order_along_arc(F, r.series.with_trunc(std::nullopt)).has_value());
    }
}

TEST_CASE("roots outside the field are partial or rejected") {
    BiPoly F = parse_expression("x^2 - 2*y^2");
    ExpandOptions opt;
    opt.field = CycloField::create(4);
    CHECK_THROWS_AS(expand_roots(F, make_rational(3), opt), Error);
    opt.allow_unresolved = true;
    auto ex = expand_roots(F, make_rational(3), opt);
    CHECK(ex.unresolved_count() == 2);
    REQUIRE(ex.partial.size() == 1);
    CHECK(ex.partial[0].exponent == 1);
    CHECK(ex.partial[0].psi.degree() == 2);
}

TEST_CASE("multiple roots keep their multiplicity") {
    BiPoly F = parse_expression("(x - y^2)^2*(x - y^5)");
    ExpandOptions opt;
    opt.field = CycloField::create(4);
    auto ex = expand_roots(F, make_rational(8), opt);
    int total = 0;
    for (const auto& r : ex.roots) {
        total += r.count();
        if (r.series == PuiseuxSeries::monomial(Cyclo(1), make_rational(2)).with_trunc(r.series.trunc()))
            CHECK(r.multiplicity == 2);
    }
    CHECK(total == 3);
    auto split = multiplicity_split(F);
    int deg = 0;
    for (const auto& [p, m] : split) deg += p.x_degree() * m;
    CHECK(deg == 3);
}

TEST_CASE("bivariate gcd finds the common factor") {
    BiPoly a = parse_expression("(x - y^2)*(x + y)");
    BiPoly b = parse_expression("(x - y^2)*(x - 3*y^3)");
    BiPoly g = bivariate_gcd(a, b);
    CHECK(g.x_degree() == 1);
    CHECK(g.coeff(0, 2) / g.coeff(1, 0) == Cyclo(-1));
    CHECK(bivariate_gcd(parse_expression("x^2 - y^3"), parse_expression("x - y")).x_degree() == 0);
}
