#include <random>

#include "doctest.h"
#include "polartree/bipoly.hpp"
#include "polartree/error.hpp"
#include "polartree/puiseux.hpp"
#include "polartree/unipoly.hpp"

using namespace polartree;

TEST_CASE("cyclotomic field basics") {
    auto K = CycloField::create(12);
    CHECK(K->degree() == 4);
    Cyclo z = Cyclo::zeta_power(K, 1);
    CHECK(z.pow(12).is_one());
    CHECK_FALSE(z.pow(6).is_one());
    CHECK(z.pow(6) == Cyclo::one(K) * Cyclo(-1));
    Cyclo i = Cyclo::root_of_unity(K, 4, 1);
    CHECK(i * i == Cyclo(K, Rational(-1)));
    CHECK_THROWS_AS(Cyclo::root_of_unity(CycloField::create(4), 3, 1), Error);
}

TEST_CASE("cyclotomic inverse and galois action") {
    auto K = CycloField::create(8);
    Cyclo a(K, {make_rational(1), make_rational(2, 3), make_rational(0), make_rational(-5)});
    CHECK((a * a.inverse()).is_one());
    Cyclo b = Cyclo::zeta_power(K, 3) + Cyclo(7);
    for (long k : {1L, 3L, 5L, 7L}) {
        CHECK((a * b).galois(k) == a.galois(k) * b.galois(k));
        CHECK((a + b).galois(k) == a.galois(k) + b.galois(k));
    }
    CHECK_THROWS_AS(Cyclo::zero(K).inverse(), Error);
}

TEST_CASE("lifting into a larger field keeps roots of unity") {
    auto K4 = CycloField::create(4);
    auto K12 = CycloField::create(12);
    Cyclo i4 = Cyclo::zeta_power(K4, 1);
    Cyclo i12 = i4.lifted(K12);
    CHECK(i12 * i12 == Cyclo(K12, Rational(-1)));
    CHECK(i12 == Cyclo::root_of_unity(K12, 4, 1));
}

TEST_CASE("cyclotomic field axioms on random elements") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int n : {3, 5, 7, 9, 12, 15}) {
        auto K = CycloField::create(n);
        auto rnd = [&] {
            std::vector<Rational> c;
            for (int k = 0; k < K->degree(); ++k) c.push_back(make_rational(d(rng), 1 + std::abs(d(rng))));
            return Cyclo(K, c);
        };
        for (int t = 0; t < 20; ++t) {
            Cyclo a = rnd(), b = rnd(), c = rnd();
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a * b) * c == a * (b * c));
            if (!b.is_zero()) CHECK((a / b) * b == a);
        }
    }
}

TEST_CASE("univariate polynomial division and gcd") {
    UniPoly z = UniPoly::monomial(Cyclo(1), 1);
    UniPoly one = UniPoly::constant(Cyclo(1));
    UniPoly a = (z - one) * (z - one) * (z + one);
    UniPoly b = (z - one) * (z + one * Cyclo(2));
    auto [qq, r] = UniPoly::divmod(a, b);
    CHECK(qq * b + r == a);
    CHECK(r.degree() < b.degree());
    CHECK(gcd(a, b) == z - one);
    CHECK_THROWS_AS(UniPoly::divmod(a, UniPoly()), Error);
}

TEST_CASE("squarefree decomposition and roots in the field") {
    auto K = CycloField::create(4);
    UniPoly z = UniPoly::monomial(Cyclo::one(K), 1);
    UniPoly one = UniPoly::constant(Cyclo::one(K));
    UniPoly p = (z * z + one) * (z * z + one) * (z - one * Cyclo(3));
    auto sf = squarefree_decompose(p);
    int total = 0;
    for (const auto& [f, m] : sf) total += f.degree() * m;
    CHECK(total == 5);
    auto roots = roots_in_field(p, K);
    CHECK(roots.unresolved_degree == 0);
    int mult = 0;
    for (const auto& [r, m] : roots.roots) {
        CHECK(p.eval(r).is_zero());
        mult += m;
    }
    CHECK(mult == 5);
    UniPoly q2 = z * z - one * Cyclo(2);
    auto rq = roots_in_field(q2, K);
    CHECK(rq.roots.empty());
    CHECK(rq.unresolved_degree == 2);
}

TEST_CASE("bivariate arithmetic and the jacobian") {
    BiPoly x = BiPoly::x(), y = BiPoly::y();
    BiPoly f = x * x - y.pow(3);
    BiPoly g = x + y * y;
    CHECK(f.dx() == x * Cyclo(2));
    CHECK(f.dy() == y * y * Cyclo(-3));
    CHECK(jacobian(f, g) == f.dy() * g.dx() - f.dx() * g.dy());
    CHECK(jacobian(f, g) == -jacobian(g, f));
    CHECK(jacobian(f, f).is_zero());
    CHECK(f.x_order_on_axis() == 2);
    CHECK((y.pow(2) * f).y_valuation() == 2);
    CHECK(f.sheared(Cyclo(1)) == x * x - (y + x).pow(3));
}

TEST_CASE("puiseux series contact orders") {
    auto a = PuiseuxSeries({{make_rational(3, 2), Cyclo(1)}, {make_rational(7, 4), Cyclo(1)}}, std::nullopt);
    auto b = PuiseuxSeries({{make_rational(3, 2), Cyclo(1)}, {make_rational(7, 4), Cyclo(-1)}}, std::nullopt);
    CHECK(*contact_order(a, b) == make_rational(7, 4));
    CHECK_FALSE(contact_order(a, a).has_value());
    CHECK(a.denominator_lcm() == 4);
    auto t = a.below(make_rational(7, 4));
    CHECK(t.trunc() == make_rational(7, 4));
    CHECK_THROWS_AS(t.coefficient(make_rational(2)), Error);
    BiPoly cusp = BiPoly::x() * BiPoly::x() - BiPoly::y().pow(3);
    CHECK_FALSE(order_along_arc(cusp, PuiseuxSeries::monomial(Cyclo(1), make_rational(3, 2))).has_value());
    CHECK(*order_along_arc(cusp, PuiseuxSeries::monomial(Cyclo(2), make_rational(3, 2))) == 3);
}
