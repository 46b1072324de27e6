#include "polartree/fixtures.hpp"

#include "polartree/error.hpp"

namespace polartree {

namespace {

std::string ex11(int e, int E, int A, int B) {
    auto t = [](int k, int c) { return (c < 0 ? " - " : " + ") + std::string("y^") + std::to_string(k); };
    const int a = e + 1;
    const int b = E + 1;
    std::string f = "(x + y)*(x - y^" + std::to_string(a) + t(b, A) + ")*(x + y^" + std::to_string(a) + t(b, B) + ")";
    std::string g = "(x - y)*(x - y^" + std::to_string(a) + t(b, -A) + ")*(x + y^" + std::to_string(a) + t(b, -B) + ")";
    return f + "|" + g;
}

Fixture make(std::string name, std::string description, const std::string& fg, bool laurent = false, int s = -1) {
    const auto bar = fg.find('|');
    PairSpec spec{name, fg.substr(0, bar), fg.substr(bar + 1), laurent, s};
    return {std::move(name), std::move(description), std::move(spec)};
}

const std::string G91 = "(x^2*y - 2/3*x*y^3 + y^5/5)";
const std::string G91p = "(x^4*y - 2/3*x^2*y^3 + y^5/5)";
const std::string F61 = "(x^2 - y^16)*((x - y)^2 - y^18)";

}  // namespace

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> all = {
        make("three-pair", "three-pair tree with e=1, E=2, A=B=1", ex11(1, 2, 1, 1)),
        make("three-pair-minus", "three-pair tree with e=1, E=2, A=1, B=-1", ex11(1, 2, 1, -1)),
        make("three-pair-e2", "three-pair tree with e=2, E=3, A=B=1", ex11(2, 3, 1, 1)),
        make("three-pair-e2-minus", "three-pair tree with e=2, E=3, A=1, B=-1", ex11(2, 3, 1, -1)),
        make("line-conic", "f = x, g = x^2 - y^2", "x|x^2 - y^2"),
        make("collinear-E8", "collinear point with e=7, N=1, E=8", F61 + "|(x + y^9)*(x + y)"),
        make("collinear-E9", "collinear point with e=7, N=1, E=9", F61 + "|(x + y^10)*(x + y)"),
        make("cusp", "cusp with g = y", "x^3 - y^4|y"),
        make("cusp-prime", "perturbed cusp x^3 - y^4 - 3xy^5 with g = y", "x^3 - y^4 - 3*x*y^5|y"),
        make("cusp-double-prime", "perturbed cusp x^3 - y^4 - 3xy^6 with g = y", "x^3 - y^4 - 3*x*y^6|y"),
        make("g-pair", "f = x^2 - G^2, g = x - 2G with G = x^2 y - 2/3 x y^3 + y^5/5",
             "x^2 - " + G91 + "^2|x - 2*" + G91),
        make("g-pair-prime", "the same with G(x^2, y)", "x^2 - " + G91p + "^2|x - 2*" + G91p),
        make("branch-x3y4", "one function x^3 - y^4 with g = y", "x^3 - y^4|y"),
        make("branch-two-pair", "irreducible branch with characteristic exponents 3/2, 7/4, g = y",
             "(x^2 - y^3)^2 - 4*x*y^5 - y^7|y"),
        make("collinear-tower", "collinear bar carrying two non-collinear bars, one with a collinear point",
             "(x - 2*y)*(x + 2*y)*(x - 3*y)*(x - y^2 - 2*y^3)*(x - y^2)*(x + y^2 + y^3)*(x + y - y^2)|"
             "(x - y^2 + y^3)*(x - y^2 - y^4)*(x + y^2 - y^3)*(x - y - y^2)*(x - y + y^2)*(x + y)*(x + y + y^2)"),
        make("mero-s2", "meromorphic pair X^4 - Y^-2 X^2 + 1, X^2 - Y^-1 X with s = 2",
             "x^4 - y^-2*x^2 + 1|x^2 - y^-1*x", true, 2),
    };
    return all;
}

const Fixture& fixture(const std::string& name) {
    for (const auto& f : fixtures())
        if (f.name == name) return f;
    fail(ErrorCode::InvalidArgument, "unknown fixture '" + name + "'");
}

}  // namespace polartree
