#include <random>

#include "doctest.h"
#include "polartree/error.hpp"
#include "polartree/session.hpp"
#include "support.hpp"

using namespace polartree;

TEST_CASE("random pairs with rational roots verify") {
    std::mt19937 rng(4242);
    for (int i = 0; i < 40; ++i) {
        auto rp = testsupport::random_pair(rng);
        auto spec = rp.spec();
        CAPTURE(spec.f);
        CAPTURE(spec.g);
        PairResult r;
        REQUIRE_NOTHROW(r = run_pipeline(spec, SessionOptions{}, Stage::Full));
        CHECK(r.verification.pass());
        CHECK(r.factors.complete);
        CHECK(r.factors.unassigned.empty());
        // K is the x-order of J at the origin after removing y^E
        CHECK(r.oracle.K == r.oracle.J.shift_y(r.oracle.E).x_order_on_axis());
        // roots of f and g are all in Q
        for (const auto& tr : r.tree.roots)
            for (const auto& t : tr.series.terms()) CHECK(t.coeff.is_rational());
    }
}

TEST_CASE("swapping f and g mirrors the analysis") {
    std::mt19937 rng(99);
    for (int i = 0; i < 10; ++i) {
        auto rp = testsupport::random_pair(rng);
        auto spec = rp.spec();
        PairSpec swapped = spec;
        std::swap(swapped.f, swapped.g);
        auto a = run_pipeline(spec, SessionOptions{}, Stage::Full);
        auto b = run_pipeline(swapped, SessionOptions{}, Stage::Full);
        CHECK(a.oracle.K == b.oracle.K);
        CHECK(a.tree.bars.size() == b.tree.bars.size());
        for (const auto& bar : a.tree.bars) {
            if (bar.infinite()) continue;
            auto other = testsupport::bars_at(b.tree, bar.h());
            CHECK(!other.empty());
        }
        for (int id : a.tree.finite_bars()) {
            const auto& x = a.analysis.at(id);
            CHECK(x.T_total >= 0);
        }
    }
}

TEST_CASE("reports are deterministic") {
    for (const char* name : {"collinear-tower", "three-pair-minus", "mero-s2"}) {
        CommandInput in;
        in.first.fixture = name;
        for (const char* cmd : {"verify", "factor", "tree"}) {
            auto a = run_command(cmd, in);
            auto b = run_command(cmd, in);
            CHECK(a.json == b.json);
            CHECK(a.text == b.text);
        }
    }
}

TEST_CASE("root lists and expressions agree") {
    CommandInput a, b;
    a.first.roots = RootLists{{"y", "-y^2"}, {"2*y"}, 1, 0};
    b.first.f = "(x - y)*(x + y^2)*y";
    b.first.g = "x - 2*y";
    auto ra = run_command("verify", a);
    auto rb = run_command("verify", b);
    CHECK(ra.exit_code == 0);
    CHECK(rb.exit_code == 0);
    auto strip = [](std::string s) { return s.substr(s.find("\"tree\"")); };
    CHECK(strip(ra.json) == strip(rb.json));
}

TEST_CASE("session exit codes") {
    CHECK(exit_code_for(ErrorCode::SyntaxError) == 2);
    CHECK(exit_code_for(ErrorCode::InputViolatesSimplicity) == 2);
    CHECK(exit_code_for(ErrorCode::FieldTooSmall) == 3);
    CHECK(exit_code_for(ErrorCode::TruncationBudgetExceeded) == 3);
    CHECK(exit_code_for(ErrorCode::InternalInconsistency) == 1);
    CommandInput in;
    in.first.f = "x^2 - y^3";
    in.first.g = "x";
    CHECK_THROWS_AS(run_command("reduce", in), Error);
    CHECK_THROWS_AS(run_command("bogus", in), Error);
}
