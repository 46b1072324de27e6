#include <algorithm>

#include "doctest.h"
#include "polartree/baranalysis.hpp"
#include "polartree/error.hpp"
#include "support.hpp"

using namespace polartree;
using testsupport::bars_at;
using testsupport::run;

TEST_CASE("three-pair tree shape") {
    auto r = run("three-pair", Stage::Analysis);
    const Tree& t = r.tree;
    CHECK(t.bars[0].name == "B*");
    CHECK(bars_at(t, make_rational(1)).size() == 1);
    CHECK(bars_at(t, make_rational(2)).size() == 1);
    CHECK(bars_at(t, make_rational(3)).size() == 2);
    CHECK(t.p == 3);
    CHECK(t.q == 3);
    // every root sits on exactly one infinite bar
    int infinite = 0;
    for (const auto& b : t.bars)
        if (b.infinite()) ++infinite;
    CHECK(infinite == 6);
    for (size_t k = 0; k < t.roots.size(); ++k) CHECK(t.bars[static_cast<size_t>(t.bar_of_root(static_cast<int>(k)))].infinite());
}

TEST_CASE("bimultiplicities add up along the tree") {
    for (const auto& fx : fixtures()) {
        auto r = run(fx.name, Stage::Analysis);
        const Tree& t = r.tree;
        for (const auto& b : t.bars) {
            if (b.infinite()) continue;
            const auto& a = r.analysis.at(b.id);
            int p = 0, q = 0;
            for (const auto& pi : a.points) {
                p += pi.p;
                q += pi.q;
            }
            int fp = 0, gq = 0;
            for (int root : b.roots) (t.roots[static_cast<size_t>(root)].from_f ? fp : gq) += 1;
            CHECK_MESSAGE(p == fp, fx.name << " " << b.name);
            CHECK_MESSAGE(q == gq, fx.name << " " << b.name);
            CHECK(a.tau == p + q);
        }
    }
}

TEST_CASE("worked example on f = x, g = x^2 - y^2") {
    auto r = run("line-conic", Stage::Analysis);
    auto b = bars_at(r.tree, make_rational(1));
    REQUIRE(b.size() == 1);
    const auto& a = r.analysis.at(b[0]);
    CHECK(a.nu_f == 1);
    CHECK(a.nu_g == 2);
    CHECK(a.tau == 3);
    CHECK(a.mu == -3);
    CHECK(a.T_total == 0);
    CHECK(a.mero_string() == "2/((z + 1)*(z)*(z - 1))");
}

TEST_CASE("collinear point and its cover") {
    auto r = run("collinear-E8", Stage::Analysis);
    auto b1 = bars_at(r.tree, make_rational(1));
    auto b2 = bars_at(r.tree, make_rational(8));
    REQUIRE(b1.size() == 1);
    REQUIRE(b2.size() == 1);
    const PointInfo* z0 = r.analysis.at(b1[0]).point(Cyclo(0));
    REQUIRE(z0);
    CHECK(z0->collinear);
    CHECK(cover_of(r.tree, r.analysis, b1[0], z0->z) == b2);
    CHECK(predict_C(r.tree, r.analysis, b1[0], z0->z) == 3);
}

TEST_CASE("conjugacy classes follow the characteristic") {
    auto r = run("branch-two-pair", Stage::Analysis);
    auto top = bars_at(r.tree, make_rational(7, 4));
    REQUIRE(top.size() == 2);
    CHECK(r.analysis.class_of[static_cast<size_t>(top[0])] == r.analysis.class_of[static_cast<size_t>(top[1])]);
    auto mid = bars_at(r.tree, make_rational(3, 2));
    REQUIRE(mid.size() == 1);
    CHECK(r.analysis.class_of[static_cast<size_t>(mid[0])] != r.analysis.class_of[static_cast<size_t>(top[0])]);
    CHECK(r.analysis.class_of[0] != r.analysis.class_of[static_cast<size_t>(mid[0])]);
}

TEST_CASE("postbars satisfy m + 1 = n") {
    for (const char* name : {"three-pair", "collinear-tower", "branch-two-pair"}) {
        auto r = run(name, Stage::Analysis);
        for (const auto& b : r.tree.bars) {
            if (b.infinite()) continue;
            for (const auto& pi : r.analysis.at(b.id).points) {
                if (pi.delta == 0) continue;
                const int post = r.tree.postbar(b.id, pi.z);
                if (post < 0 || r.tree.bars[static_cast<size_t>(post)].infinite()) continue;
                CHECK(check_N(r.tree, r.analysis, b.id, pi.z) == post);
                const auto& pa = r.analysis.at(post);
                CHECK_MESSAGE(pa.m + 1 == pa.n, name << " " << b.name);
            }
        }
    }
}

TEST_CASE("no negative predicted counts") {
    for (const auto& fx : fixtures()) {
        auto r = run(fx.name, Stage::Analysis);
        for (const auto& b : r.tree.bars) {
            if (b.infinite()) continue;
            const auto& a = r.analysis.at(b.id);
            CHECK(a.T_total >= 0);
            for (const auto& [z, n] : a.T_point) CHECK(n >= 0);
        }
    }
}
