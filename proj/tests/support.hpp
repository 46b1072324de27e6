#ifndef POLARTREE_TESTS_SUPPORT_HPP
#define POLARTREE_TESTS_SUPPORT_HPP

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "polartree/bipoly.hpp"
#include "polartree/fixtures.hpp"
#include "polartree/pipeline.hpp"

namespace testsupport {

using polartree::BiPoly;
using polartree::Rational;

// Orders in y of the roots x(y) of F with positive order, read off the lower
// Newton polygon; roots x = 0 are reported with order -1.
inline std::map<Rational, int> newton_orders(const BiPoly& F) {
    std::map<int, int> low;  // x-exponent -> least y-exponent
    for (const auto& [k, c] : F.terms()) {
        auto it = low.find(k.first);
        if (it == low.end() || k.second < it->second) low[k.first] = k.second;
    }
    std::map<Rational, int> out;
    if (low.empty()) return out;
    int minj = low.begin()->second;
    for (const auto& [i, j] : low) minj = std::min(minj, j);
    if (low.begin()->first > 0) out[Rational(-1)] += low.begin()->first;
    // walk the hull from the leftmost point until the polygon reaches the least y-exponent
    int i = low.begin()->first;
    int j = low.begin()->second;
    while (j > minj) {
        int best_i = -1;
        Rational best;
        for (const auto& [i2, j2] : low) {
            if (i2 <= i || j2 >= j) continue;
            Rational slope(j - j2, i2 - i);
            slope.canonicalize();
            if (best_i < 0 || slope > best || (slope == best && i2 > best_i)) {
                best = slope;
                best_i = i2;
            }
        }
        out[best] += best_i - i;
        j = low[best_i];
        i = best_i;
    }
    return out;
}

inline polartree::PairResult run(const std::string& fixture_name,
                                 polartree::Stage stage = polartree::Stage::Full) {
    return polartree::run_pipeline(polartree::fixture(fixture_name).spec, polartree::SessionOptions{}, stage);
}

// Finite bars with the given height.
inline std::vector<int> bars_at(const polartree::Tree& t, const Rational& h) {
    std::vector<int> out;
    for (const auto& b : t.bars)
        if (!b.infinite() && b.h() == h) out.push_back(b.id);
    return out;
}

inline std::string poly_root(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> coef(-2, 2);
    std::string s;
    for (int k = 1; k <= max_deg; ++k) {
        int c = coef(rng);
        if (c == 0) continue;
        if (!s.empty()) s += c > 0 ? " + " : " - ";
        else if (c < 0) s += "-";
        s += std::to_string(std::abs(c)) + "*y^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
}

// f = y^E1 prod (x - a_i), g = y^E2 prod (x - b_j) with distinct polynomial roots.
struct RandomPair {
    std::vector<std::string> f_roots, g_roots;
    int E1 = 0, E2 = 0;
    polartree::PairSpec spec() const {
        auto product = [](const std::vector<std::string>& roots, int e) {
            std::string s;
            for (const auto& r : roots) s += (s.empty() ? "" : "*") + std::string("(x - (") + r + "))";
            if (e > 0) s += (s.empty() ? "" : "*") + std::string("y^") + std::to_string(e);
            return s.empty() ? std::string("1") : s;
        };
        polartree::PairSpec p;
        p.name = "random";
        p.f = product(f_roots, E1);
        p.g = product(g_roots, E2);
        return p;
    }
};

inline RandomPair random_pair(std::mt19937& rng) {
    std::uniform_int_distribution<int> count(1, 4);
    std::uniform_int_distribution<int> coin(0, 3);
    RandomPair rp;
    std::set<std::string> used;
    auto fill = [&](std::vector<std::string>& out, int n) {
        while (static_cast<int>(out.size()) < n) {
            std::string r = poly_root(rng, 3);
            if (used.insert(r).second) out.push_back(r);
        }
    };
    fill(rp.f_roots, count(rng));
    fill(rp.g_roots, count(rng));
    rp.E1 = coin(rng) == 0 ? 1 : 0;
    rp.E2 = rp.E1 == 0 && coin(rng) == 0 ? 1 : 0;
    return rp;
}

}  // namespace testsupport

#endif
