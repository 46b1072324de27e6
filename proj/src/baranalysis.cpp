#include "polartree/baranalysis.hpp"

#include <algorithm>
#include <set>

namespace polartree {

const PointInfo* BarAnalysis::point(const Cyclo& z) const {
    for (const auto& p : points)
        if (p.z == z) return &p;
    return nullptr;
}

std::string BarAnalysis::mero_string() const {
    if (numerator.is_zero()) return "0";
    std::string den;
    for (const auto& p : points) {
        if (p.collinear) continue;
        if (!den.empty()) den += "*";
        den += "(" + UniPoly::linear(p.z).to_string() + ")";
    }
    std::string num = numerator.degree() > 0 ? "(" + numerator.to_string() + ")" : numerator.to_string();
    if (den.empty()) return num;
    return num + "/(" + den + ")";
}

Rational compute_nu(const Tree& tree, int bar, bool for_f) {
    const Bar& b = tree.bars.at(static_cast<size_t>(bar));
    if (b.infinite()) fail(ErrorCode::InvalidArgument, "nu is defined on bars of finite height");
    Rational nu(for_f ? tree.E1 : tree.E2);
    for (const auto& r : tree.roots) {
        if (r.from_f != for_f) continue;
        nu += capped_contact(r.series, b.lambda, b.h());
    }
    return nu;
}

BarAnalysis analyze_bar(const Tree& tree, int bar) {
    const Bar& b = tree.bars.at(static_cast<size_t>(bar));
    BarAnalysis a;
    a.bar = bar;
    a.nu_f = compute_nu(tree, bar, true);
    a.nu_g = compute_nu(tree, bar, false);
    a.denominator = UniPoly::constant(Cyclo(1));
    for (const auto& [z, tr_id] : b.growth) {
        const Trunk& tr = tree.trunks[static_cast<size_t>(tr_id)];
        PointInfo pi;
        pi.z = z;
        pi.p = tr.s;
        pi.q = tr.t;
        pi.delta = a.nu_f * tr.t - a.nu_g * tr.s;
        pi.collinear = pi.delta == 0;
        pi.postbar = tr.top_bar;
        a.points.push_back(pi);
        a.tau += tr.s + tr.t;
        if (pi.collinear) {
            ++a.c;
        } else {
            ++a.n;
            a.denominator *= UniPoly::linear(z);
        }
    }
    UniPoly num;
    for (const auto& pk : a.points) {
        if (pk.collinear) continue;
        UniPoly term = UniPoly::constant(Cyclo(pk.delta));
        for (const auto& pj : a.points) {
            if (pj.collinear || &pj == &pk) continue;
            term *= UniPoly::linear(pj.z);
        }
        num += term;
    }
    a.numerator = num;
    a.collinear = a.n == 0;
    a.purely_noncollinear = a.c == 0 && a.n > 0;
    if (a.collinear) return a;

    a.m = num.degree();
    int at_collinear = 0;
    std::map<int, int> collinear_by_mult;
    for (auto& pi : a.points) {
        if (!pi.collinear) continue;
        pi.zero_mult = root_multiplicity(num, pi.z);
        at_collinear += pi.zero_mult;
        if (pi.zero_mult > 0) ++collinear_by_mult[pi.zero_mult];
    }
    a.m_star = a.m - at_collinear;
    a.mu = a.m - a.n;

    if (a.m > 0) {
        for (const auto& [factor, k] : squarefree_decompose(num)) {
            int cnt = factor.degree() - collinear_by_mult[k];
            for (int i = 0; i < cnt; ++i) a.zero_multiplicities.push_back(k);
        }
        std::sort(a.zero_multiplicities.begin(), a.zero_multiplicities.end());
        FieldRoots fr = roots_in_field(num, tree.field);
        int located = 0;
        for (const auto& [z, k] : fr.roots) {
            if (a.point(z)) continue;
            a.pure_zeros.emplace_back(z, k);
            located += k;
        }
        a.unresolved_zeros = fr.unresolved;
        a.unresolved_zero_count = a.m_star - located;
    }

    for (const auto& pi : a.points) {
        int v = pi.collinear ? pi.p + pi.q + pi.zero_mult : pi.p + pi.q - 1;
        if (v < 0) fail(ErrorCode::InternalInconsistency, "negative predicted count on " + b.name);
        if (v != 0) a.T_point[pi.z] = v;
    }
    for (const auto& [z, k] : a.pure_zeros) a.T_point[z] = k;
    a.T_pooled = a.unresolved_zero_count;
    a.T_total = a.tau + a.mu;
    if (a.T_total < 0 || a.T_pooled < 0) fail(ErrorCode::InternalInconsistency, "negative predicted total on " + b.name);
    return a;
}

TreeAnalysis analyze_tree(const Tree& tree) {
    TreeAnalysis an;
    an.bars.resize(tree.bars.size());
    for (const auto& b : tree.bars) {
        if (!b.infinite()) an.bars[static_cast<size_t>(b.id)] = analyze_bar(tree, b.id);
    }
    an.classes = conjugacy_classes(tree);
    an.class_of.assign(tree.bars.size(), -1);
    for (size_t k = 0; k < an.classes.size(); ++k)
        for (int id : an.classes[k]) an.class_of[static_cast<size_t>(id)] = static_cast<int>(k);
    return an;
}

std::vector<int> cover_of(const Tree& tree, const TreeAnalysis& an, int bar, const Cyclo& c) {
    const PointInfo* pi = an.at(bar).point(c);
    if (!pi || !pi->collinear) fail(ErrorCode::InvalidArgument, "cover is defined for collinear points");
    std::vector<int> out;
    std::vector<int> stack{pi->postbar};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        const Bar& bx = tree.bars[static_cast<size_t>(x)];
        if (bx.infinite()) {
            fail(ErrorCode::NoCover, "collinear point " + c.to_string() + " on " + tree.bars[static_cast<size_t>(bar)].name +
                                         " has no cover");
        }
        if (!an.at(x).collinear) {
            out.push_back(x);
            continue;
        }
        for (const auto& [z, tr] : bx.growth) {
            (void)z;
            stack.push_back(tree.trunks[static_cast<size_t>(tr)].top_bar);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool repairable(const Tree& tree, const TreeAnalysis& an, int x, std::set<int>& acc) {
    const Bar& bx = tree.bars[static_cast<size_t>(x)];
    if (bx.infinite()) return false;
    const BarAnalysis& a = an.at(x);
    if (a.purely_noncollinear) return true;
    bool any = false;
    for (const auto& pi : a.points) {
        if (!pi.collinear) continue;
        if (repairable(tree, an, pi.postbar, acc)) {
            acc.insert(pi.postbar);
            any = true;
        }
    }
    return any;
}

}  // namespace

std::vector<int> repair_of(const Tree& tree, const TreeAnalysis& an, int bar) {
    const BarAnalysis& a = an.at(bar);
    if (a.collinear) fail(ErrorCode::NotApplicable, "repair is defined for non-collinear bars");
    std::set<int> acc;
    if (!a.purely_noncollinear) repairable(tree, an, bar, acc);
    return {acc.begin(), acc.end()};
}

std::vector<int> basics_of(const Tree& tree, const TreeAnalysis& an, int bar) {
    if (an.at(bar).collinear) fail(ErrorCode::NotApplicable, "basics are defined for non-collinear bars");
    std::vector<int> out{bar};
    for (int x : tree.above(bar)) {
        const Bar& bx = tree.bars[static_cast<size_t>(x)];
        if (x == bar || bx.infinite() || an.at(x).collinear) continue;
        const PointInfo* pi = an.at(bx.parent).point(tree.trunks[static_cast<size_t>(bx.trunk)].point);
        if (pi && !pi->collinear) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int weeds(const Tree& tree, const TreeAnalysis& an, int bar) {
    int w = an.at(bar).m;
    for (int x : repair_of(tree, an, bar)) w += an.at(x).n;
    return w;
}

int total_via_basics(const Tree& tree, const TreeAnalysis& an, int bar) {
    int total = 0;
    for (int x : basics_of(tree, an, bar)) total += weeds(tree, an, x);
    return total;
}

int predict_C(const Tree& tree, const TreeAnalysis& an, int bar, const Cyclo& c) {
    if (an.at(bar).collinear) fail(ErrorCode::NotApplicable, "collinear counts apply to non-collinear bars");
    int count = an.at(bar).point(c)->zero_mult;
    for (int x : cover_of(tree, an, bar, c)) count += an.at(x).n - an.at(x).m;
    return count;
}

int check_N(const Tree& tree, const TreeAnalysis& an, int bar, const Cyclo& z) {
    const PointInfo* pi = an.at(bar).point(z);
    if (!pi || pi->collinear) fail(ErrorCode::InvalidArgument, "point is not non-collinear");
    if (tree.bars[static_cast<size_t>(pi->postbar)].infinite()) {
        fail(ErrorCode::NoPostbar, "no finite postbar at " + z.to_string());
    }
    const BarAnalysis& post = an.at(pi->postbar);
    if (post.m + 1 != post.n) {
        fail(ErrorCode::InternalInconsistency, "m+1 != n on " + tree.bars[static_cast<size_t>(pi->postbar)].name);
    }
    return pi->postbar;
}

int ground_residual(const Tree& tree, const TreeAnalysis& an, int K) {
    const BarAnalysis& g = an.at(Tree::ground);
    if (!g.collinear || g.points.empty()) fail(ErrorCode::NotApplicable, "ground bar is not collinear");
    int r = K;
    for (int x : cover_of(tree, an, Tree::ground, Cyclo(0))) r -= an.at(x).T_total;
    return r;
}

}  // namespace polartree
