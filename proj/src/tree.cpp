#include "polartree/tree.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace polartree {

int Tree::postbar(int bar, const Cyclo& point) const {
    const auto& g = bars.at(static_cast<size_t>(bar)).growth;
    auto it = g.find(point);
    if (it == g.end()) return -1;
    return trunks[static_cast<size_t>(it->second)].top_bar;
}

std::vector<int> Tree::above(int bar) const {
    std::vector<int> out{bar};
    for (size_t k = 0; k < out.size(); ++k) {
        for (const auto& [pt, tr] : bars[static_cast<size_t>(out[k])].growth) {
            (void)pt;
            out.push_back(trunks[static_cast<size_t>(tr)].top_bar);
        }
    }
    return out;
}

std::vector<int> Tree::finite_bars() const {
    std::vector<int> out;
    for (const auto& b : bars)
        if (b.id != ground && !b.infinite()) out.push_back(b.id);
    return out;
}

Rational Tree::max_height() const {
    Rational m(0);
    for (const auto& b : bars)
        if (!b.infinite() && b.h() > m) m = b.h();
    return m;
}

int Tree::bar_of_root(int root) const {
    for (const auto& b : bars)
        if (b.infinite() && b.roots.size() == 1 && b.roots.front() == root) return b.id;
    return -1;
}

namespace {

Rational checked_contact(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    std::optional<Rational> c;
    try {
        c = contact_order(a, b);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Indeterminate) fail(ErrorCode::TruncationTooShort, e.what());
        throw;
    }
    if (!c) fail(ErrorCode::InputViolatesSimplicity, "f*g has a repeated root " + a.to_string());
    return *c;
}

}  // namespace

Tree build_tree(const std::vector<PuiseuxSeries>& alpha, const std::vector<PuiseuxSeries>& beta, int E1, int E2,
                const FieldPtr& field) {
    Tree tree;
    tree.field = field;
    tree.E1 = E1;
    tree.E2 = E2;
    tree.p = static_cast<int>(alpha.size());
    tree.q = static_cast<int>(beta.size());
    for (const auto& a : alpha) tree.roots.push_back({a, true});
    for (const auto& b : beta) tree.roots.push_back({b, false});
    for (const auto& r : tree.roots) tree.D = lcm_long(tree.D, r.series.denominator_lcm());

    Bar ground;
    ground.id = 0;
    ground.name = "B*";
    ground.height = Rational(0);
    ground.roots.resize(tree.roots.size());
    std::iota(ground.roots.begin(), ground.roots.end(), 0);
    tree.bars.push_back(std::move(ground));

    int finite_count = 0;
    int infinite_count = 0;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        const int id = queue.front();
        queue.pop_front();
        if (tree.bars[static_cast<size_t>(id)].infinite()) continue;
        const Rational h = tree.bars[static_cast<size_t>(id)].h();
        std::map<Cyclo, std::vector<int>> groups;
        for (int r : tree.bars[static_cast<size_t>(id)].roots) {
            groups[tree.roots[static_cast<size_t>(r)].series.coefficient(h)].push_back(r);
        }
        for (auto& [pt, members] : groups) {
            Trunk tr;
            tr.id = static_cast<int>(tree.trunks.size());
            tr.base_bar = id;
            tr.point = pt;
            tr.roots = members;
            for (int r : members) (tree.roots[static_cast<size_t>(r)].from_f ? tr.s : tr.t)++;

            Bar top;
            top.id = static_cast<int>(tree.bars.size());
            top.trunk = tr.id;
            top.parent = id;
            top.depth = tree.bars[static_cast<size_t>(id)].depth + 1;
            top.roots = members;
            const PuiseuxSeries& r0 = tree.roots[static_cast<size_t>(members.front())].series;
            if (members.size() == 1) {
                top.name = "L" + std::to_string(infinite_count++);
                top.lambda = r0;
            } else {
                Rational hh = checked_contact(r0, tree.roots[static_cast<size_t>(members[1])].series);
                for (size_t k = 2; k < members.size(); ++k) {
                    Rational c = checked_contact(r0, tree.roots[static_cast<size_t>(members[k])].series);
                    if (c < hh) hh = c;
                }
                if (hh <= h) fail(ErrorCode::InternalInconsistency, "bar heights must increase along a trunk");
                top.name = "B" + std::to_string(finite_count++);
                top.height = hh;
                top.lambda = r0.exact_below(hh);
            }
            tr.top_bar = top.id;
            tree.bars[static_cast<size_t>(id)].growth.emplace(pt, tr.id);
            queue.push_back(top.id);
            tree.trunks.push_back(std::move(tr));
            tree.bars.push_back(std::move(top));
        }
    }
    return tree;
}

bool Placement::climbs(int b) const {
    return std::any_of(climb.begin(), climb.end(), [b](const auto& c) { return c.first == b; });
}

Placement place_arc(const Tree& tree, const PuiseuxSeries& series, std::optional<Rational> algebraic_at) {
    Placement pl;
    pl.climb.emplace_back(Tree::ground, Cyclo(0));
    if (tree.bars.front().growth.empty()) {
        pl.kind = Placement::Kind::Leaves;
        pl.bar = Tree::ground;
        pl.height = Rational(0);
        pl.point = Cyclo(0);
        return pl;
    }
    int cur = tree.trunks[static_cast<size_t>(tree.bars.front().growth.begin()->second)].top_bar;
    for (;;) {
        const Bar& b = tree.bars[static_cast<size_t>(cur)];
        if (b.infinite()) {
            Rational c;
            if (algebraic_at) {
                c = capped_contact(series, b.lambda, *algebraic_at);
            } else {
                std::optional<Rational> oc;
                try {
                    oc = contact_order(series, b.lambda);
                } catch (const Error& e) {
                    if (e.code() == ErrorCode::Indeterminate) fail(ErrorCode::TruncationTooShort, e.what());
                    throw;
                }
                if (!oc) {
                    pl.kind = Placement::Kind::Root;
                    pl.bar = cur;
                    pl.climb.emplace_back(cur, Cyclo(0));
                    return pl;
                }
                c = *oc;
            }
            pl.kind = Placement::Kind::Bounded;
            pl.bar = cur;
            pl.height = c;
            if (!algebraic_at || c < *algebraic_at) pl.point = series.coefficient(c);
            return pl;
        }
        const Rational& h = b.h();
        const Rational cap = algebraic_at && *algebraic_at < h ? *algebraic_at : h;
        Rational c = capped_contact(series, b.lambda, cap);
        if (c < h) {
            pl.kind = Placement::Kind::Bounded;
            pl.bar = cur;
            pl.height = c;
            if (!algebraic_at || c < *algebraic_at) pl.point = series.coefficient(c);
            return pl;
        }
        if (algebraic_at && *algebraic_at == h) {
            pl.kind = Placement::Kind::Leaves;
            pl.bar = cur;
            pl.height = h;
            return pl;
        }
        Cyclo a = series.coefficient(h);
        auto it = b.growth.find(a);
        if (it == b.growth.end()) {
            pl.kind = Placement::Kind::Leaves;
            pl.bar = cur;
            pl.height = h;
            pl.point = a;
            return pl;
        }
        pl.climb.emplace_back(cur, a);
        cur = tree.trunks[static_cast<size_t>(it->second)].top_bar;
    }
}

PuiseuxSeries truncate_relative(const PuiseuxSeries& xi, const Tree& tree) {
    Placement pl = place_arc(tree, xi);
    if (pl.kind == Placement::Kind::Root) return xi;
    const Bar& b = tree.bars[static_cast<size_t>(pl.bar)];
    PuiseuxSeries base = pl.kind == Placement::Kind::Leaves ? b.lambda : xi.exact_below(pl.height);
    return base.exact_below(pl.height).with_term(*pl.point, pl.height);
}

std::vector<std::vector<int>> conjugacy_classes(const Tree& tree) {
    const size_t nb = tree.bars.size();
    std::vector<int> parent(nb);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    if (tree.D > 1) {
        if (!tree.field || !tree.field->has_root_of_unity(tree.D)) {
            fail(ErrorCode::FieldTooSmall,
                 "conjugation needs the " + std::to_string(tree.D) + "-th roots of unity in the working field");
        }
        // image of every root under theta
        const size_t nr = tree.roots.size();
        std::vector<int> sigma(nr, -1);
        for (size_t i = 0; i < nr; ++i) {
            PuiseuxSeries c = conjugate_series(tree.roots[i].series, 1, tree.D, tree.field);
            const int leaf = tree.bar_of_root(static_cast<int>(i));
            const Rational sep = tree.bars[static_cast<size_t>(tree.bars[static_cast<size_t>(leaf)].parent)].h();
            for (size_t j = 0; j < nr; ++j) {
                if (tree.roots[j].from_f != tree.roots[i].from_f) continue;
                if (capped_contact(c, tree.roots[j].series, sep) == sep &&
                    c.coefficient(sep) == tree.roots[j].series.coefficient(sep)) {
                    sigma[i] = static_cast<int>(j);
                    break;
                }
            }
            if (sigma[i] < 0) {
                fail(ErrorCode::InternalInconsistency,
                     "conjugate of " + tree.roots[i].series.to_string() + " is not a root");
            }
        }
        std::map<std::pair<std::vector<int>, int>, int> by_roots;
        for (const auto& b : tree.bars) {
            auto r = b.roots;
            std::sort(r.begin(), r.end());
            by_roots[{r, b.depth}] = b.id;
        }
        for (const auto& b : tree.bars) {
            std::vector<int> img;
            for (int r : b.roots) img.push_back(sigma[static_cast<size_t>(r)]);
            std::sort(img.begin(), img.end());
            auto it = by_roots.find({img, b.depth});
            if (it == by_roots.end()) fail(ErrorCode::InternalInconsistency, "conjugation does not preserve " + b.name);
            parent[static_cast<size_t>(find(b.id))] = find(it->second);
        }
    }
    std::map<int, std::vector<int>> groups;
    for (const auto& b : tree.bars) groups[find(b.id)].push_back(b.id);
    std::vector<std::vector<int>> out;
    for (auto& [k, v] : groups) {
        (void)k;
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace polartree
