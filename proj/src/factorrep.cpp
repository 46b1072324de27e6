#include "polartree/factorrep.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace polartree {

namespace {

enum class Group { P, Q, Ground, None };

std::pair<Group, int> group_of(const Tree& tree, const TreeAnalysis& an, const PolarRecord& r) {
    const Placement& pl = r.placement;
    if (pl.kind == Placement::Kind::Leaves && !an.at(pl.bar).collinear) {
        return {Group::P, an.class_of[static_cast<size_t>(pl.bar)]};
    }
    const std::pair<int, Cyclo>* deepest = nullptr;
    for (const auto& c : pl.climb) {
        if (tree.bars[static_cast<size_t>(c.first)].infinite()) continue;
        if (!an.at(c.first).collinear) deepest = &c;
    }
    if (!deepest) return {Group::Ground, -1};
    const PointInfo* pi = an.at(deepest->first).point(deepest->second);
    if (!pi || !pi->collinear) return {Group::None, -1};
    std::vector<int> cover;
    try {
        cover = cover_of(tree, an, deepest->first, deepest->second);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NoCover) throw;
        return {Group::None, -1};
    }
    for (int x : cover)
        if (r.climbs_bar(x)) return {Group::None, -1};
    return {Group::Q, an.class_of[static_cast<size_t>(deepest->first)]};
}

using FSeries = std::map<Rational, Cyclo>;
using XPoly = std::vector<FSeries>;

void fs_add(FSeries& a, const Rational& e, const Cyclo& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = a.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) a.erase(it);
    }
}

XPoly xp_mul(const XPoly& a, const XPoly& b) {
    if (a.empty() || b.empty()) return {};
    XPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (const auto& [ea, ca] : a[i])
            for (size_t j = 0; j < b.size(); ++j)
                for (const auto& [eb, cb] : b[j]) fs_add(r[i + j], ea + eb, ca * cb);
    return r;
}

XPoly xp_linear(const PuiseuxSeries& s) {
    XPoly r(2);
    for (const auto& t : s.terms()) fs_add(r[0], t.exp, -t.coeff);
    r[1][Rational(0)] = Cyclo(1);
    return r;
}

XPoly xp_pow(const XPoly& a, int e) {
    XPoly r{FSeries{{Rational(0), Cyclo(1)}}};
    for (int i = 0; i < e; ++i) r = xp_mul(r, a);
    return r;
}

}  // namespace

BiPoly truncation_product(const Tree& tree, const OracleResult& oracle, const std::vector<int>& records) {
    XPoly prod{FSeries{{Rational(0), Cyclo(1)}}};
    for (int idx : records) {
        const PolarRecord& r = oracle.records[static_cast<size_t>(idx)];
        const Placement& pl = r.placement;
        if (pl.kind != Placement::Kind::Leaves) {
            fail(ErrorCode::InvalidArgument, "truncation product is defined for arcs leaving the tree");
        }
        const Bar& b = tree.bars[static_cast<size_t>(pl.bar)];
        if (pl.point) {
            prod = xp_mul(prod, xp_pow(xp_linear(b.lambda.with_term(*pl.point, b.h())), r.count));
            continue;
        }
        // y^(h d) psi((x - lambda_B) / y^h), raised to the multiplicity
        const int d = r.psi.degree();
        XPoly L = xp_linear(b.lambda);
        XPoly acc;
        XPoly Lpow{FSeries{{Rational(0), Cyclo(1)}}};
        for (int i = 0; i <= d; ++i) {
            XPoly term = Lpow;
            const Rational shift = b.h() * (d - i);
            for (auto& row : term) {
                FSeries moved;
                for (const auto& [e, c] : row) fs_add(moved, e + shift, c * r.psi.coeff(i));
                row = std::move(moved);
            }
            if (acc.size() < term.size()) acc.resize(term.size());
            for (size_t k = 0; k < term.size(); ++k)
                for (const auto& [e, c] : term[k]) fs_add(acc[k], e, c);
            Lpow = xp_mul(Lpow, L);
        }
        prod = xp_mul(prod, xp_pow(acc, r.multiplicity));
    }
    BiPoly out;
    for (size_t i = 0; i < prod.size(); ++i) {
        for (const auto& [e, c] : prod[i]) {
            if (e.get_den() != 1) {
                fail(ErrorCode::InternalInconsistency, "truncation product has fractional exponent " + exponent_to_string(e));
            }
            out.add_term(static_cast<int>(i), static_cast<int>(e.get_num().get_si()), c);
        }
    }
    return out;
}

FactorReport group_factors(const Tree& tree, const TreeAnalysis& an, const OracleResult& oracle) {
    FactorReport rep;
    rep.E = oracle.E;
    std::map<int, size_t> index;
    for (size_t k = 0; k < an.classes.size(); ++k) {
        const auto& cls = an.classes[k];
        const Bar& b = tree.bars[static_cast<size_t>(cls.front())];
        if (b.infinite()) continue;
        ClassReport cr;
        cr.id = static_cast<int>(k);
        cr.bars = cls;
        cr.height = b.h();
        cr.collinear = an.at(cls.front()).collinear;
        cr.nu_f = an.at(cls.front()).nu_f;
        cr.nu_g = an.at(cls.front()).nu_g;
        for (int id : cls) cr.m_star += an.at(id).m_star;
        index[cr.id] = rep.classes.size();
        rep.classes.push_back(std::move(cr));
    }
    int total = 0;
    int grouped = 0;
    for (size_t i = 0; i < oracle.records.size(); ++i) {
        const PolarRecord& r = oracle.records[i];
        total += r.count;
        if (r.placement.kind == Placement::Kind::Root) {
            rep.coinciding.push_back(static_cast<int>(i));
            grouped += r.count;
            continue;
        }
        auto [grp, cls] = group_of(tree, an, r);
        switch (grp) {
            case Group::P: {
                ClassReport& cr = rep.classes[index.at(cls)];
                cr.P.push_back(static_cast<int>(i));
                cr.P_order += r.count;
                grouped += r.count;
                break;
            }
            case Group::Q: {
                ClassReport& cr = rep.classes[index.at(cls)];
                cr.Q.push_back(static_cast<int>(i));
                cr.Q_order += r.count;
                grouped += r.count;
                break;
            }
            case Group::Ground:
                rep.Q_ground.push_back(static_cast<int>(i));
                rep.Q_ground_order += r.count;
                grouped += r.count;
                break;
            case Group::None:
                rep.unassigned.push_back(static_cast<int>(i));
                break;
        }
    }
    for (auto& cr : rep.classes) {
        if (!cr.collinear) cr.P_top = truncation_product(tree, oracle, cr.P);
    }
    rep.complete = rep.unassigned.empty() && grouped == total;
    return rep;
}

void intersection_mults(FactorReport& report, const Tree& tree, const TreeAnalysis& an, const OracleResult& oracle,
                        const PairPolys& pair) {
    (void)an;
    for (auto& cr : report.classes) {
        if (cr.collinear) continue;
        cr.I_f_formula = cr.nu_f * cr.m_star;
        cr.I_g_formula = cr.nu_g * cr.m_star;
        cr.I_f_direct = cr.I_g_direct = cr.I_f_top = cr.I_g_top = Rational(0);
        for (int idx : cr.P) {
            const PolarRecord& r = oracle.records[static_cast<size_t>(idx)];
            const Bar& b = tree.bars[static_cast<size_t>(r.placement.bar)];
            if (r.resolved()) {
                cr.I_f_direct += nu_along(pair, true, r.series) * r.count;
                cr.I_g_direct += nu_along(pair, false, r.series) * r.count;
                PuiseuxSeries top = b.lambda.with_term(*r.placement.point, b.h());
                cr.I_f_top += nu_along(pair, true, top) * r.count;
                cr.I_g_top += nu_along(pair, false, top) * r.count;
            } else {
                const Rational e = *r.algebraic_at;
                cr.I_f_direct += (order_at_algebraic(pair.f, r.series, e, r.psi, true) + pair.f_offset) * r.count;
                cr.I_g_direct += (order_at_algebraic(pair.g, r.series, e, r.psi, true) + pair.g_offset) * r.count;
                cr.I_f_top += (order_at_algebraic(pair.f, b.lambda, b.h(), r.psi, false) + pair.f_offset) * r.count;
                cr.I_g_top += (order_at_algebraic(pair.g, b.lambda, b.h(), r.psi, false) + pair.g_offset) * r.count;
            }
        }
    }
}

void add_factor_checks(VerificationReport& rep, const Tree& tree, const FactorReport& report) {
    auto add = [&](std::string family, std::string subject, std::string pred, std::string obs) {
        bool ok = pred == obs;
        rep.checks.push_back({std::move(family), std::move(subject), std::move(pred), std::move(obs), ok});
    };
    add("partition", "partition", "complete", report.complete ? "complete" : "incomplete");
    for (const auto& cr : report.classes) {
        if (cr.collinear) continue;
        const std::string name = tree.bars[static_cast<size_t>(cr.bars.front())].name;
        add("intersection", name + " I(C_f,P)", rational_to_string(cr.I_f_formula), rational_to_string(cr.I_f_direct));
        add("intersection", name + " I(C_g,P)", rational_to_string(cr.I_g_formula), rational_to_string(cr.I_g_direct));
        add("truncation", name + " I(C_f,P^T)", rational_to_string(cr.I_f_formula), rational_to_string(cr.I_f_top));
        add("truncation", name + " I(C_g,P^T)", rational_to_string(cr.I_g_formula), rational_to_string(cr.I_g_top));
        add("truncation", name + " order bound", "<= " + std::to_string(cr.m_star),
            cr.P_order <= cr.m_star ? "<= " + std::to_string(cr.m_star) : std::to_string(cr.P_order));
    }
}

std::string level_name(EquivalenceLevel level) {
    switch (level) {
        case EquivalenceLevel::Inequivalent:
            return "inequivalent";
        case EquivalenceLevel::Equivalent:
            return "equivalent";
        case EquivalenceLevel::MeroEquivalent:
            return "mero_equivalent";
    }
    return "inequivalent";
}

std::string bar_signature(const Tree& tree, const TreeAnalysis& an, int bar, int level) {
    const Bar& b = tree.bars.at(static_cast<size_t>(bar));
    if (b.infinite()) return "inf";
    const BarAnalysis& a = an.at(bar);
    std::string s = "h" + rational_to_string(b.h());
    if (level >= 2 && !a.collinear) s += " m" + std::to_string(a.m);
    if (level >= 3 && !a.collinear) {
        s += " z";
        for (int k : a.zero_multiplicities) s += "." + std::to_string(k);
    }
    std::vector<std::string> kids;
    for (const auto& [z, tr_id] : b.growth) {
        const Trunk& tr = tree.trunks[static_cast<size_t>(tr_id)];
        std::string k = "[" + std::to_string(tr.s) + "," + std::to_string(tr.t) + "]";
        if (level >= 2 && !a.collinear) {
            const PointInfo* pi = a.point(z);
            if (pi->collinear) k += "c" + std::to_string(pi->zero_mult);
        }
        kids.push_back(k + bar_signature(tree, an, tr.top_bar, level));
    }
    std::sort(kids.begin(), kids.end());
    s += "(";
    for (size_t i = 0; i < kids.size(); ++i) s += (i ? "," : "") + kids[i];
    return s + ")";
}

EquivalenceVerdict compare_pairs(const Tree& ta, const TreeAnalysis& aa, const Tree& tb, const TreeAnalysis& ab) {
    EquivalenceVerdict v;
    for (int level = 1; level <= 3; ++level) {
        std::string sa = bar_signature(ta, aa, Tree::ground, level);
        std::string sb = bar_signature(tb, ab, Tree::ground, level);
        if (ta.E1 == tb.E1 && ta.E2 == tb.E2 && sa == sb) continue;
        std::set<std::string> other;
        for (const auto& b : tb.bars) other.insert(bar_signature(tb, ab, b.id, level));
        std::string where = ta.bars.front().name;
        int depth = -1;
        for (const auto& b : ta.bars) {
            if (b.infinite() || other.count(bar_signature(ta, aa, b.id, level))) continue;
            if (b.depth > depth) {
                depth = b.depth;
                where = b.name;
            }
        }
        v.level = level == 3 ? EquivalenceLevel::Equivalent : EquivalenceLevel::Inequivalent;
        v.witness = "condition " + std::to_string(level) + " fails at " + where;
        return v;
    }
    v.level = EquivalenceLevel::MeroEquivalent;
    return v;
}

int minimal_s(const BiPoly& F, const BiPoly& G) {
    int bound = 0;
    for (const BiPoly* P : {&F, &G}) {
        const int p = P->x_degree();
        for (const auto& [k, c] : P->terms()) {
            (void)c;
            if (k.first == p) {
                if (k.second < 0) fail(ErrorCode::SNotLargeEnough, "leading coefficient in X is not a power series");
                continue;
            }
            if (k.second < 0) bound = std::max(bound, (-k.second + (p - k.first) - 1) / (p - k.first));
        }
    }
    for (int s = bound; s <= bound + 64; ++s) {
        BiPoly f = F.x_scaled_by_y(-s).shift_y(-F.x_degree() * s);
        BiPoly g = G.x_scaled_by_y(-s).shift_y(-G.x_degree() * s);
        if (f.has_negative_y() || g.has_negative_y()) continue;
        if (f.x_order_at_origin() == F.x_degree() && g.x_order_at_origin() == G.x_degree()) return s;
    }
    fail(ErrorCode::SNotLargeEnough, "no s up to " + std::to_string(bound + 64) + " makes the pair holomorphic");
}

Reduction meromorphic_reduce(const BiPoly& F, const BiPoly& G, int s) {
    if (s < 0) s = minimal_s(F, G);
    Reduction r;
    r.s = s;
    r.p = F.x_degree();
    r.q = G.x_degree();
    BiPoly f = F.x_scaled_by_y(-s).shift_y(-r.p * s);
    BiPoly g = G.x_scaled_by_y(-s).shift_y(-r.q * s);
    if (f.has_negative_y() || g.has_negative_y() || f.x_order_at_origin() != r.p || g.x_order_at_origin() != r.q) {
        fail(ErrorCode::SNotLargeEnough, "s = " + std::to_string(s) + " is too small; minimal is " +
                                             std::to_string(minimal_s(F, G)));
    }
    f.set_laurent(false);
    g.set_laurent(false);
    r.pair.f = f;
    r.pair.g = g;
    r.pair.f_offset = -r.p * s;
    r.pair.g_offset = -r.q * s;
    r.pair.meromorphic = s != 0;
    r.pair.s = s;
    return r;
}

bool jacobian_correspondence(const BiPoly& F, const BiPoly& G, int s) {
    BiPoly Fl = F;
    BiPoly Gl = G;
    Fl.set_laurent(true);
    Gl.set_laurent(true);
    BiPoly XY = BiPoly::monomial(Cyclo(1), 1, 1, true);
    BiPoly lhs = (XY * jacobian(Fl, Gl)).x_scaled_by_y(-s);
    BiPoly rhs = XY * jacobian(Fl.x_scaled_by_y(-s), Gl.x_scaled_by_y(-s));
    return lhs == rhs;
}

PuiseuxSeries to_original(const PuiseuxSeries& xi, int s) {
    std::vector<SeriesTerm> terms;
    for (const auto& t : xi.terms()) terms.push_back({t.exp - s, t.coeff});
    std::optional<Rational> tr;
    if (xi.trunc()) tr = *xi.trunc() - s;
    return PuiseuxSeries(std::move(terms), tr);
}

bool mini_regular(const BiPoly& F) {
    if (F.is_zero()) return false;
    return F.x_order_on_axis() == F.total_order();
}

GenericResult generic_coordinates(const BiPoly& f, const BiPoly& g, std::optional<Cyclo> c) {
    std::vector<Cyclo> candidates;
    if (c) {
        candidates.push_back(*c);
    } else {
        candidates.push_back(Cyclo(0));
        for (long k = 1; candidates.size() < 20; ++k) {
            candidates.push_back(Cyclo(k));
            candidates.push_back(Cyclo(-k));
            if (k > 1) {
                candidates.push_back(Cyclo(Rational(1, k)));
                candidates.push_back(Cyclo(Rational(-1, k)));
            }
        }
    }
    for (const auto& cand : candidates) {
        BiPoly fs = f.sheared(cand);
        BiPoly gs = g.sheared(cand);
        if (!mini_regular(fs) || !mini_regular(gs)) continue;
        BiPoly J = jacobian(fs, gs);
        if (!mini_regular(J)) continue;
        return {fs, gs, cand, J.x_order_on_axis()};
    }
    fail(ErrorCode::NoGenericFound, c ? "shear by " + c->to_string() + " is not generic" : "no generic shear found");
}

}  // namespace polartree
