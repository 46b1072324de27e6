#include "polartree/jacoracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace polartree {

BiPoly effective_jacobian(const PairPolys& pair) {
    BiPoly J = jacobian(pair.f, pair.g);
    if (!pair.meromorphic) return J;
    const Cyclo a(static_cast<long>(-pair.f_offset));
    const Cyclo b(static_cast<long>(-pair.g_offset));
    return BiPoly::y() * J - pair.f * pair.g.dx() * a + pair.f.dx() * pair.g * b;
}

std::vector<std::pair<int, Cyclo>> PolarRecord::climbs() const {
    auto out = placement.climb;
    if (placement.kind == Placement::Kind::Leaves && placement.point) out.emplace_back(placement.bar, *placement.point);
    return out;
}

bool PolarRecord::climbs_bar(int bar) const {
    return placement.climbs(bar) || (placement.kind == Placement::Kind::Leaves && placement.bar == bar);
}

OracleResult polar_roots(const BiPoly& J, const Tree& tree, const Rational& start_trunc, int max_doublings) {
    std::vector<Cyclo> hints;
    for (const auto& r : tree.roots)
        for (const auto& t : r.series.terms()) hints.push_back(t.coeff);
    std::sort(hints.begin(), hints.end());
    hints.erase(std::unique(hints.begin(), hints.end()), hints.end());

    Rational T = start_trunc;
    for (int attempt = 0;; ++attempt) {
        ExpandOptions opt;
        opt.field = tree.field;
        opt.allow_unresolved = true;
        opt.hints = hints;
        try {
            Expansion ex = expand_roots(J, T, opt);
            OracleResult res;
            res.J = J;
            res.E = ex.E;
            res.K = ex.x_order;
            res.trunc = T;
            for (const auto& r : ex.roots) {
                PolarRecord rec;
                rec.series = r.series;
                rec.count = r.count();
                rec.multiplicity = r.multiplicity;
                rec.placement = place_arc(tree, r.series);
                if (rec.placement.kind == Placement::Kind::Root) res.coinciding += rec.count;
                res.records.push_back(std::move(rec));
            }
            for (const auto& pr : ex.partial) {
                PolarRecord rec;
                rec.series = pr.prefix;
                rec.algebraic_at = pr.exponent;
                rec.psi = pr.psi;
                rec.count = pr.count();
                rec.multiplicity = pr.multiplicity;
                rec.placement = place_arc(tree, pr.prefix, pr.exponent);
                res.records.push_back(std::move(rec));
            }
            return res;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::TruncationTooShort || attempt >= max_doublings) throw;
            T *= 2;
        }
    }
}

bool VerificationReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

int VerificationReport::failures() const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

int observed_at(const OracleResult& oracle, int bar, const Cyclo& z) {
    int n = 0;
    for (const auto& r : oracle.records) {
        for (const auto& [b, p] : r.climbs()) {
            if (b == bar && p == z) {
                n += r.count;
                break;
            }
        }
    }
    return n;
}

namespace {

int observed_total(const OracleResult& oracle, int bar) {
    int n = 0;
    for (const auto& r : oracle.records)
        if (r.climbs_bar(bar)) n += r.count;
    return n;
}

int observed_pooled(const OracleResult& oracle, int bar) {
    int n = 0;
    for (const auto& r : oracle.records)
        if (r.placement.kind == Placement::Kind::Leaves && r.placement.bar == bar && !r.placement.point) n += r.count;
    return n;
}

std::map<Cyclo, int> observed_points(const OracleResult& oracle, int bar) {
    std::map<Cyclo, int> out;
    for (const auto& r : oracle.records)
        for (const auto& [b, p] : r.climbs())
            if (b == bar) out[p] += r.count;
    return out;
}

// climbs at a collinear point or a mero-zero (unlocated points are mero-zeros;
// on a collinear bar every point is a zero)
bool at_C_or_M(const PolarRecord& r, const BarAnalysis& a) {
    if (a.collinear) return r.climbs_bar(a.bar);
    if (r.placement.kind == Placement::Kind::Leaves && r.placement.bar == a.bar && !r.placement.point) return true;
    for (const auto& [b, p] : r.climbs()) {
        if (b != a.bar) continue;
        if (const PointInfo* pi = a.point(p)) return pi->collinear;
        return std::any_of(a.pure_zeros.begin(), a.pure_zeros.end(), [&](const auto& z) { return z.first == p; });
    }
    return false;
}

struct Recorder {
    VerificationReport& rep;
    void add(std::string family, std::string subject, long predicted, long observed) {
        rep.checks.push_back(
            {std::move(family), std::move(subject), std::to_string(predicted), std::to_string(observed), predicted == observed});
    }
    void add(std::string family, std::string subject, std::string predicted, std::string observed) {
        bool ok = predicted == observed;
        rep.checks.push_back({std::move(family), std::move(subject), std::move(predicted), std::move(observed), ok});
    }
};

std::string at(const Tree& tree, int bar, const Cyclo& z) {
    return tree.bars[static_cast<size_t>(bar)].name + " at " + z.to_string();
}

Cyclo sample_point(const Bar& b, const BarAnalysis* a) {
    for (long k = 1;; ++k) {
        Cyclo z(k);
        if (b.growth.count(z)) continue;
        if (a && !a->numerator.is_zero() && a->numerator.eval(z).is_zero()) continue;
        return z;
    }
}

}  // namespace

Rational nu_along(const PairPolys& pair, bool for_f, const PuiseuxSeries& xi) {
    auto o = order_along_arc(for_f ? pair.f : pair.g, xi);
    if (!o) fail(ErrorCode::InvalidArgument, "arc is a root of the curve");
    return *o + (for_f ? pair.f_offset : pair.g_offset);
}

PuiseuxSeries arc_sample(const Tree& tree, int bar, const Cyclo& zk) {
    const Bar& b = tree.bars.at(static_cast<size_t>(bar));
    int post = tree.postbar(bar, zk);
    if (post < 0 || tree.bars[static_cast<size_t>(post)].infinite()) {
        fail(ErrorCode::NoPostbar, "no finite postbar at " + zk.to_string());
    }
    const Bar& bs = tree.bars[static_cast<size_t>(post)];
    Rational e = (b.h() + bs.h()) / 2;
    Cyclo a = bs.lambda.coefficient(e) + Cyclo(1);
    return bs.lambda.exact_below(e).with_term(a, e);
}

bool identity_check(const PairPolys& pair, const Tree& tree, const TreeAnalysis& an, int bar, const Cyclo& z) {
    const Bar& b = tree.bars.at(static_cast<size_t>(bar));
    const BarAnalysis& a = an.at(bar);
    if (pair.meromorphic) fail(ErrorCode::NotApplicable, "identity check needs holomorphic input");
    if (a.collinear || b.growth.count(z) || a.numerator.eval(z).is_zero()) {
        fail(ErrorCode::InvalidArgument, "sample point must avoid N, C and the mero-zeros");
    }
    PuiseuxSeries xi = b.lambda.with_term(z, b.h());
    auto oj = order_along_arc(jacobian(pair.f, pair.g), xi);
    if (!oj) return false;
    return *oj == nu_along(pair, true, xi) + nu_along(pair, false, xi) - b.h() - 1;
}

VerificationReport verify(const Tree& tree, const TreeAnalysis& an, const OracleResult& oracle, const PairPolys& pair) {
    VerificationReport rep;
    Recorder rec{rep};

    int total = 0;
    for (const auto& r : oracle.records) total += r.count;
    rec.add("count", "roots of J_*", oracle.K, total);
    if (!pair.meromorphic) rec.add("simplicity", "roots of J on f*g", 0, oracle.coinciding);

    for (const auto& b : tree.bars) {
        if (b.infinite()) continue;
        const BarAnalysis& a = an.at(b.id);

        // constant determinant along arcs between B and each postbar
        for (const auto& pi : a.points) {
            if (tree.bars[static_cast<size_t>(pi.postbar)].infinite()) continue;
            PuiseuxSeries xi = arc_sample(tree, b.id, pi.z);
            Rational det = nu_along(pair, true, xi) * pi.q - nu_along(pair, false, xi) * pi.p;
            rec.add("determinant", at(tree, b.id, pi.z), rational_to_string(pi.delta), rational_to_string(det));
        }
        if (b.id != Tree::ground) {
            Cyclo z = sample_point(b, nullptr);
            PuiseuxSeries xi = b.lambda.with_term(z, b.h());
            rec.add("nu_linear", at(tree, b.id, z), rational_to_string(a.nu_f) + "," + rational_to_string(a.nu_g),
                    rational_to_string(nu_along(pair, true, xi)) + "," + rational_to_string(nu_along(pair, false, xi)));
        }

        const int obs_total = observed_total(oracle, b.id);
        if (b.id != Tree::ground && b.trunk >= 0) {
            const Trunk& tr = tree.trunks[static_cast<size_t>(b.trunk)];
            if ((tr.t == 0 && a.nu_g != 0) || (tr.s == 0 && a.nu_f != 0)) {
                rec.add("trunk_total", b.name + " purely non-collinear", "true", a.purely_noncollinear ? "true" : "false");
                rec.add("trunk_total", b.name + " total", (tr.t == 0 ? tr.s : tr.t) - 1, obs_total);
            }
        }
        if (a.collinear) continue;

        if (!pair.meromorphic) {
            Cyclo z = sample_point(b, &a);
            rec.add("identity", at(tree, b.id, z), "true", identity_check(pair, tree, an, b.id, z) ? "true" : "false");
        }

        // climb counts, pointwise and total
        auto obs = observed_points(oracle, b.id);
        std::map<Cyclo, int> keys = a.T_point;
        for (const auto& [z, n] : obs) keys.try_emplace(z, 0);
        for (const auto& [z, pred] : keys) {
            auto it = obs.find(z);
            rec.add("climb", at(tree, b.id, z), pred, it == obs.end() ? 0 : it->second);
        }
        rec.add("climb", b.name + " unlocated mero-zeros", a.T_pooled, observed_pooled(oracle, b.id));
        rec.add("climb", b.name + " total", a.T_total, obs_total);

        // every climb point lies in N, C or M
        for (const auto& [z, n] : obs) {
            (void)n;
            bool in = a.point(z) || std::any_of(a.pure_zeros.begin(), a.pure_zeros.end(),
                                                [&](const auto& pz) { return pz.first == z; });
            rec.add("placement", at(tree, b.id, z), "in N+C+M", in ? "in N+C+M" : "outside");
        }

        // pure mero-zeros
        for (const auto& [z, k] : a.pure_zeros) {
            int leaving = 0;
            for (const auto& r : oracle.records)
                if (r.placement.kind == Placement::Kind::Leaves && r.placement.bar == b.id && r.placement.point &&
                    *r.placement.point == z)
                    leaving += r.count;
            rec.add("mero_zero", at(tree, b.id, z), k, observed_at(oracle, b.id, z));
            rec.add("mero_zero", at(tree, b.id, z) + " leaving", k, leaving);
        }

        // postbars
        for (const auto& pi : a.points) {
            if (pi.collinear || tree.bars[static_cast<size_t>(pi.postbar)].infinite()) continue;
            const BarAnalysis& post = an.at(pi.postbar);
            rec.add("postbar", at(tree, b.id, pi.z) + " m+1=n", post.n, post.m + 1);
            int gap = 0;
            for (const auto& r : oracle.records)
                if (r.placement.kind == Placement::Kind::Bounded && r.placement.bar == pi.postbar) gap += r.count;
            rec.add("postbar", at(tree, b.id, pi.z) + " gap", 0, gap);
        }

        // collinear points bounded by their cover
        for (const auto& pi : a.points) {
            if (!pi.collinear) continue;
            std::vector<int> cover;
            try {
                cover = cover_of(tree, an, b.id, pi.z);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::NoCover) throw;
                continue;
            }
            int observed = 0;
            for (const auto& r : oracle.records) {
                auto cl = r.climbs();
                bool here = std::any_of(cl.begin(), cl.end(), [&](const auto& c) { return c.first == b.id && c.second == pi.z; });
                if (!here) continue;
                if (std::none_of(cover.begin(), cover.end(), [&](int x) { return r.climbs_bar(x); })) observed += r.count;
            }
            rec.add("collinear", at(tree, b.id, pi.z), predict_C(tree, an, b.id, pi.z), observed);
        }

        // bars without collinear points
        Rational sum(0);
        for (const auto& pi : a.points) sum += pi.delta;
        if (sum != 0) {
            rec.add("bar_total", b.name + " m+1=n", a.n, a.m + 1);
            rec.add("bar_total", b.name + " total", a.tau - 1, obs_total);
        }

        // weeds and basics; both need nu_f, nu_g nonzero on B and every finite bar above
        const auto up = tree.above(b.id);
        if (std::any_of(up.begin(), up.end(), [&](int x) {
                return !tree.bars[static_cast<size_t>(x)].infinite() && (an.at(x).nu_f == 0 || an.at(x).nu_g == 0);
            }))
            continue;
        std::vector<int> rep_bars;
        try {
            rep_bars = repair_of(tree, an, b.id);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NoCover) throw;
        }
        int weeds_obs = 0;
        for (const auto& r : oracle.records) {
            if (!at_C_or_M(r, a)) continue;
            bool ok = true;
            for (int x : rep_bars)
                if (r.climbs_bar(x) && !at_C_or_M(r, an.at(x))) ok = false;
            if (ok) weeds_obs += r.count;
        }
        rec.add("weeds", b.name, weeds(tree, an, b.id), weeds_obs);
        rec.add("basics", b.name, a.T_total, total_via_basics(tree, an, b.id));
    }

    const BarAnalysis& g = an.at(Tree::ground);
    if (g.collinear && !g.points.empty()) {
        try {
            auto cover = cover_of(tree, an, Tree::ground, Cyclo(0));
            int observed = 0;
            for (const auto& r : oracle.records)
                if (std::none_of(cover.begin(), cover.end(), [&](int x) { return r.climbs_bar(x); })) observed += r.count;
            rec.add("ground", "ground", ground_residual(tree, an, oracle.K), observed);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NoCover) throw;
        }
    }
    return rep;
}

}  // namespace polartree
