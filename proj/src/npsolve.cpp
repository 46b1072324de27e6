#include "polartree/npsolve.hpp"

#include <algorithm>
#include <climits>
#include <map>

namespace polartree {

int Expansion::resolved_count() const {
    int n = 0;
    for (const auto& r : roots) n += r.count();
    return n;
}

int Expansion::unresolved_count() const {
    int n = 0;
    for (const auto& r : partial) n += r.count();
    return n;
}

namespace {

// Lower convex hull of points sorted by x, returned left to right.
std::vector<std::pair<long, long>> lower_hull(const std::vector<std::pair<long, long>>& pts) {
    std::vector<std::pair<long, long>> h;
    for (const auto& p : pts) {
        while (h.size() >= 2) {
            const auto& a = h[h.size() - 2];
            const auto& b = h.back();
            // remove b unless it lies strictly below segment a-p
            __int128 cross = static_cast<__int128>(b.first - a.first) * (p.second - a.second) -
                             static_cast<__int128>(b.second - a.second) * (p.first - a.first);
            if (cross <= 0)
                h.pop_back();
            else
                break;
        }
        h.push_back(p);
    }
    return h;
}

}  // namespace

NewtonPolygon newton_polygon(const BiPoly& F) {
    if (F.is_zero()) fail(ErrorCode::ZeroPolynomial, "Newton polygon of the zero polynomial");
    std::map<int, int> lowest;
    for (const auto& [k, c] : F.terms()) {
        auto it = lowest.find(k.first);
        if (it == lowest.end() || k.second < it->second) lowest[k.first] = k.second;
    }
    int e = F.min_y();
    int i0 = F.x_order_at_origin();
    std::vector<std::pair<long, long>> pts;
    for (const auto& [i, j] : lowest)
        if (i <= i0) pts.emplace_back(i, j);
    auto hull = lower_hull(pts);
    NewtonPolygon poly;
    for (auto it = hull.rbegin(); it != hull.rend(); ++it) {
        poly.vertices.emplace_back(static_cast<int>(it->first), static_cast<int>(it->second));
    }
    (void)e;
    for (size_t k = 0; k + 1 < poly.vertices.size(); ++k) {
        const auto& r = poly.vertices[k];
        const auto& l = poly.vertices[k + 1];
        poly.slopes.push_back(Rational(l.second - r.second, r.first - l.first));
        poly.slopes.back().canonicalize();
    }
    return poly;
}

namespace {

// Polynomial in X with coefficients sparse in t, y = t^R.
using Row = std::map<long, Cyclo>;
using TPoly = std::vector<Row>;

void trim_rows(TPoly& p) {
    while (!p.empty() && p.back().empty()) p.pop_back();
}

TPoly to_tpoly(const BiPoly& F) {
    TPoly p(static_cast<size_t>(std::max(F.x_degree(), 0)) + 1);
    for (const auto& [k, c] : F.terms()) p[static_cast<size_t>(k.first)][k.second] = c;
    trim_rows(p);
    return p;
}

TPoly rescale(const TPoly& p, long d) {
    TPoly r(p.size());
    for (size_t i = 0; i < p.size(); ++i)
        for (const auto& [j, c] : p[i]) r[i].emplace(j * d, c);
    return r;
}

long binom(long n, long k) {
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// P(X + c t^s)
TPoly shift(const TPoly& p, const Cyclo& c, long s) {
    TPoly r(p.size());
    std::vector<Cyclo> cpow(p.size() + 1, Cyclo(1));
    for (size_t k = 1; k < cpow.size(); ++k) cpow[k] = cpow[k - 1] * c;
    for (size_t i = 0; i < p.size(); ++i) {
        for (const auto& [j, a] : p[i]) {
            for (size_t ip = 0; ip <= i; ++ip) {
                long di = static_cast<long>(i - ip);
                Cyclo v = a * cpow[static_cast<size_t>(di)] * Cyclo(binom(static_cast<long>(i), di));
                long jj = j + s * di;
                auto [it, inserted] = r[ip].try_emplace(jj, v);
                if (!inserted) {
                    it->second += v;
                    if (it->second.is_zero()) r[ip].erase(it);
                }
            }
        }
    }
    trim_rows(r);
    return r;
}

struct Branch {
    TPoly P;
    int mu;
    long R;
    std::vector<SeriesTerm> prefix;
    bool lossy;
    int stage;
};

struct Solver {
    Rational target;
    const ExpandOptions& opt;
    int multiplicity;
    Expansion& out;

    void emit(const std::vector<SeriesTerm>& prefix, std::optional<Rational> trunc, int cluster) {
        out.roots.push_back({PuiseuxSeries(prefix, std::move(trunc)), multiplicity, cluster});
    }

    void run(Branch b) {
        if (++b.stage > opt.stage_cap) {
            fail(ErrorCode::TruncationBudgetExceeded,
                 "Newton polygon iteration exceeded " + std::to_string(opt.stage_cap) + " stages");
        }
        const Rational TR = target * b.R;
        const long u0 = b.P[static_cast<size_t>(b.mu)].begin()->first;
        const Rational bound = Rational(u0) + Rational(b.mu) * TR;
        for (auto& row : b.P) {
            for (auto it = row.begin(); it != row.end();) {
                if (Rational(it->first) >= bound) {
                    it = row.erase(it);
                    b.lossy = true;
                } else {
                    ++it;
                }
            }
        }
        int i_min = 0;
        while (b.P[static_cast<size_t>(i_min)].empty()) ++i_min;
        std::optional<Rational> exact_trunc;
        if (b.lossy) exact_trunc = target;
        if (i_min > 0) emit(b.prefix, exact_trunc, i_min);
        if (i_min == b.mu) return;

        std::vector<std::pair<long, long>> pts;
        for (int i = i_min; i <= b.mu; ++i) {
            const Row& row = b.P[static_cast<size_t>(i)];
            if (!row.empty()) pts.emplace_back(i, row.begin()->first);
        }
        auto hull = lower_hull(pts);
        int merged = 0;
        std::optional<Rational> merged_trunc;
        for (size_t k = 0; k + 1 < hull.size(); ++k) {
            const auto [il, jl] = hull[k];
            const auto [ir, jr] = hull[k + 1];
            Rational s(jl - jr, ir - il);
            s.canonicalize();
            Rational sy = s / b.R;
            int cnt = static_cast<int>(ir - il);
            if (sy >= target) {
                merged += cnt;
                if (!merged_trunc || sy < *merged_trunc) merged_trunc = sy;
                continue;
            }
            long d = s.get_den().get_si();
            TPoly P = d > 1 ? rescale(b.P, d) : b.P;
            long R = b.R * d;
            long si = Rational(s * d).get_num().get_si();
            long level = jr * d + ir * si;
            std::vector<Cyclo> phi(static_cast<size_t>(cnt) + 1, Cyclo(0));
            for (long i = il; i <= ir; ++i) {
                const Row& row = P[static_cast<size_t>(i)];
                auto it = row.find(level - i * si);
                if (it != row.end()) phi[static_cast<size_t>(i - il)] = it->second;
            }
            UniPoly edge(std::move(phi), 'c');
            FieldRoots fr = roots_in_field(edge, opt.field, opt.hints);
            for (const auto& [c, m] : fr.roots) {
                auto prefix = b.prefix;
                prefix.push_back({sy, c});
                run(Branch{shift(P, c, si), m, R, std::move(prefix), b.lossy, b.stage});
            }
            for (const auto& [psi, m] : fr.unresolved) {
                out.partial.push_back({PuiseuxSeries(b.prefix, sy), sy, psi, m * multiplicity});
            }
        }
        if (merged > 0) {
            std::optional<Rational> t = b.lossy ? std::optional<Rational>(target) : merged_trunc;
            emit(b.prefix, t, merged);
        }
    }
};

using XPoly = std::vector<UniPoly>;  // coefficients in y indexed by x-degree

void trim_x(XPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

XPoly to_xpoly(const BiPoly& F) {
    XPoly p(static_cast<size_t>(std::max(F.x_degree(), 0)) + 1, UniPoly({}, 'y'));
    std::vector<std::vector<Cyclo>> raw(p.size());
    for (const auto& [k, c] : F.terms()) {
        if (k.second < 0) fail(ErrorCode::InvalidArgument, "negative y-exponent in a polynomial operation");
        auto& v = raw[static_cast<size_t>(k.first)];
        if (v.size() <= static_cast<size_t>(k.second)) v.resize(static_cast<size_t>(k.second) + 1, Cyclo(0));
        v[static_cast<size_t>(k.second)] = c;
    }
    for (size_t i = 0; i < p.size(); ++i) p[i] = UniPoly(std::move(raw[i]), 'y');
    trim_x(p);
    return p;
}

BiPoly from_xpoly(const XPoly& p) {
    BiPoly r;
    for (size_t i = 0; i < p.size(); ++i) {
        const auto& cs = p[i].coeffs();
        for (size_t j = 0; j < cs.size(); ++j) r.add_term(static_cast<int>(i), static_cast<int>(j), cs[j]);
    }
    return r;
}

int xdeg(const XPoly& p) { return static_cast<int>(p.size()) - 1; }

UniPoly content(const XPoly& p) {
    UniPoly g({}, 'y');
    for (const auto& c : p) {
        g = gcd(g, c);
        if (g.degree() == 0) break;
    }
    g.set_var('y');
    return g;
}

XPoly primitive(const XPoly& p) {
    if (p.empty()) return p;
    UniPoly c = content(p);
    XPoly r;
    for (const auto& a : p) {
        UniPoly q = a / c;
        q.set_var('y');
        r.push_back(q);
    }
    // normalize the leading coefficient to be monic in y
    Cyclo lc = r.back().leading().inverse();
    for (auto& a : r) a *= lc;
    return r;
}

XPoly xderiv(const XPoly& p) {
    XPoly r;
    for (size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * Cyclo(static_cast<long>(i)));
    trim_x(r);
    return r;
}

XPoly xsub(XPoly a, const XPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), UniPoly({}, 'y'));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim_x(a);
    return a;
}

XPoly prem(XPoly a, const XPoly& b) {
    const UniPoly& lb = b.back();
    int db = xdeg(b);
    while (!a.empty() && xdeg(a) >= db) {
        UniPoly la = a.back();
        int shift = xdeg(a) - db;
        for (auto& c : a) c *= lb;
        for (int i = 0; i <= db; ++i) a[static_cast<size_t>(i + shift)] -= la * b[static_cast<size_t>(i)];
        trim_x(a);
    }
    return a;
}

// a(x, y0) and b(x, y0) coprime with both leading coefficients nonzero at y0
bool coprime_at_some_point(const XPoly& a, const XPoly& b) {
    for (const auto& [num, den] : {std::pair{3L, 7L}, std::pair{11L, 13L}, std::pair{97L, 5L}}) {
        const Cyclo y0(make_rational(num, den));
        if (a.back().eval(y0).is_zero() || b.back().eval(y0).is_zero()) continue;
        std::vector<Cyclo> va;
        std::vector<Cyclo> vb;
        for (const auto& c : a) va.push_back(c.eval(y0));
        for (const auto& c : b) vb.push_back(c.eval(y0));
        if (gcd(UniPoly(va, 'x'), UniPoly(vb, 'x')).degree() == 0) return true;
    }
    return false;
}

XPoly xgcd(XPoly a, XPoly b) {
    if (a.empty()) return b.empty() ? b : primitive(b);
    if (b.empty()) return primitive(a);
    if (xdeg(a) > 0 && xdeg(b) > 0 && coprime_at_some_point(a, b)) return XPoly{UniPoly::constant(Cyclo(1), 'y')};
    a = primitive(a);
    b = primitive(b);
    if (xdeg(a) < xdeg(b)) std::swap(a, b);
    while (!b.empty()) {
        XPoly r = prem(a, b);
        a = std::move(b);
        b = r.empty() ? r : primitive(r);
        if (!b.empty() && xdeg(b) == 0) return XPoly{UniPoly::constant(Cyclo(1), 'y')};
    }
    return primitive(a);
}

XPoly exact_div(XPoly a, const XPoly& b) {
    int db = xdeg(b);
    if (xdeg(a) < db) {
        if (a.empty()) return a;
        fail(ErrorCode::InternalInconsistency, "inexact bivariate division");
    }
    XPoly q(static_cast<size_t>(xdeg(a) - db + 1), UniPoly({}, 'y'));
    while (!a.empty() && xdeg(a) >= db) {
        auto [c, rem] = UniPoly::divmod(a.back(), b.back());
        if (!rem.is_zero()) fail(ErrorCode::InternalInconsistency, "inexact bivariate division");
        c.set_var('y');
        int shift = xdeg(a) - db;
        q[static_cast<size_t>(shift)] = c;
        for (int i = 0; i <= db; ++i) a[static_cast<size_t>(i + shift)] -= c * b[static_cast<size_t>(i)];
        trim_x(a);
    }
    if (!a.empty()) fail(ErrorCode::InternalInconsistency, "inexact bivariate division");
    return q;
}

}  // namespace

BiPoly bivariate_gcd(const BiPoly& a, const BiPoly& b) { return from_xpoly(xgcd(to_xpoly(a), to_xpoly(b))); }

std::vector<std::pair<BiPoly, int>> multiplicity_split(const BiPoly& F) {
    if (F.is_zero()) fail(ErrorCode::ZeroPolynomial, "multiplicity split of the zero polynomial");
    XPoly P = primitive(to_xpoly(F.shift_y(F.min_y())));
    std::vector<std::pair<BiPoly, int>> out;
    if (xdeg(P) <= 0) return out;
    XPoly dP = xderiv(P);
    XPoly G = xgcd(P, dP);
    XPoly B = exact_div(P, G);
    XPoly C = exact_div(dP, G);
    XPoly D = xsub(C, xderiv(B));
    int i = 1;
    while (xdeg(B) > 0) {
        XPoly g = D.empty() ? B : xgcd(B, D);
        if (xdeg(g) > 0) out.emplace_back(from_xpoly(g), i);
        XPoly nb = exact_div(B, g);
        XPoly nc = D.empty() ? D : exact_div(D, g);
        D = xsub(nc, xderiv(nb));
        B = nb;
        ++i;
    }
    return out;
}

Expansion expand_roots(const BiPoly& F, const Rational& target, const ExpandOptions& options) {
    if (F.is_zero()) fail(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
    if (!options.field) fail(ErrorCode::InvalidArgument, "root expansion needs a working field");
    Expansion out;
    out.E = F.min_y();
    out.x_order = F.x_order_at_origin();
    if (out.x_order == 0) return out;
    for (const auto& [component, mult] : multiplicity_split(F)) {
        int mu = component.x_order_on_axis();
        if (mu <= 0) continue;
        Solver solver{target, options, mult, out};
        solver.run(Branch{to_tpoly(component), mu, 1, {}, false, 0});
    }
    int total = out.resolved_count() + out.unresolved_count();
    if (total != out.x_order) {
        fail(ErrorCode::InternalInconsistency, "root count " + std::to_string(total) + " differs from x-order " +
                                                   std::to_string(out.x_order));
    }
    if (!out.partial.empty() && !options.allow_unresolved) {
        long ram = 1;
        for (const auto& p : out.partial) ram = lcm_long(ram, p.exponent.get_den().get_si() * p.psi.degree());
        throw UnresolvedBranchError(out.unresolved_count(), ram,
                                    std::to_string(out.unresolved_count()) +
                                        " branches have coefficients outside Q(zeta_" +
                                        std::to_string(options.field->conductor()) + ")");
    }
    return out;
}

}  // namespace polartree
