#include "polartree/puiseux.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace polartree {

PuiseuxSeries::PuiseuxSeries(std::vector<SeriesTerm> terms, std::optional<Rational> trunc) : trunc_(std::move(trunc)) {
    std::map<Rational, Cyclo> acc;
    for (auto& t : terms) {
        if (trunc_ && t.exp >= *trunc_) continue;
        auto [it, inserted] = acc.try_emplace(t.exp, t.coeff);
        if (!inserted) it->second += t.coeff;
    }
    for (auto& [e, c] : acc)
        if (!c.is_zero()) terms_.push_back({e, c});
}

PuiseuxSeries PuiseuxSeries::monomial(const Cyclo& c, const Rational& e) { return PuiseuxSeries({{e, c}}, std::nullopt); }

Cyclo PuiseuxSeries::coefficient(const Rational& e) const {
    if (!knows(e)) {
        fail(ErrorCode::TruncationTooShort,
             "coefficient of y^" + exponent_to_string(e) + " lies beyond the truncation " + exponent_to_string(*trunc_));
    }
    for (const auto& t : terms_) {
        if (t.exp == e) return t.coeff;
        if (t.exp > e) break;
    }
    return Cyclo(0);
}

std::optional<Rational> PuiseuxSeries::order() const {
    if (!terms_.empty()) return terms_.front().exp;
    if (trunc_) fail(ErrorCode::Indeterminate, "series vanishes up to its truncation");
    return std::nullopt;
}

PuiseuxSeries PuiseuxSeries::below(const Rational& h) const {
    std::optional<Rational> t = h;
    if (trunc_ && *trunc_ < h) t = trunc_;
    return PuiseuxSeries(terms_, t);
}

PuiseuxSeries PuiseuxSeries::exact_below(const Rational& h) const {
    std::vector<SeriesTerm> kept;
    for (const auto& t : terms_)
        if (t.exp < h) kept.push_back(t);
    return PuiseuxSeries(std::move(kept), std::nullopt);
}

PuiseuxSeries PuiseuxSeries::with_term(const Cyclo& c, const Rational& e) const {
    auto terms = terms_;
    terms.push_back({e, c});
    return PuiseuxSeries(std::move(terms), trunc_);
}

PuiseuxSeries PuiseuxSeries::with_trunc(std::optional<Rational> t) const { return PuiseuxSeries(terms_, std::move(t)); }

long PuiseuxSeries::denominator_lcm() const {
    long d = 1;
    for (const auto& t : terms_) d = lcm_long(d, t.exp.get_den().get_si());
    return d;
}

PuiseuxSeries PuiseuxSeries::operator-() const {
    PuiseuxSeries r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

namespace {

std::optional<Rational> min_trunc(const std::optional<Rational>& a, const std::optional<Rational>& b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

}  // namespace

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    auto terms = a.terms_;
    terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
    return PuiseuxSeries(std::move(terms), min_trunc(a.trunc_, b.trunc_));
}

PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + (-b); }

bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    if (a.trunc_ != b.trunc_ || a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    }
    return true;
}

std::string exponent_to_string(const Rational& e) { return rational_to_string(e); }

std::string PuiseuxSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        std::string mono = "y";
        if (t.exp != 1) {
            mono += t.exp.get_den() == 1 ? "^" + exponent_to_string(t.exp) : "^(" + exponent_to_string(t.exp) + ")";
        }
        if (t.exp == 0) mono.clear();
        if (t.coeff.is_rational()) {
            Rational r = t.coeff.rational_part();
            bool neg = r < 0;
            Rational mag = neg ? Rational(-r) : r;
            if (first)
                os << (neg ? "-" : "");
            else
                os << (neg ? " - " : " + ");
            if (mono.empty())
                os << rational_to_string(mag);
            else if (mag == 1)
                os << mono;
            else
                os << rational_to_string(mag) << "*" << mono;
        } else {
            if (!first) os << " + ";
            os << "(" << t.coeff.to_string() << ")";
            if (!mono.empty()) os << "*" << mono;
        }
        first = false;
    }
    if (trunc_) {
        if (!first) os << " + ";
        os << "O(y^" << (trunc_->get_den() == 1 ? exponent_to_string(*trunc_) : "(" + exponent_to_string(*trunc_) + ")")
           << ")";
        first = false;
    }
    if (first) return "0";
    return os.str();
}

std::optional<Rational> contact_order(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    PuiseuxSeries d = a - b;
    if (!d.terms().empty()) return d.terms().front().exp;
    if (d.trunc()) {
        fail(ErrorCode::Indeterminate,
             "arcs agree up to the truncation " + exponent_to_string(*d.trunc()) + "; contact is undetermined");
    }
    return std::nullopt;
}

Rational capped_contact(const PuiseuxSeries& a, const PuiseuxSeries& lambda, const Rational& h) {
    PuiseuxSeries d = a.below(h) - lambda.exact_below(h);
    if (!d.terms().empty()) return d.terms().front().exp;
    if (d.trunc() && *d.trunc() < h) {
        fail(ErrorCode::TruncationTooShort, "arc known only below " + exponent_to_string(*d.trunc()) +
                                                ", needed below " + exponent_to_string(h));
    }
    return h;
}

PuiseuxSeries conjugate_series(const PuiseuxSeries& a, long k, long D, const FieldPtr& field) {
    if (D <= 0) fail(ErrorCode::InvalidArgument, "ramification bound must be positive");
    std::vector<SeriesTerm> out;
    for (const auto& t : a.terms()) {
        Rational n = t.exp * D;
        if (n.get_den() != 1) {
            fail(ErrorCode::InvalidArgument, "exponent " + exponent_to_string(t.exp) + " has denominator not dividing " +
                                                 std::to_string(D));
        }
        long nn = n.get_num().get_si();
        long kn = ((k % D) * (nn % D)) % D;
        out.push_back({t.exp, t.coeff * Cyclo::root_of_unity(field, D, kn)});
    }
    return PuiseuxSeries(std::move(out), a.trunc());
}

namespace {

using ZSeries = std::map<Rational, UniPoly>;

void zadd(ZSeries& acc, const Rational& e, const UniPoly& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = acc.try_emplace(e, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) acc.erase(it);
    }
}

ZSeries zmul(const ZSeries& a, const ZSeries& b, const Rational& cap) {
    ZSeries r;
    for (const auto& [ea, pa] : a) {
        for (const auto& [eb, pb] : b) {
            Rational e = ea + eb;
            if (e >= cap) break;
            zadd(r, e, pa * pb);
        }
    }
    return r;
}

// F(S) with all exponents >= cap dropped; S must have non-negative exponents.
ZSeries evaluate(const BiPoly& F, const ZSeries& S, const Rational& cap) {
    std::map<int, ZSeries> rows;
    for (const auto& [k, c] : F.terms()) {
        Rational e(k.second);
        if (e < cap) zadd(rows[k.first], e, UniPoly::constant(c));
    }
    int d = F.x_degree();
    ZSeries acc;
    for (int i = d; i >= 0; --i) {
        if (i != d) acc = zmul(acc, S, cap);
        auto it = rows.find(i);
        if (it != rows.end())
            for (const auto& [e, p] : it->second) zadd(acc, e, p);
    }
    return acc;
}

enum class LeadMode { Plain, Generic, AlgebraicRoot };

struct Lead {
    std::optional<Rational> order;
    UniPoly coeff;
};

Lead lowest(const ZSeries& s, LeadMode mode, const UniPoly& psi) {
    for (const auto& [e, p] : s) {
        if (mode != LeadMode::AlgebraicRoot) return {e, p};
        UniPoly g = gcd(p, psi);
        if (g.degree() == 0) return {e, p};
        if (g.degree() == psi.degree()) continue;
        fail(ErrorCode::Indeterminate, "leading coefficient vanishes at some but not all conjugate roots");
    }
    return {std::nullopt, UniPoly()};
}

struct Tail {
    Rational bound;
    bool strict;
};

Rational binomial_inv_factorial_scale(int k) {
    Rational f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return Rational(1) / f;
}

// Leading order of F(S + tail) certified against the tail.
Lead certified_order(const BiPoly& F, const ZSeries& S, LeadMode mode, const UniPoly& psi,
                     const std::optional<Tail>& tail) {
    Rational max_exp = 0;
    for (const auto& [e, p] : S) {
        if (e < 0) fail(ErrorCode::InvalidArgument, "arc with negative exponent");
        max_exp = std::max(max_exp, e);
    }
    int d = std::max(F.x_degree(), 0);
    Rational reach = std::max(max_exp, tail ? tail->bound : Rational(0));
    Rational span = Rational(std::max(F.max_y(), 0)) + Rational(d) * reach;
    Rational limit = span + 1;
    Rational cap = std::min<Rational>(Rational(8), limit);
    std::vector<BiPoly> derivs;
    if (tail) {
        BiPoly cur = F;
        for (int k = 1; k <= d; ++k) {
            cur = cur.dx();
            derivs.push_back(cur * Cyclo(binomial_inv_factorial_scale(k)));
        }
    }
    for (;;) {
        ZSeries val = evaluate(F, S, cap);
        Lead lead = lowest(val, mode, psi);
        if (lead.order) {
            if (!tail) return lead;
            bool ok = true;
            for (size_t k = 0; k < derivs.size() && ok; ++k) {
                if (derivs[k].is_zero()) continue;
                Lead dl = lowest(evaluate(derivs[k], S, cap), LeadMode::Generic, psi);
                Rational dord = dl.order ? *dl.order : cap;
                Rational bound = dord + Rational(static_cast<long>(k + 1)) * tail->bound;
                ok = tail->strict ? (*lead.order <= bound) : (*lead.order < bound);
            }
            if (!ok) fail(ErrorCode::TruncationTooShort, "arc truncation too short to certify the order");
            return lead;
        }
        if (cap >= limit) {
            if (tail) fail(ErrorCode::TruncationTooShort, "arc truncation too short to certify the order");
            return {std::nullopt, UniPoly()};
        }
        cap = std::min<Rational>(Rational(cap * 2), limit);
    }
}

ZSeries to_zseries(const PuiseuxSeries& s) {
    ZSeries z;
    for (const auto& t : s.terms()) zadd(z, t.exp, UniPoly::constant(t.coeff));
    return z;
}

}  // namespace

std::optional<Rational> order_along_arc(const BiPoly& F, const PuiseuxSeries& xi) {
    std::optional<Tail> tail;
    if (xi.trunc()) tail = Tail{*xi.trunc(), false};
    return certified_order(F, to_zseries(xi), LeadMode::Plain, UniPoly(), tail).order;
}

GenericOrder generic_order(const BiPoly& F, const PuiseuxSeries& base, const Rational& h) {
    ZSeries S = to_zseries(base);
    zadd(S, h, UniPoly::monomial(Cyclo(1), 1));
    Lead lead = certified_order(F, S, LeadMode::Generic, UniPoly(), std::nullopt);
    if (!lead.order) fail(ErrorCode::InternalInconsistency, "polynomial vanishes along a generic arc");
    return {*lead.order, lead.coeff};
}

Rational order_at_algebraic(const BiPoly& F, const PuiseuxSeries& prefix, const Rational& e, const UniPoly& psi,
                            bool has_tail) {
    ZSeries S = to_zseries(prefix.exact_below(e));
    zadd(S, e, UniPoly::monomial(Cyclo(1), 1));
    std::optional<Tail> tail;
    if (has_tail) tail = Tail{e, true};
    Lead lead = certified_order(F, S, LeadMode::AlgebraicRoot, psi.monic(), tail);
    if (!lead.order) fail(ErrorCode::InternalInconsistency, "polynomial vanishes along an algebraic arc");
    return *lead.order;
}

}  // namespace polartree
