#include "polartree/unipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace polartree {

UniPoly::UniPoly(std::vector<Cyclo> coeffs, char var) : coeffs_(std::move(coeffs)), var_(var) { trim(); }

UniPoly UniPoly::constant(const Cyclo& c, char var) { return UniPoly({c}, var); }

UniPoly UniPoly::monomial(const Cyclo& c, int degree, char var) {
    std::vector<Cyclo> v(static_cast<size_t>(degree) + 1, Cyclo(0));
    v.back() = c;
    return UniPoly(std::move(v), var);
}

UniPoly UniPoly::linear(const Cyclo& root, char var) { return UniPoly({-root, Cyclo(1)}, var); }

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Cyclo UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Cyclo(0);
    return coeffs_[static_cast<size_t>(i)];
}

const Cyclo& UniPoly::leading() const {
    if (coeffs_.empty()) fail(ErrorCode::ZeroPolynomial, "leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Cyclo UniPoly::eval(const Cyclo& z) const {
    Cyclo acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly({}, var_);
    std::vector<Cyclo> d;
    d.reserve(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * Cyclo(static_cast<long>(i)));
    return UniPoly(std::move(d), var_);
}

UniPoly UniPoly::monic() const {
    if (coeffs_.empty()) return *this;
    Cyclo inv = coeffs_.back().inverse();
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c *= inv;
    return r;
}

UniPoly UniPoly::scaled_argument(const Cyclo& c) const {
    UniPoly r = *this;
    Cyclo pw(1);
    for (auto& a : r.coeffs_) {
        a *= pw;
        pw *= c;
    }
    r.trim();
    return r;
}

UniPoly UniPoly::shifted(const Cyclo& c) const {
    // Horner in (z + c)
    UniPoly acc({}, var_);
    UniPoly lin({c, Cyclo(1)}, var_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + UniPoly::constant(*it, var_);
    return acc;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Cyclo(0));
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Cyclo(0));
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) {
    if (coeffs_.empty() || rhs.coeffs_.empty()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Cyclo> r(coeffs_.size() + rhs.coeffs_.size() - 1, Cyclo(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(r);
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Cyclo& c) {
    for (auto& a : coeffs_) a *= c;
    trim();
    return *this;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    std::vector<Cyclo> rem = a.coeffs_;
    int db = b.degree();
    if (a.degree() < db) return {UniPoly({}, a.var_), a};
    std::vector<Cyclo> q(static_cast<size_t>(a.degree() - db + 1), Cyclo(0));
    Cyclo inv = b.leading().inverse();
    for (int k = a.degree(); k >= db; --k) {
        const Cyclo c = rem[static_cast<size_t>(k)] * inv;
        if (c.is_zero()) continue;
        q[static_cast<size_t>(k - db)] = c;
        for (int i = 0; i <= db; ++i) rem[static_cast<size_t>(k - db + i)] -= c * b.coeffs_[static_cast<size_t>(i)];
    }
    rem.resize(static_cast<size_t>(db));
    return {UniPoly(std::move(q), a.var_), UniPoly(std::move(rem), a.var_)};
}

std::string UniPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Cyclo& c = coeffs_[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        std::string mono;
        if (i == 1) mono = std::string(1, var_);
        if (i > 1) mono = std::string(1, var_) + "^" + std::to_string(i);
        if (c.is_rational()) {
            Rational r = c.rational_part();
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
            os << "(" << c.to_string() << ")";
            if (!mono.empty()) os << "*" << mono;
        }
        first = false;
    }
    return os.str();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly r0 = a;
    UniPoly r1 = b;
    while (!r1.is_zero()) {
        UniPoly r2 = r0 % r1;
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return r0.monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decompose(const UniPoly& p) {
    if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "squarefree decomposition of the zero polynomial");
    std::vector<std::pair<UniPoly, int>> out;
    if (p.degree() == 0) return out;
    UniPoly f = p.monic();
    UniPoly d = f.derivative();
    UniPoly a = gcd(f, d);
    UniPoly b = f / a;
    UniPoly c = d / a;
    UniPoly e = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UniPoly g = gcd(b, e);
        if (g.degree() > 0) out.emplace_back(g, i);
        UniPoly nb = b / g;
        UniPoly nc = e / g;
        e = nc - nb.derivative();
        b = nb;
        ++i;
    }
    return out;
}

int root_multiplicity(const UniPoly& p, const Cyclo& c) {
    if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "root multiplicity in the zero polynomial");
    int m = 0;
    UniPoly q = p;
    UniPoly lin = UniPoly::linear(c, p.var());
    while (q.degree() > 0) {
        auto [quo, rem] = UniPoly::divmod(q, lin);
        if (!rem.is_zero()) break;
        q = quo;
        ++m;
    }
    return m;
}

namespace {

// Prime factorization by trial division; a leftover cofactor is treated as prime.
std::vector<std::pair<mpz_class, int>> factor_integer(mpz_class n) {
    std::vector<std::pair<mpz_class, int>> out;
    if (n < 0) n = -n;
    if (n <= 1) return out;
    for (unsigned long d = 2; d <= 1000000UL; d = (d == 2 ? 3 : d + 2)) {
        mpz_class dd(d);
        if (dd * dd > n) break;
        int e = 0;
        while (n % dd == 0) {
            n /= dd;
            ++e;
        }
        if (e) out.emplace_back(dd, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<mpz_class> divisors(const mpz_class& n, size_t cap) {
    std::vector<mpz_class> divs = {mpz_class(1)};
    for (const auto& [pr, e] : factor_integer(n)) {
        size_t base = divs.size();
        mpz_class pw = 1;
        for (int k = 1; k <= e; ++k) {
            pw *= pr;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pw);
            if (divs.size() > cap) return {};
        }
    }
    return divs;
}

Rational eval_q(const std::vector<Rational>& q, const Rational& x) {
    Rational acc = 0;
    for (auto it = q.rbegin(); it != q.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Nonzero rational roots of a polynomial with rational coefficients and nonzero constant term.
std::vector<Rational> rational_roots(std::vector<Rational> q) {
    std::vector<Rational> roots;
    while (!q.empty() && q.back() == 0) q.pop_back();
    if (q.size() < 2) return roots;
    mpz_class den = 1;
    for (const auto& c : q) den = lcm(den, mpz_class(c.get_den()));
    std::vector<mpz_class> ints;
    for (const auto& c : q) ints.emplace_back(c.get_num() * (den / c.get_den()));
    if (q.size() == 2) {
        roots.push_back(Rational(-ints[0], ints[1]));
        roots.back().canonicalize();
        return roots;
    }
    const size_t cap = 20000;
    auto num_divs = divisors(ints.front(), cap);
    auto den_divs = divisors(ints.back(), cap);
    if (num_divs.empty() || den_divs.empty()) return roots;
    std::vector<Rational> seen;
    for (const auto& a : num_divs) {
        for (const auto& b : den_divs) {
            for (int sign : {1, -1}) {
                Rational cand(a * sign, b);
                cand.canonicalize();
                if (std::find(seen.begin(), seen.end(), cand) != seen.end()) continue;
                seen.push_back(cand);
                if (eval_q(q, cand) == 0) roots.push_back(cand);
            }
        }
    }
    return roots;
}

UniPoly rational_poly(const std::vector<Rational>& v) {
    std::vector<Cyclo> c;
    c.reserve(v.size());
    for (const auto& r : v) c.emplace_back(r);
    return UniPoly(std::move(c));
}

// Rational s with p(omega*s) = 0, s != 0.
std::vector<Rational> scaled_rational_roots(const UniPoly& p, const Cyclo& omega, const FieldPtr& field) {
    UniPoly r = p.scaled_argument(omega);
    size_t dim = field ? static_cast<size_t>(field->degree()) : 1;
    UniPoly g;
    bool have = false;
    for (size_t b = 0; b < dim; ++b) {
        std::vector<Rational> coord;
        for (const auto& c : r.coeffs()) {
            Cyclo lc = c.lifted(field);
            coord.push_back(b < lc.coords().size() ? lc.coords()[b] : Rational(0));
        }
        UniPoly qb = rational_poly(coord);
        if (qb.is_zero()) continue;
        g = have ? gcd(g, qb) : qb.monic();
        have = true;
        if (g.degree() <= 0) return {};
    }
    if (!have) return {};
    std::vector<Rational> gq;
    for (const auto& c : g.coeffs()) gq.push_back(c.rational_part());
    return rational_roots(gq);
}

}  // namespace

FieldRoots roots_in_field(const UniPoly& p, const FieldPtr& field, const std::vector<Cyclo>& hints) {
    if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
    FieldRoots out;
    for (const auto& [factor, mult] : squarefree_decompose(p)) {
        UniPoly rest = factor;
        auto take = [&](const Cyclo& root) {
            for (const auto& [r, m] : out.roots) {
                if (r == root) return;
            }
            auto [quo, rem] = UniPoly::divmod(rest, UniPoly::linear(root, rest.var()));
            if (!rem.is_zero()) return;
            rest = quo;
            out.roots.emplace_back(root, mult);
        };
        if (rest.degree() > 0 && rest.coeff(0).is_zero()) take(Cyclo(0));
        for (const auto& h : hints) {
            if (rest.degree() <= 0) break;
            if (rest.eval(h).is_zero()) take(h);
        }
        long order = field ? field->root_order() : 2;
        for (long j = 0; j < order / 2 && rest.degree() > 0; ++j) {
            Cyclo omega = field ? Cyclo::root_of_unity(field, order, j) : Cyclo(1);
            for (const auto& s : scaled_rational_roots(rest, omega, field)) {
                if (rest.degree() <= 0) break;
                take(omega * Cyclo(s));
            }
        }
        if (rest.degree() > 0) {
            out.unresolved.emplace_back(rest.monic(), mult);
            out.unresolved_degree += rest.degree() * mult;
        }
    }
    std::sort(out.roots.begin(), out.roots.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

}  // namespace polartree
