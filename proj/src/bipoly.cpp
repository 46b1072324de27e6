#include "polartree/bipoly.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <vector>

namespace polartree {

BiPoly BiPoly::constant(const Cyclo& c) { return monomial(c, 0, 0); }

BiPoly BiPoly::monomial(const Cyclo& c, int i, int j, bool laurent) {
    BiPoly p(laurent);
    p.add_term(i, j, c);
    return p;
}

BiPoly BiPoly::x() { return monomial(Cyclo(1), 1, 0); }
BiPoly BiPoly::y() { return monomial(Cyclo(1), 0, 1); }

void BiPoly::set_laurent(bool on) {
    if (!on && has_negative_y()) {
        fail(ErrorCode::NegativeExponentWithoutLaurent, "negative y-exponent outside Laurent mode");
    }
    laurent_ = on;
}

void BiPoly::check_exponent(int j) const {
    if (j < 0 && !laurent_) fail(ErrorCode::NegativeExponentWithoutLaurent, "negative y-exponent outside Laurent mode");
}

Cyclo BiPoly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Cyclo(0) : it->second;
}

void BiPoly::add_term(int i, int j, const Cyclo& c) {
    if (c.is_zero()) return;
    if (i < 0) fail(ErrorCode::InvalidArgument, "negative x-exponent");
    check_exponent(j);
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int BiPoly::x_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

int BiPoly::min_y() const {
    if (terms_.empty()) return 0;
    int m = INT_MAX;
    for (const auto& [k, c] : terms_) m = std::min(m, k.second);
    return m;
}

int BiPoly::max_y() const {
    int m = INT_MIN;
    for (const auto& [k, c] : terms_) m = std::max(m, k.second);
    return terms_.empty() ? 0 : m;
}

bool BiPoly::has_negative_y() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.second < 0; });
}

int BiPoly::x_order_at_origin() const {
    if (terms_.empty()) return -1;
    int e = min_y();
    int best = INT_MAX;
    for (const auto& [k, c] : terms_)
        if (k.second == e) best = std::min(best, k.first);
    return best;
}

int BiPoly::x_order_on_axis() const {
    int best = INT_MAX;
    for (const auto& [k, c] : terms_)
        if (k.second == 0) best = std::min(best, k.first);
    return best == INT_MAX ? -1 : best;
}

int BiPoly::total_order() const {
    int best = INT_MAX;
    for (const auto& [k, c] : terms_) best = std::min(best, k.first + k.second);
    return terms_.empty() ? -1 : best;
}

BiPoly BiPoly::dx() const {
    BiPoly r(laurent_);
    for (const auto& [k, c] : terms_)
        if (k.first > 0) r.add_term(k.first - 1, k.second, c * Cyclo(static_cast<long>(k.first)));
    return r;
}

BiPoly BiPoly::dy() const {
    BiPoly r(true);
    for (const auto& [k, c] : terms_)
        if (k.second != 0) r.add_term(k.first, k.second - 1, c * Cyclo(static_cast<long>(k.second)));
    r.laurent_ = laurent_ || r.has_negative_y();
    return r;
}

BiPoly BiPoly::shift_y(int k) const {
    BiPoly r(true);
    for (const auto& [key, c] : terms_) r.add_term(key.first, key.second - k, c);
    r.laurent_ = laurent_ || r.has_negative_y();
    return r;
}

BiPoly BiPoly::sheared(const Cyclo& c) const {
    if (c.is_zero()) return *this;
    // (y + c x)^j expanded binomially
    BiPoly r(laurent_);
    BiPoly base = BiPoly::y() + BiPoly::x() * c;
    std::map<int, BiPoly> powers;
    for (const auto& [k, coef] : terms_) {
        if (k.second < 0) fail(ErrorCode::InvalidArgument, "shear of a Laurent polynomial");
        auto it = powers.find(k.second);
        if (it == powers.end()) it = powers.emplace(k.second, base.pow(static_cast<unsigned>(k.second))).first;
        r += BiPoly::monomial(coef, k.first, 0) * it->second;
    }
    return r;
}

BiPoly BiPoly::x_scaled_by_y(int s) const {
    BiPoly r(true);
    for (const auto& [k, c] : terms_) r.add_term(k.first, k.second + s * k.first, c);
    r.laurent_ = laurent_ || r.has_negative_y();
    return r;
}

BiPoly BiPoly::pow(unsigned e) const {
    BiPoly result = BiPoly::constant(Cyclo(1));
    result.laurent_ = laurent_;
    BiPoly base = *this;
    while (e) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e) base *= base;
    }
    return result;
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
    laurent_ = laurent_ || rhs.laurent_;
    for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
    laurent_ = laurent_ || rhs.laurent_;
    for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, -c);
    return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& rhs) {
    BiPoly r(laurent_ || rhs.laurent_);
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : rhs.terms_) r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    *this = std::move(r);
    return *this;
}

BiPoly& BiPoly::operator*=(const Cyclo& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

namespace {

std::string monomial_text(int i, int j) {
    std::string s;
    if (i == 1) s = "x";
    if (i > 1) s = "x^" + std::to_string(i);
    if (j != 0) {
        if (!s.empty()) s += "*";
        s += "y";
        if (j < 0) s += "^(" + std::to_string(j) + ")";
        if (j > 1) s += "^" + std::to_string(j);
    }
    return s;
}

}  // namespace

std::string BiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Key, Cyclo>> items(terms_.begin(), terms_.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.first.first != b.first.first) return a.first.first > b.first.first;
        return a.first.second < b.first.second;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : items) {
        std::string mono = monomial_text(k.first, k.second);
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

BiPoly jacobian(const BiPoly& f, const BiPoly& g) { return f.dy() * g.dx() - f.dx() * g.dy(); }

}  // namespace polartree
