#include "polartree/cyclo.hpp"

#include <numeric>
#include <sstream>

namespace polartree {

const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::FieldTooSmall: return "FieldTooSmall";
        case ErrorCode::Indeterminate: return "Indeterminate";
        case ErrorCode::TruncationTooShort: return "TruncationTooShort";
        case ErrorCode::TruncationBudgetExceeded: return "TruncationBudgetExceeded";
        case ErrorCode::UnresolvedBranch: return "UnresolvedBranch";
        case ErrorCode::InputViolatesSimplicity: return "InputViolatesSimplicity";
        case ErrorCode::NoCover: return "NoCover";
        case ErrorCode::NoPostbar: return "NoPostbar";
        case ErrorCode::NotApplicable: return "NotApplicable";
        case ErrorCode::InternalInconsistency: return "InternalInconsistency";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::NegativeExponentWithoutLaurent: return "NegativeExponentWithoutLaurent";
        case ErrorCode::SNotLargeEnough: return "SNotLargeEnough";
        case ErrorCode::NoGenericFound: return "NoGenericFound";
        case ErrorCode::PlacementUnresolved: return "PlacementUnresolved";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

std::string rational_to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

long lcm_long(long a, long b) {
    if (a == 0 || b == 0) return 0;
    return std::lcm(a, b);
}

namespace {

using QVec = std::vector<Rational>;

void trim(QVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// a / b for b monic-or-not, exact quotient assumed when called from cyclotomic_polynomial
QVec poly_divide(QVec a, const QVec& b, QVec* rem = nullptr) {
    trim(a);
    QVec q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        size_t shift = a.size() - b.size();
        Rational c = a.back() / lead;
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
    }
    if (rem) *rem = a;
    return q;
}

QVec poly_mul(const QVec& a, const QVec& b) {
    if (a.empty() || b.empty()) return {};
    QVec r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

QVec poly_sub(const QVec& a, const QVec& b) {
    QVec r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

}  // namespace

std::vector<Rational> cyclotomic_polynomial(int n) {
    if (n <= 0) fail(ErrorCode::InvalidArgument, "cyclotomic polynomial of non-positive order");
    QVec num(static_cast<size_t>(n) + 1, Rational(0));
    num[0] = -1;
    num[static_cast<size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) num = poly_divide(num, cyclotomic_polynomial(d));
    }
    return num;
}

CycloField::CycloField(int conductor) : conductor_(conductor) {
    modulus_ = cyclotomic_polynomial(conductor);
    degree_ = static_cast<int>(modulus_.size()) - 1;
    // t^degree = -(lower part of modulus)
    QVec cur(modulus_.begin(), modulus_.end() - 1);
    for (auto& c : cur) c = -c;
    for (int k = degree_; k <= 2 * degree_ - 2; ++k) {
        high_powers_.push_back(cur);
        // multiply by t and reduce
        QVec next(static_cast<size_t>(degree_) + 1, Rational(0));
        for (int i = 0; i < degree_; ++i) next[static_cast<size_t>(i) + 1] = cur[static_cast<size_t>(i)];
        Rational top = next[static_cast<size_t>(degree_)];
        next.pop_back();
        if (top != 0) {
            for (int i = 0; i < degree_; ++i) next[static_cast<size_t>(i)] -= top * modulus_[static_cast<size_t>(i)];
        }
        cur = next;
    }
}

std::shared_ptr<const CycloField> CycloField::create(int conductor) {
    if (conductor < 1) fail(ErrorCode::InvalidArgument, "field conductor must be positive");
    return std::shared_ptr<const CycloField>(new CycloField(conductor));
}

void CycloField::reduce(std::vector<Rational>& coeffs) const {
    const auto deg = static_cast<size_t>(degree_);
    if (coeffs.size() <= deg) {
        coeffs.resize(deg, Rational(0));
        return;
    }
    if (coeffs.size() > 2 * deg - 1) {
        QVec rem;
        poly_divide(coeffs, modulus_, &rem);
        rem.resize(deg, Rational(0));
        coeffs = std::move(rem);
        return;
    }
    QVec out(coeffs.begin(), coeffs.begin() + static_cast<long>(deg));
    for (size_t k = deg; k < coeffs.size(); ++k) {
        const Rational& c = coeffs[k];
        if (c == 0) continue;
        const QVec& hp = high_powers_[k - deg];
        for (size_t i = 0; i < deg; ++i) {
            if (hp[i] != 0) out[i] += c * hp[i];
        }
    }
    coeffs = std::move(out);
}

Cyclo::Cyclo(FieldPtr field, const Rational& r) : field_(std::move(field)) {
    if (field_) {
        coords_.assign(static_cast<size_t>(field_->degree()), Rational(0));
        coords_[0] = r;
    } else {
        coords_ = {r};
    }
}

Cyclo::Cyclo(FieldPtr field, std::vector<Rational> coords) : field_(std::move(field)), coords_(std::move(coords)) {
    if (field_) {
        field_->reduce(coords_);
    } else {
        if (coords_.empty()) coords_.assign(1, Rational(0));
        for (size_t i = 1; i < coords_.size(); ++i) {
            if (coords_[i] != 0) fail(ErrorCode::FieldMismatch, "non-rational coordinates without a field");
        }
        coords_.resize(1);
    }
}

Cyclo Cyclo::zeta_power(const FieldPtr& field, long k) {
    if (!field) fail(ErrorCode::FieldTooSmall, "roots of unity need a cyclotomic field");
    long n = field->conductor();
    long e = ((k % n) + n) % n;
    QVec v(static_cast<size_t>(e) + 1, Rational(0));
    v[static_cast<size_t>(e)] = 1;
    return Cyclo(field, std::move(v));
}

Cyclo Cyclo::root_of_unity(const FieldPtr& field, long order, long k) {
    if (order == 1) return Cyclo(field, Rational(1));
    if (order == 2) return Cyclo(field, Rational((k % 2 == 0) ? 1 : -1));
    if (!field || !field->has_root_of_unity(order)) {
        fail(ErrorCode::FieldTooSmall, "primitive " + std::to_string(order) + "-th root of unity is not in Q(zeta_" +
                                           std::to_string(field ? field->conductor() : 1) + ")");
    }
    long m = field->root_order();
    long step = m / order;
    long e = ((k % order) + order) % order;
    if (m == field->conductor()) return zeta_power(field, step * e);
    // N odd: zeta_{2N}^j = -zeta_N^{(j + N) / 2} for odd j, zeta_N^{j/2} for even j
    long j = step * e;
    long n = field->conductor();
    if (j % 2 == 0) return zeta_power(field, j / 2);
    return -zeta_power(field, (j + n) / 2);
}

FieldPtr Cyclo::common_field(const Cyclo& a, const Cyclo& b) {
    if (a.field_ && b.field_) {
        if (a.field_ != b.field_ && a.field_->conductor() != b.field_->conductor()) {
            fail(ErrorCode::FieldMismatch, "elements of different cyclotomic fields");
        }
        return a.field_;
    }
    return a.field_ ? a.field_ : b.field_;
}

Cyclo Cyclo::lifted(const FieldPtr& field) const {
    if (!field || field_ == field) return *this;
    if (!field_ || is_rational()) return Cyclo(field, coords_[0]);
    if (field_->conductor() == field->conductor()) return Cyclo(field, coords_);
    const Cyclo z = root_of_unity(field, field_->conductor(), 1);
    Cyclo r = zero(field);
    Cyclo zp = one(field);
    for (const auto& c : coords_) {
        if (c != 0) r += zp * Cyclo(c);
        zp *= z;
    }
    return r;
}

bool Cyclo::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

bool Cyclo::is_one() const { return is_rational() && coords_[0] == 1; }

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& rhs) {
    FieldPtr f = common_field(*this, rhs);
    if (f && !field_) *this = lifted(f);
    if (rhs.field_ || !f) {
        for (size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
    } else {
        coords_[0] += rhs.coords_[0];
    }
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& rhs) {
    FieldPtr f = common_field(*this, rhs);
    if (f && !field_) *this = lifted(f);
    if (rhs.field_ || !f) {
        for (size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
    } else {
        coords_[0] -= rhs.coords_[0];
    }
    return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& rhs) {
    FieldPtr f = common_field(*this, rhs);
    if (!f || rhs.is_rational()) {
        const Rational s = rhs.coords_[0];
        if (f && !field_) *this = lifted(f);
        for (auto& c : coords_) c *= s;
        return *this;
    }
    if (is_rational()) {
        const Rational s = coords_[0];
        *this = rhs;
        for (auto& c : coords_) c *= s;
        return *this;
    }
    QVec prod = poly_mul(coords_, rhs.coords_);
    field_ = f;
    f->reduce(prod);
    coords_ = std::move(prod);
    return *this;
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "division by zero");
    if (is_rational()) {
        Cyclo r = *this;
        r.coords_[0] = 1 / coords_[0];
        for (size_t i = 1; i < r.coords_.size(); ++i) r.coords_[i] = 0;
        return r;
    }
    // extended Euclid: find u with a*u = 1 mod Phi
    QVec r0 = field_->modulus();
    QVec r1 = coords_;
    trim(r1);
    QVec s0;          // coefficient of a for r0
    QVec s1 = {Rational(1)};
    while (!(r1.size() == 1)) {
        QVec rem;
        QVec q = poly_divide(r0, r1, &rem);
        QVec s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
        if (r1.empty()) fail(ErrorCode::InternalInconsistency, "non-invertible element in a field");
    }
    Rational c = r1[0];
    for (auto& v : s1) v /= c;
    return Cyclo(field_, s1);
}

Cyclo& Cyclo::operator/=(const Cyclo& rhs) {
    if (rhs.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero");
    return *this *= rhs.inverse();
}

Cyclo Cyclo::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclo result = field_ ? one(field_) : Cyclo(1);
    Cyclo base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

Cyclo Cyclo::galois(long k) const {
    if (!field_ || is_rational()) return *this;
    Cyclo r = zero(field_);
    for (size_t j = 0; j < coords_.size(); ++j) {
        if (coords_[j] == 0) continue;
        r += zeta_power(field_, static_cast<long>(j) * k) * Cyclo(coords_[j]);
    }
    return r;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    if (a.field_ && b.field_) {
        Cyclo::common_field(a, b);
        return a.coords_ == b.coords_;
    }
    if (!a.field_ && !b.field_) return a.coords_[0] == b.coords_[0];
    const Cyclo& withf = a.field_ ? a : b;
    const Cyclo& without = a.field_ ? b : a;
    if (!withf.is_rational()) return false;
    return withf.coords_[0] == without.coords_[0];
}

std::strong_ordering operator<=>(const Cyclo& a, const Cyclo& b) {
    size_t n = std::max(a.coords_.size(), b.coords_.size());
    static const Rational zero(0);
    for (size_t i = 0; i < n; ++i) {
        const Rational& x = i < a.coords_.size() ? a.coords_[i] : zero;
        const Rational& y = i < b.coords_.size() ? b.coords_[i] : zero;
        int c = cmp(x, y);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string Cyclo::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < coords_.size(); ++j) {
        const Rational& c = coords_[j];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (j == 0) {
            os << rational_to_string(mag);
        } else {
            if (mag != 1) os << rational_to_string(mag) << "*";
            os << "zeta";
            if (j > 1) os << "^" << j;
        }
    }
    if (first) return "0";
    return os.str();
}

}  // namespace polartree
