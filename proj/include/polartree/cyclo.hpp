#ifndef POLARTREE_CYCLO_HPP
#define POLARTREE_CYCLO_HPP

#include <gmpxx.h>

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "polartree/error.hpp"

namespace polartree {

using Rational = mpq_class;

std::string rational_to_string(const Rational& r);
Rational make_rational(long num, long den = 1);
long lcm_long(long a, long b);

/// The cyclotomic field Q(zeta_N), zeta_N = exp(2 pi i / N), in the power basis
/// 1, zeta, ..., zeta^(phi(N)-1). Immutable once created.
class CycloField {
   public:
    static std::shared_ptr<const CycloField> create(int conductor);

    int conductor() const noexcept { return conductor_; }
    int degree() const noexcept { return degree_; }
    /// Largest M such that a primitive M-th root of unity lies in the field.
    int root_order() const noexcept { return conductor_ % 2 == 0 ? conductor_ : 2 * conductor_; }
    bool has_root_of_unity(long order) const noexcept { return order > 0 && root_order() % order == 0; }

    const std::vector<Rational>& modulus() const noexcept { return modulus_; }

    /// Reduces a coefficient vector (low to high) modulo the cyclotomic polynomial.
    void reduce(std::vector<Rational>& coeffs) const;

   private:
    explicit CycloField(int conductor);

    int conductor_;
    int degree_;
    std::vector<Rational> modulus_;
    // t^k mod Phi_N for k in [degree, 2*degree - 2]
    std::vector<std::vector<Rational>> high_powers_;
};

using FieldPtr = std::shared_ptr<const CycloField>;

std::vector<Rational> cyclotomic_polynomial(int n);

/// Element of Q(zeta_N). An element without a field is a plain rational and is
/// lifted into the other operand's field on mixed arithmetic.
class Cyclo {
   public:
    Cyclo() : coords_(1) {}
    Cyclo(long v) : coords_{Rational(v)} {}  // NOLINT(google-explicit-constructor)
    Cyclo(const Rational& r) : coords_{r} {}  // NOLINT(google-explicit-constructor)
    Cyclo(FieldPtr field, const Rational& r);
    Cyclo(FieldPtr field, std::vector<Rational> coords);

    static Cyclo zero(const FieldPtr& field) { return Cyclo(field, Rational(0)); }
    static Cyclo one(const FieldPtr& field) { return Cyclo(field, Rational(1)); }
    /// zeta_N^k
    static Cyclo zeta_power(const FieldPtr& field, long k);
    /// zeta_order^k; FieldTooSmall when the field lacks such a root of unity.
    static Cyclo root_of_unity(const FieldPtr& field, long order, long k);

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<Rational>& coords() const noexcept { return coords_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Coefficient of 1 in the power basis.
    const Rational& rational_part() const { return coords_[0]; }

    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& rhs);
    Cyclo& operator-=(const Cyclo& rhs);
    Cyclo& operator*=(const Cyclo& rhs);
    Cyclo& operator/=(const Cyclo& rhs);
    Cyclo inverse() const;
    Cyclo pow(long e) const;

    /// Image under the automorphism zeta -> zeta^k (gcd(k, N) = 1).
    Cyclo galois(long k) const;
    Cyclo lifted(const FieldPtr& field) const;

    std::string to_string() const;

    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
    friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }
    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }
    /// Lexicographic order on power-basis coordinates; used for canonical sorting.
    friend std::strong_ordering operator<=>(const Cyclo& a, const Cyclo& b);

   private:
    static FieldPtr common_field(const Cyclo& a, const Cyclo& b);

    FieldPtr field_;
    std::vector<Rational> coords_;
};

}  // namespace polartree

#endif
