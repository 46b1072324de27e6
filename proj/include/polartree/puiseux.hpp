#ifndef POLARTREE_PUISEUX_HPP
#define POLARTREE_PUISEUX_HPP

#include <optional>
#include <string>
#include <vector>

#include "polartree/bipoly.hpp"
#include "polartree/cyclo.hpp"
#include "polartree/unipoly.hpp"

namespace polartree {

struct SeriesTerm {
    Rational exp;
    Cyclo coeff;
};

/// Truncated fractional power series in y. Terms below trunc are exact; nothing
/// is known at or beyond trunc. An absent trunc means the series is exact.
class PuiseuxSeries {
   public:
    PuiseuxSeries() = default;
    PuiseuxSeries(std::vector<SeriesTerm> terms, std::optional<Rational> trunc);

    static PuiseuxSeries monomial(const Cyclo& c, const Rational& e);

    const std::vector<SeriesTerm>& terms() const noexcept { return terms_; }
    const std::optional<Rational>& trunc() const noexcept { return trunc_; }
    bool is_exact() const noexcept { return !trunc_.has_value(); }
    bool knows(const Rational& e) const { return !trunc_ || e < *trunc_; }

    /// Coefficient of y^e; TruncationTooShort when e is at or beyond trunc.
    Cyclo coefficient(const Rational& e) const;
    /// Smallest exponent with a nonzero coefficient; nullopt for the exact zero
    /// series; Indeterminate when all known terms vanish.
    std::optional<Rational> order() const;

    /// Terms below h, truncated at min(trunc, h).
    PuiseuxSeries below(const Rational& h) const;
    /// Terms below h as an exact arc.
    PuiseuxSeries exact_below(const Rational& h) const;
    PuiseuxSeries with_term(const Cyclo& c, const Rational& e) const;
    PuiseuxSeries with_trunc(std::optional<Rational> t) const;

    long denominator_lcm() const;

    PuiseuxSeries operator-() const;
    friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
    friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b);
    friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b);

    /// "c1*y^(p/q) + ... + O(y^t)"
    std::string to_string() const;

   private:
    std::vector<SeriesTerm> terms_;
    std::optional<Rational> trunc_;
};

std::string exponent_to_string(const Rational& e);

/// O_y(a - b); nullopt means infinity. Indeterminate when the difference vanishes
/// up to a finite truncation.
std::optional<Rational> contact_order(const PuiseuxSeries& a, const PuiseuxSeries& b);

/// Contact of a with the arc lambda truncated at h, capped at h. Requires a known below h.
Rational capped_contact(const PuiseuxSeries& a, const PuiseuxSeries& lambda, const Rational& h);

/// Termwise c*y^(n/D) -> c*theta^n*y^(n/D), theta = zeta_D^k.
PuiseuxSeries conjugate_series(const PuiseuxSeries& a, long k, long D, const FieldPtr& field);

/// y-order of F(xi(y), y); the unknown tail of xi has order >= xi.trunc.
/// nullopt when xi is exact and F(xi, y) vanishes identically.
/// TruncationTooShort when the tail could cancel the leading term.
std::optional<Rational> order_along_arc(const BiPoly& F, const PuiseuxSeries& xi);

/// y-order of F(base(y) + z*y^h, y) for generic z (base taken as exact), with the
/// leading coefficient as a polynomial in z.
struct GenericOrder {
    Rational order;
    UniPoly leading;
};
GenericOrder generic_order(const BiPoly& F, const PuiseuxSeries& base, const Rational& h);

/// y-order of F(prefix(y) + r*y^e + tail, y) for every root r of psi; the tail has
/// order > e when has_tail. Indeterminate when the roots of psi disagree.
Rational order_at_algebraic(const BiPoly& F, const PuiseuxSeries& prefix, const Rational& e, const UniPoly& psi,
                            bool has_tail);

}  // namespace polartree

#endif
