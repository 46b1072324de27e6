#ifndef POLARTREE_BIPOLY_HPP
#define POLARTREE_BIPOLY_HPP

#include <map>
#include <string>
#include <utility>

#include "polartree/cyclo.hpp"

namespace polartree {

/// Sparse polynomial in x, y. Negative y-exponents are allowed only in Laurent mode.
class BiPoly {
   public:
    using Key = std::pair<int, int>;  // (x-exponent, y-exponent)

    BiPoly() = default;
    explicit BiPoly(bool laurent) : laurent_(laurent) {}

    static BiPoly constant(const Cyclo& c);
    static BiPoly monomial(const Cyclo& c, int i, int j, bool laurent = false);
    static BiPoly x();
    static BiPoly y();

    bool laurent() const noexcept { return laurent_; }
    void set_laurent(bool on);
    bool is_zero() const noexcept { return terms_.empty(); }
    const std::map<Key, Cyclo>& terms() const noexcept { return terms_; }
    Cyclo coeff(int i, int j) const;
    void add_term(int i, int j, const Cyclo& c);

    int x_degree() const;
    int min_y() const;
    int max_y() const;
    bool has_negative_y() const;
    /// Largest E with y^E dividing the polynomial.
    int y_valuation() const { return min_y(); }
    /// Order in x of (F / y^E)(x, 0); -1 for the zero polynomial.
    int x_order_at_origin() const;
    /// Order of F(x, 0); -1 when F(x, 0) = 0.
    int x_order_on_axis() const;
    /// Lowest total degree of a term.
    int total_order() const;

    BiPoly dx() const;
    BiPoly dy() const;
    /// Divides by y^k (k may be negative).
    BiPoly shift_y(int k) const;
    /// F(x, y + c x)
    BiPoly sheared(const Cyclo& c) const;
    /// F(x * y^s, y)
    BiPoly x_scaled_by_y(int s) const;
    BiPoly pow(unsigned e) const;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& rhs);
    BiPoly& operator-=(const BiPoly& rhs);
    BiPoly& operator*=(const BiPoly& rhs);
    BiPoly& operator*=(const Cyclo& c);

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }
    friend BiPoly operator*(BiPoly a, const Cyclo& c) { return a *= c; }
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

    /// Parseable text, highest x-degree first.
    std::string to_string() const;

   private:
    void check_exponent(int j) const;

    std::map<Key, Cyclo> terms_;
    bool laurent_ = false;
};

/// f_y * g_x - f_x * g_y
BiPoly jacobian(const BiPoly& f, const BiPoly& g);

}  // namespace polartree

#endif
