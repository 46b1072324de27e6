#ifndef POLARTREE_UNIPOLY_HPP
#define POLARTREE_UNIPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "polartree/cyclo.hpp"

namespace polartree {

/// Dense univariate polynomial over Q(zeta_N), coefficients low to high.
class UniPoly {
   public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Cyclo> coeffs, char var = 'z');

    static UniPoly constant(const Cyclo& c, char var = 'z');
    static UniPoly monomial(const Cyclo& c, int degree, char var = 'z');
    /// z - root
    static UniPoly linear(const Cyclo& root, char var = 'z');

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    char var() const noexcept { return var_; }
    void set_var(char v) noexcept { var_ = v; }
    const std::vector<Cyclo>& coeffs() const noexcept { return coeffs_; }
    Cyclo coeff(int i) const;
    const Cyclo& leading() const;

    Cyclo eval(const Cyclo& z) const;
    UniPoly derivative() const;
    UniPoly monic() const;
    /// p(c * z)
    UniPoly scaled_argument(const Cyclo& c) const;
    /// p(z + c)
    UniPoly shifted(const Cyclo& c) const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& rhs);
    UniPoly& operator-=(const UniPoly& rhs);
    UniPoly& operator*=(const UniPoly& rhs);
    UniPoly& operator*=(const Cyclo& c);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
    friend UniPoly operator*(UniPoly a, const Cyclo& c) { return a *= c; }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Quotient and remainder; throws DivisionByZero for a zero divisor.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
    UniPoly operator/(const UniPoly& b) const { return divmod(*this, b).first; }
    UniPoly operator%(const UniPoly& b) const { return divmod(*this, b).second; }

    std::string to_string() const;

   private:
    void trim();

    std::vector<Cyclo> coeffs_;
    char var_ = 'z';
};

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Squarefree factors with multiplicities (Yun). Factors are monic.
std::vector<std::pair<UniPoly, int>> squarefree_decompose(const UniPoly& p);

struct FieldRoots {
    std::vector<std::pair<Cyclo, int>> roots;
    /// Monic factors without located roots, with multiplicities.
    std::vector<std::pair<UniPoly, int>> unresolved;
    int unresolved_degree = 0;
};

/// Roots of p in Q(zeta_N). Searches zeta^j * rational and the given hints;
/// everything else is reported in `unresolved`.
FieldRoots roots_in_field(const UniPoly& p, const FieldPtr& field, const std::vector<Cyclo>& hints = {});

/// Multiplicity of c as a root of p (repeated exact division).
int root_multiplicity(const UniPoly& p, const Cyclo& c);

}  // namespace polartree

#endif
