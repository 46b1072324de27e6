#ifndef POLARTREE_NPSOLVE_HPP
#define POLARTREE_NPSOLVE_HPP

#include <utility>
#include <vector>

#include "polartree/bipoly.hpp"
#include "polartree/puiseux.hpp"
#include "polartree/unipoly.hpp"

namespace polartree {

struct NewtonPolygon {
    /// Lattice points (x-degree, y-order) from the lowest vertex towards the y-axis.
    std::vector<std::pair<int, int>> vertices;
    /// Edge slopes in increasing order; edge k joins vertices k and k+1.
    std::vector<Rational> slopes;
};

NewtonPolygon newton_polygon(const BiPoly& F);

struct ExpandedRoot {
    PuiseuxSeries series;
    /// Multiplicity as a root of F.
    int multiplicity = 1;
    /// Number of distinct roots that agree with `series` up to its truncation.
    int cluster = 1;
    int count() const { return multiplicity * cluster; }
};

/// Roots sharing an exact prefix whose next coefficient, at y^exponent, is a root
/// of psi outside the working field.
struct PartialRoot {
    PuiseuxSeries prefix;
    Rational exponent;
    UniPoly psi;
    int multiplicity = 1;
    int count() const { return psi.degree() * multiplicity; }
};

struct ExpandOptions {
    FieldPtr field;
    bool allow_unresolved = false;
    std::vector<Cyclo> hints;
    int stage_cap = 64;
};

struct Expansion {
    std::vector<ExpandedRoot> roots;
    std::vector<PartialRoot> partial;
    /// Largest power of y dividing F.
    int E = 0;
    /// Number of roots of positive order, counted with multiplicity.
    int x_order = 0;
    int resolved_count() const;
    int unresolved_count() const;
};

/// Newton-Puiseux roots of positive order, exact below `target`.
/// Raises UnresolvedBranchError unless unresolved branches are allowed.
Expansion expand_roots(const BiPoly& F, const Rational& target, const ExpandOptions& options);

/// Squarefree-in-x components of F (y-content removed) with multiplicities.
std::vector<std::pair<BiPoly, int>> multiplicity_split(const BiPoly& F);

/// Primitive gcd in K[y][x] of polynomials without negative exponents.
BiPoly bivariate_gcd(const BiPoly& a, const BiPoly& b);

}  // namespace polartree

#endif
