#ifndef POLARTREE_JACORACLE_HPP
#define POLARTREE_JACORACLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "polartree/baranalysis.hpp"
#include "polartree/npsolve.hpp"

namespace polartree {

/// The pair as polynomials, with nu offsets from unit factors y^k (nonzero only
/// after a meromorphic reduction).
struct PairPolys {
    BiPoly f;
    BiPoly g;
    int f_offset = 0;
    int g_offset = 0;
    bool meromorphic = false;
    int s = 0;
};

/// Polynomial whose roots are the polar roots of the pair.
BiPoly effective_jacobian(const PairPolys& pair);

struct PolarRecord {
    /// Full series, or the exact prefix when the next coefficient is algebraic.
    PuiseuxSeries series;
    std::optional<Rational> algebraic_at;
    UniPoly psi;
    int count = 1;
    int multiplicity = 1;
    Placement placement;

    bool resolved() const { return !algebraic_at.has_value(); }
    /// (bar, point) pairs climbed, including the leave point when known.
    std::vector<std::pair<int, Cyclo>> climbs() const;
    bool climbs_bar(int bar) const;
};

struct OracleResult {
    BiPoly J;
    std::vector<PolarRecord> records;
    int E = 0;
    int K = 0;
    /// Roots of J coinciding with roots of f*g; kept as records of kind Root.
    int coinciding = 0;
    Rational trunc;
};

/// Expands J past `start_trunc`, doubling the truncation until every root is placed.
OracleResult polar_roots(const BiPoly& J, const Tree& tree, const Rational& start_trunc, int max_doublings = 6);

struct Check {
    std::string family;
    std::string subject;
    std::string predicted;
    std::string observed;
    bool pass = true;
};

struct VerificationReport {
    std::vector<Check> checks;
    bool pass() const;
    int failures() const;
};

VerificationReport verify(const Tree& tree, const TreeAnalysis& an, const OracleResult& oracle, const PairPolys& pair);

/// Observed number of records climbing `bar` at `z`.
int observed_at(const OracleResult& oracle, int bar, const Cyclo& z);

/// O(J(xi)) = nu_f(xi) + nu_g(xi) - h - 1 for xi = lambda_B + z*y^h with M_B(z) != 0.
bool identity_check(const PairPolys& pair, const Tree& tree, const TreeAnalysis& an, int bar, const Cyclo& z);

/// Arc between B and its postbar at z_k, cut halfway between the two heights.
PuiseuxSeries arc_sample(const Tree& tree, int bar, const Cyclo& zk);

/// nu_F(xi) including the unit offset.
Rational nu_along(const PairPolys& pair, bool for_f, const PuiseuxSeries& xi);

}  // namespace polartree

#endif
